// Acceptance suite: one verdict line per criterion, all checks exact
// (tolerance zero, rational arithmetic throughout). Returns nonzero if any
// criterion fails.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "bialg/cli.hpp"
#include "bialg/poisson.hpp"
#include "bialg/report.hpp"
#include "property_laws.hpp"

using namespace bialg;
using namespace bialg::testing;

namespace {

struct Checker {
    int checks = 0;
    int failures = 0;
    std::string first;

    void require(bool ok, const std::string& label) {
        ++checks;
        if (!ok) {
            ++failures;
            if (first.empty()) first = label;
        }
    }
};

bool vec_eq(const Vec& a, std::vector<long> expect) {
    if (a.size() != expect.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != Rational(expect[static_cast<long>(i)])) return false;
    return true;
}

// ---------------------------------------------------------------- criterion 1
void euler_top_suite(Checker& c) {
    LieAlgebra g = book();
    Cobracket delta = euler_delta();
    Operator n = euler_n();
    Operator tn = n.transpose();

    c.require(classify(g, delta, n).level == Level::weak_NL, "classification weak_NL");
    c.require(torsion(g, n).is_zero(), "torsion(n) = 0");

    LieAlgebra dual = dualize(g, delta.values());
    Cochain dual_torsion = torsion(dual, tn);
    c.require(!dual_torsion.is_zero(), "torsion(tn) on so(3) nonzero");
    c.require(ce_coboundary(dual, dual_torsion).is_zero(), "torsion(tn) d-closed");

    c.require(is_cocycle(g.bracket(), delta).ok, "d delta = 0 under [.,.]");
    c.require(is_cocycle(deformed_bracket(g, n), delta).ok, "d delta = 0 under [.,.]_n");
    c.require(concomitant_delta_n(g, delta, n, 1).ok, "C(delta,n) = 0");

    // [.,.]_n table
    StructureTensor dn = deformed_bracket(g, n);
    c.require(vec_is_zero(dn.bracket_basis(0, 1)), "[X1,X2]_n = 0");
    c.require(vec_eq(dn.bracket_basis(0, 2), {-1, 0, 0}), "[X1,X3]_n = -X1");
    c.require(vec_eq(dn.bracket_basis(1, 2), {0, -1, 0}), "[X2,X3]_n = -X2");

    // [.,.]^tn table
    StructureTensor dtn = dual_deformed_bracket(delta, n, 1);
    c.require(vec_eq(dtn.bracket_basis(0, 1), {0, -1, 0}), "[X^1,X^2]^tn = -X^2");
    c.require(vec_eq(dtn.bracket_basis(0, 2), {0, 0, 1}), "[X^1,X^3]^tn = X^3");
    c.require(vec_eq(dtn.bracket_basis(1, 2), {-2, 0, 0}), "[X^2,X^3]^tn = -2X^1");

    // delta_tn table
    Cobracket d1 = deform_delta_tn(delta, n, 1);
    c.require(d1.at(0) == bivector(3, {{1, 2, -2}}), "delta_tn(X1) = -2 X2^X3");
    c.require(d1.at(1) == bivector(3, {{0, 1, -1}}), "delta_tn(X2) = -X1^X2");
    c.require(d1.at(2) == bivector(3, {{0, 2, 1}}), "delta_tn(X3) = X1^X3");

    // tn^2 table
    Operator tn2 = tn * tn;
    c.require(vec_eq(tn2.apply(vec_basis(3, 0)), {-1, 0, -1}), "tn2 X^1 = -X^1 - X^3");
    c.require(vec_eq(tn2.apply(vec_basis(3, 1)), {-1, 1, -2}), "tn2 X^2 = -X^1 + X^2 - 2X^3");
    c.require(vec_eq(tn2.apply(vec_basis(3, 2)), {1, 0, 0}), "tn2 X^3 = X^1");

    // [.,.]^{tn^2} table
    StructureTensor dtn2 = dual_deformed_bracket(delta, n, 2);
    c.require(vec_eq(dtn2.bracket_basis(0, 1), {0, -2, 0}), "[X^1,X^2]^tn2 = -2X^2");
    c.require(vec_eq(dtn2.bracket_basis(0, 2), {1, -2, 2}), "[X^1,X^3]^tn2 = X^1 - 2X^2 + 2X^3");
    c.require(vec_eq(dtn2.bracket_basis(1, 2), {-2, -1, 0}), "[X^2,X^3]^tn2 = -2X^1 - X^2");

    // delta_{tn^2} table
    Cobracket d2 = deform_delta_tn(delta, n, 2);
    c.require(d2.at(0) == bivector(3, {{0, 2, 1}, {1, 2, -2}}), "delta_tn2(X1)");
    c.require(d2.at(1) == bivector(3, {{0, 1, -2}, {0, 2, -2}, {1, 2, -1}}), "delta_tn2(X2)");
    c.require(d2.at(2) == bivector(3, {{0, 2, 2}}), "delta_tn2(X3)");

    // coadjoint table (all nine entries; four are nonzero)
    const StructureTensor& b = g.bracket();
    c.require(ad_star(b, vec_basis(3, 0)).apply(vec_basis(3, 0)) == vec_zero(3), "ad*_{X1}X^1 = 0");
    c.require(vec_eq(ad_star(b, vec_basis(3, 0)).apply(vec_basis(3, 1)), {0, 1, 0}), "ad*_{X1}X^2 = X^2");
    c.require(vec_eq(ad_star(b, vec_basis(3, 0)).apply(vec_basis(3, 2)), {0, 0, 1}), "ad*_{X1}X^3 = X^3");
    c.require(ad_star(b, vec_basis(3, 1)).apply(vec_basis(3, 0)) == vec_zero(3), "ad*_{X2}X^1 = 0");
    c.require(vec_eq(ad_star(b, vec_basis(3, 1)).apply(vec_basis(3, 1)), {-1, 0, 0}), "ad*_{X2}X^2 = -X^1");
    c.require(ad_star(b, vec_basis(3, 1)).apply(vec_basis(3, 2)) == vec_zero(3), "ad*_{X2}X^3 = 0");
    c.require(ad_star(b, vec_basis(3, 2)).apply(vec_basis(3, 0)) == vec_zero(3), "ad*_{X3}X^1 = 0");
    c.require(ad_star(b, vec_basis(3, 2)).apply(vec_basis(3, 1)) == vec_zero(3), "ad*_{X3}X^2 = 0");
    c.require(vec_eq(ad_star(b, vec_basis(3, 2)).apply(vec_basis(3, 2)), {-1, 0, 0}), "ad*_{X3}X^3 = -X^1");

    // deformed coadjoint entries
    c.require(vec_eq(deformed_adjoint_star(b, n, 1, vec_basis(3, 0)).apply(vec_basis(3, 0)), {0, 0, 1}),
              "(ad^n_{X1})*X^1 = X^3");
    c.require(vec_eq(deformed_adjoint_star(b, n, 1, vec_basis(3, 1)).apply(vec_basis(3, 1)), {0, 0, 1}),
              "(ad^n_{X2})*X^2 = X^3");
    c.require(vec_eq(deformed_adjoint_star(b, n, 1, vec_basis(3, 2)).apply(vec_basis(3, 0)), {-1, 0, 0}),
              "(ad^n_{X3})*X^1 = -X^1");
    c.require(vec_eq(deformed_adjoint_star(b, n, 1, vec_basis(3, 2)).apply(vec_basis(3, 1)), {0, -1, 0}),
              "(ad^n_{X3})*X^2 = -X^2");

    // underline-ad* table (all nine entries)
    auto u = [&](int xi) { return underline_ad_star(b, n, vec_basis(3, xi)); };
    c.require(vec_eq(u(0).apply(vec_basis(3, 0)), {0, 0, 1}), "u_{X1}X^1 = X^3");
    c.require(u(0).apply(vec_basis(3, 1)) == vec_zero(3), "u_{X1}X^2 = 0");
    c.require(vec_eq(u(0).apply(vec_basis(3, 2)), {1, 0, 0}), "u_{X1}X^3 = X^1");
    c.require(u(1).apply(vec_basis(3, 0)) == vec_zero(3), "u_{X2}X^1 = 0");
    c.require(vec_eq(u(1).apply(vec_basis(3, 1)), {1, 0, 1}), "u_{X2}X^2 = X^1 + X^3");
    c.require(u(1).apply(vec_basis(3, 2)) == vec_zero(3), "u_{X2}X^3 = 0");
    c.require(vec_eq(u(2).apply(vec_basis(3, 0)), {-1, 0, 0}), "u_{X3}X^1 = -X^1");
    c.require(vec_eq(u(2).apply(vec_basis(3, 1)), {-1, 0, 0}), "u_{X3}X^2 = -X^1");
    c.require(vec_eq(u(2).apply(vec_basis(3, 2)), {1, 0, 1}), "u_{X3}X^3 = X^1 + X^3");

    // further cocycles: delta_{tn^2} in the base cohomology, delta in the n^2 cohomology
    c.require(is_cocycle(g.bracket(), d2).ok, "delta_tn2 is a 1-cocycle");
    c.require(is_cocycle(deformed_bracket(g, n.pow(2)), delta).ok, "delta is a 1-cocycle in the n^2 cohomology");
}

// ---------------------------------------------------------------- criterion 2
void r4_suite(Checker& c) {
    LieAlgebra g = r4();
    Operator n = r4_n();
    Operator tn = n.transpose();
    RMatrix rm = make_rmatrix(g, r4_r());

    c.require(rm.cybe_certified, "[[r,r]] = 0");
    ComposeResult comp = compose_nr(rm, n);
    c.require(comp.nr.cybe_certified, "[[nr,nr]] = 0");
    c.require(comp.nr.r == bivector(4, {{0, 1, -1}, {0, 2, 1}, {0, 3, -1}, {1, 2, 1}}),
              "nr = -X1^X2 + X1^X3 - X1^X4 + X2^X3");
    c.require(concomitant_r_n(rm, n).is_zero(), "C(r,n) = 0 via all three routes");
    c.require(n * rm.r_sharp == rm.r_sharp * tn, "n o r# = r# o tn");

    StructureTensor rb = r_bracket(rm);
    c.require(vec_eq(rb.bracket_basis(0, 1), {0, 0, -1, 0}), "[X^1,X^2]_r = -X^3");
    c.require(vec_eq(rb.bracket_basis(0, 3), {0, 0, 0, 1}), "[X^1,X^4]_r = X^4");
    bool rest_zero = true;
    for (const auto& key : increasing_tuples(4, 2))
        if (!(key == Multivector::Key{0, 1}) && !(key == Multivector::Key{0, 3}) &&
            !vec_is_zero(rb.bracket_basis(key[0], key[1])))
            rest_zero = false;
    c.require(rest_zero, "remaining [.,.]_r entries vanish");

    StructureTensor nrb = r_bracket(comp.nr);
    c.require(vec_eq(nrb.bracket_basis(0, 1), {0, 0, -1, 0}), "[X^1,X^2]_nr = -X^3");
    c.require(vec_eq(nrb.bracket_basis(0, 2), {0, 0, 0, -1}), "[X^1,X^3]_nr = -X^4");
    c.require(vec_eq(nrb.bracket_basis(0, 3), {0, 0, 0, 1}), "[X^1,X^4]_nr = X^4");

    StructureTensor dn = deformed_bracket(g, n);
    c.require(vec_eq(dn.bracket_basis(0, 3), {1, 0, 0, 0}), "[X1,X4]_n = X1");
    c.require(vec_eq(dn.bracket_basis(1, 3), {1, 0, 0, 0}), "[X2,X4]_n = X1");
    c.require(vec_eq(dn.bracket_basis(2, 3), {0, 1, 0, 0}), "[X3,X4]_n = X2");

    c.require(vec_eq(tn.apply(vec_basis(4, 0)), {1, 1, 1, 0}), "tn X^1 = X^1 + X^2 + X^3");
    c.require(vec_eq(tn.apply(vec_basis(4, 1)), {0, 1, 0, 1}), "tn X^2 = X^2 + X^4");
    c.require(vec_eq(tn.apply(vec_basis(4, 2)), {0, 0, 1, -1}), "tn X^3 = X^3 - X^4");
    c.require(vec_eq(tn.apply(vec_basis(4, 3)), {0, 0, 0, 1}), "tn X^4 = X^4");

    c.require(torsion_wrt(rb, tn).is_zero(), "tn has zero torsion on (g*, [.,.]_r)");

    auto ad_eq = ad_equivariant(g.bracket(), n);
    c.require(!ad_eq.ok && ad_eq.witness_a == 2 && ad_eq.witness_b == 3,
              "n not ad-equivariant, witness (X3,X4)");
    Cobracket delta_r = coboundary_cobracket(rm);
    auto ad_star_eq = ad_star_equivariant(delta_r, n);
    c.require(!ad_star_eq.ok && ad_star_eq.witness_h1 == 0 && ad_star_eq.witness_h2 == 2,
              "tn not ad*-equivariant, witness (X^1,X^3)");

    c.require(classify(g, delta_r, n).level == Level::NL, "classification NL");

    HierarchyGrid grid = build_hierarchy(g, delta_r, n, 3);
    c.require(grid.all_cells_valid, "hierarchy depth 3: every cell valid");
    c.require(grid.all_pairs_compatible, "hierarchy depth 3: every bracket pair compatible");
}

// ---------------------------------------------------------------- criterion 3
void solvable22_suite(Checker& c) {
    LieAlgebra g = s22();
    Cobracket delta = s22_delta();
    Operator n = s22_n();

    c.require(is_cocycle(g.bracket(), delta).ok, "delta is a 1-cocycle");
    StructureTensor dual = delta.dual_tensor();
    c.require(vec_eq(dual.bracket_basis(0, 1), {0, 2, 0, 0}), "[X^1,X^2]_g* = 2X^2");
    c.require(vec_eq(dual.bracket_basis(2, 3), {0, 0, 1, 0}), "[X^3,X^4]_g* = X^3");
    c.require(ad_equivariant(g.bracket(), n).ok, "n is ad-equivariant");
    c.require(torsion_wrt(dual, n.transpose()).is_zero(), "[[tn,tn]] = 0 on the dual");
    for (int k = 1; k <= 3; ++k)
        c.require(concomitant_delta_n(g, delta, n, k).ok,
                  "C(delta,n^" + std::to_string(k) + ") = 0");

    HierarchyGrid grid = build_hierarchy(g, delta, n, 4);
    c.require(grid.all_cells_valid, "hierarchy depth 4: every cell valid");
    c.require(grid.all_pairs_compatible, "hierarchy depth 4: every bracket pair compatible");
}

// ---------------------------------------------------------------- criterion 4
void randomized_laws(Checker& c) {
    auto run = [&](const char* name, LawResult r) {
        c.require(r.failures == 0 && r.cases >= 200,
                  std::string(name) + " (" + std::to_string(r.cases) + " cases, " +
                      std::to_string(r.failures) + " failures" +
                      (r.first_failure.empty() ? "" : "; first: " + r.first_failure) + ")");
    };
    run("torsion 2-cocycle <=> deformed Jacobi", law_torsion_cocycle(200));
    run("CYBE <=> sharp intertwiner", law_cybe_sharp(200));
    run("deformed cocycle equivalence", law_deformed_cocycle_equivalence(200));
    run("iota anti-homomorphism", law_iota_antihom(200));
    run("d o d = 0", law_d_squared(200));
    run("C(r,n) triple-route agreement", law_rn_concomitant_routes(200));
    run("recursion-operator torsion identity on (r, nr)", law_rn_identity(200));
    run("cobracket relation under composition hypotheses", law_nmr_relation(200));
}

// ---------------------------------------------------------------- criterion 5
void bihamiltonian_certificate(Checker& c) {
    StructureTensor dual = euler_delta().dual_tensor();
    StructureTensor dual_tn = deformed_bracket(dual, euler_n().transpose());
    PolyVectorField field = euler_top_field();

    HamiltonianSolutions a = solve_hamiltonian(kks(dual), field);
    c.require(a.solvable, "euler field is hamiltonian for the dual structure");
    if (a.solvable) {
        PolyVectorField back = hamiltonian_field(kks(dual), a.particular);
        bool match = true;
        for (int i = 0; i < 3; ++i)
            if (!(back.comp[static_cast<size_t>(i)] == field.comp[static_cast<size_t>(i)])) match = false;
        c.require(match, "dual-structure hamiltonian reproduces the field");
    }

    HamiltonianSolutions b = solve_hamiltonian(kks(dual_tn), field);
    c.require(b.solvable, "euler field is hamiltonian for the tn structure");
    if (b.solvable) {
        PolyVectorField back = hamiltonian_field(kks(dual_tn), b.particular);
        bool match = true;
        for (int i = 0; i < 3; ++i)
            if (!(back.comp[static_cast<size_t>(i)] == field.comp[static_cast<size_t>(i)])) match = false;
        c.require(match, "tn-structure hamiltonian reproduces the field");
    }

    c.require(jacobi_defect(dual + dual_tn).is_zero(), "sum of the two poisson tensors satisfies Jacobi");
}

// ---------------------------------------------------------------- criterion 6
void cli_contract(Checker& c) {
    auto cli = [](std::vector<std::string> args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return std::tuple<int, std::string, std::string>(code, out.str(), err.str());
    };
    auto temp = [](const std::string& name, const std::string& bytes) {
        auto path = std::filesystem::temp_directory_path() / name;
        std::ofstream f(path, std::ios::binary);
        f << bytes;
        return path.string();
    };

    for (const auto& name : catalog_names()) {
        auto [ecode, exported, eerr] = cli({"catalog", "export", name});
        c.require(ecode == 0, "catalog export " + name);
        std::string path = temp("bialg_acc_" + name + ".json", exported);
        auto [ccode, cout_, cerr_] = cli({"check", path});
        c.require(ccode == 0, "export -> check round trip for " + name + " exits 0");
    }

    std::string et = temp("bialg_acc_det.json", serialize_document(catalog_entry("euler_top")));
    auto [a1, o1, e1] = cli({"classify", et});
    auto [a2, o2, e2] = cli({"classify", et});
    c.require(a1 == 0 && a1 == a2 && o1 == o2, "byte-identical classify reports across runs");
    auto [j1, jo1, je1] = cli({"--json", "check", et});
    auto [j2, jo2, je2] = cli({"--json", "check", et});
    c.require(j1 == 0 && jo1 == jo2, "byte-identical json reports across runs");

    std::string malformed = temp("bialg_acc_bad.json", "{this is not json");
    auto [mcode, mout, merr] = cli({"check", malformed, "--jacobi"});
    c.require(mcode == 2, "malformed input exits 2");
    c.require(merr.find("input error") != std::string::npos, "malformed input names the problem");

    std::string bad_field = temp("bialg_acc_field.json",
                                 R"({"name":"x","dimension":2,"basis":["a","b"],
"bracket":[{"on":[1,1],"value":{}}]})");
    auto [fcode, fout, ferr] = cli({"check", bad_field, "--jacobi"});
    c.require(fcode == 2, "non-canonical index pair exits 2");
    c.require(ferr.find("bracket[0].on") != std::string::npos, "diagnostic names the offending field");
}

struct Criterion {
    std::string name;
    std::function<void(Checker&)> fn;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"criterion 1: euler-top suite", euler_top_suite},
        {"criterion 2: R^4 coboundary suite", r4_suite},
        {"criterion 3: solvable 2+2 suite", solvable22_suite},
        {"criterion 4: randomized structural laws (>= 200 cases per law)", randomized_laws},
        {"criterion 5: bi-hamiltonian certificate", bihamiltonian_certificate},
        {"criterion 6: CLI contract", cli_contract},
    };
    int failed = 0;
    for (const auto& crit : criteria) {
        Checker c;
        std::string error;
        try {
            crit.fn(c);
        } catch (const std::exception& e) {
            error = e.what();
        }
        bool ok = error.empty() && c.failures == 0;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << crit.name << " (" << c.checks << " checks";
        if (!ok) {
            std::cout << ", " << c.failures << " failed";
            if (!c.first.empty()) std::cout << "; first: " << c.first;
            if (!error.empty()) std::cout << "; exception: " << error;
        }
        std::cout << ")\n";
        if (!ok) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
