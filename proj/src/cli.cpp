#include "bialg/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "bialg/document.hpp"
#include "bialg/errors.hpp"
#include "bialg/poisson.hpp"
#include "bialg/report.hpp"
#include "bialg/yang_baxter.hpp"

namespace bialg {

namespace {

std::string format_lin(const std::vector<std::string>& names, const Vec& v) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        Rational c = v[i];
        if (first) {
            if (c < Rational(0)) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < Rational(0) ? " - " : " + ");
            if (c < Rational(0)) c = -c;
        }
        first = false;
        if (c != Rational(1)) os << c.str() << " ";
        os << names[i];
    }
    return first ? "0" : os.str();
}

std::string format_bivector(const std::vector<std::string>& names, const Multivector& m) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, coeff] : m.components()) {
        Rational c = coeff;
        if (first) {
            if (c < Rational(0)) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < Rational(0) ? " - " : " + ");
            if (c < Rational(0)) c = -c;
        }
        first = false;
        if (c != Rational(1)) os << c.str() << " ";
        os << names[static_cast<size_t>(key[0])] << "^" << names[static_cast<size_t>(key[1])];
    }
    return first ? "0" : os.str();
}

std::vector<std::string> dual_names(const std::vector<std::string>& names) {
    std::vector<std::string> out;
    for (const auto& n : names) out.push_back(n + "*");
    return out;
}

std::string bracket_table(const std::vector<std::string>& names, const StructureTensor& t,
                          const std::string& label) {
    std::ostringstream os;
    os << label << ":\n";
    bool any = false;
    for (const auto& key : increasing_tuples(t.dim(), 2)) {
        Vec v = t.bracket_basis(key[0], key[1]);
        if (vec_is_zero(v)) continue;
        any = true;
        os << "  [" << names[static_cast<size_t>(key[0])] << "," << names[static_cast<size_t>(key[1])]
           << "] = " << format_lin(names, v) << "\n";
    }
    if (!any) os << "  (abelian)\n";
    return os.str();
}

struct LoadedProblem {
    ProblemDocument doc;
    LieAlgebra algebra;
    std::string digest;
};

LoadedProblem load_problem(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string bytes = buf.str();
    ProblemDocument doc = parse_document(bytes);
    return {doc, document_algebra(doc), digest_hex(bytes)};
}

// The classify/hierarchy commands accept either an explicit cobracket or a
// coboundary one derived from the r-matrix.
Cobracket problem_cobracket(const LoadedProblem& p) {
    if (p.doc.cobracket) return document_cobracket(p.doc);
    if (p.doc.r_matrix) {
        p.algebra.require_certified();
        return coboundary_cobracket(make_rmatrix(p.algebra, document_rmatrix(p.doc)));
    }
    throw SchemaError("document \"" + p.doc.name + "\" has neither cobracket nor r_matrix");
}

void emit(const Report& rep, bool json, bool quiet, std::ostream& out) {
    if (quiet) return;
    out << (json ? rep.render_json() : rep.render_text());
}

int exit_code(const Report& rep) {
    if (rep.executed() == 0) return 2;
    return rep.failed() == 0 ? 0 : 1;
}

std::string witness_detail(const Cochain& defect, const std::vector<std::string>& names) {
    if (defect.is_zero()) return "";
    const auto& [key, value] = *defect.values().begin();
    std::ostringstream os;
    os << "first defect at (";
    for (size_t s = 0; s < key.size(); ++s)
        os << (s ? "," : "") << names[static_cast<size_t>(key[s])];
    os << ")";
    return os.str();
}

int cmd_check(const LoadedProblem& p, bool jacobi, bool cocycle, bool nijenhuis, bool cybe,
              bool json, bool quiet, std::ostream& out) {
    bool any_flag = jacobi || cocycle || nijenhuis || cybe;
    if (!any_flag) {
        jacobi = true;
        cocycle = p.doc.cobracket.has_value();
        nijenhuis = p.doc.op.has_value();
        cybe = p.doc.r_matrix.has_value();
    }
    Report rep;
    rep.command = "check " + p.doc.name;
    rep.input_digest = p.digest;
    const auto& names = p.algebra.basis_names();

    const bool certified = p.algebra.jacobi_certified();
    if (jacobi) {
        Cochain defect = jacobi_defect(p.algebra.bracket());
        rep.checks.push_back({"jacobi", defect.is_zero(), witness_detail(defect, names)});
    }
    if (cocycle) {
        Cobracket delta = document_cobracket(p.doc);  // SchemaError when absent
        if (!certified) {
            rep.checks.push_back({"cocycle", false, "bracket is not Jacobi-certified"});
        } else {
            BialgebraReport br = is_lie_bialgebra(p.algebra, delta);
            rep.checks.push_back({"cocycle", br.cocycle_ok, br.cocycle_ok ? "" : br.witness});
            rep.checks.push_back({"dual_jacobi", br.dual_jacobi_ok,
                                  br.dual_jacobi_ok || !br.cocycle_ok ? "" : br.witness});
        }
    }
    if (nijenhuis) {
        Operator n = document_operator(p.doc);
        if (!certified) {
            rep.checks.push_back({"nijenhuis", false, "bracket is not Jacobi-certified"});
        } else {
            NijenhuisCandidate cand = classify_operator(p.algebra, n);
            rep.checks.push_back({"nijenhuis", cand.status != NijStatus::neither,
                                  "status " + to_string(cand.status) + " on " + p.doc.name});
            if (p.doc.cobracket) {
                Cobracket delta = document_cobracket(p.doc);
                StructureTensor dual = delta.dual_tensor();
                if (jacobi_defect(dual).is_zero()) {
                    LieAlgebra dual_alg = dualize(p.algebra, delta.values());
                    NijenhuisCandidate dual_cand = classify_operator(dual_alg, n.transpose());
                    rep.checks.push_back({"nijenhuis_dual", dual_cand.status != NijStatus::neither,
                                          "status " + to_string(dual_cand.status) + " for tn on the dual"});
                }
            }
        }
    }
    if (cybe) {
        Multivector r = document_rmatrix(p.doc);
        Multivector sq = schouten_bivector(p.algebra.bracket(), r, r);
        rep.checks.push_back({"cybe", sq.is_zero(), sq.is_zero() ? "" : "[[r,r]] != 0"});
    }
    emit(rep, json, quiet, out);
    return exit_code(rep);
}

int cmd_classify(const LoadedProblem& p, bool json, bool quiet, std::ostream& out) {
    Cobracket delta = problem_cobracket(p);
    Operator n = document_operator(p.doc);
    Classification cls = classify(p.algebra, delta, n);
    Report rep;
    rep.command = "classify " + p.doc.name;
    rep.input_digest = p.digest;
    rep.classification = to_string(cls.level);
    rep.checks.push_back({"classify", cls.level != Level::not_bialgebra, cls.witness});
    emit(rep, json, quiet, out);
    return exit_code(rep);
}

int cmd_hierarchy(const LoadedProblem& p, int depth, bool force, bool json, bool quiet,
                  std::ostream& out) {
    Cobracket delta = problem_cobracket(p);
    Operator n = document_operator(p.doc);
    if (!force) {
        Classification cls = classify(p.algebra, delta, n);
        if (cls.level != Level::NL)
            throw SchemaError("classification is " + to_string(cls.level) +
                              ", not NL; pass --force for exploratory runs");
    }
    HierarchyGrid grid = build_hierarchy(p.algebra, delta, n, depth, true);
    Report rep;
    rep.command = "hierarchy " + p.doc.name + " depth " + std::to_string(depth);
    rep.input_digest = p.digest;
    std::ostringstream os;
    for (const auto& cell : grid.cells) {
        os << "cell (" << cell.i << "," << cell.j << "): primal="
           << (cell.primal_lie ? "ok" : "FAIL") << " dual=" << (cell.dual_lie ? "ok" : "FAIL")
           << " cocycle=" << (cell.cocycle ? "ok" : "FAIL") << " -> "
           << (cell.valid() ? "valid" : "invalid") << "\n";
        rep.checks.push_back({"cell(" + std::to_string(cell.i) + "," + std::to_string(cell.j) + ")",
                              cell.valid(), ""});
    }
    for (const auto& [a, b, ok] : grid.pair_compatibility) {
        os << "compatible brackets (n^" << a << ", n^" << b << "): " << (ok ? "ok" : "FAIL") << "\n";
        rep.checks.push_back({"compat(" + std::to_string(a) + "," + std::to_string(b) + ")", ok, ""});
    }
    rep.sections.push_back(os.str());
    emit(rep, json, quiet, out);
    return exit_code(rep);
}

int cmd_catalog(const std::string& action, const std::string& name, bool json, bool quiet,
                std::ostream& out) {
    if (action == "list") {
        if (!quiet)
            for (const auto& n : catalog_names()) out << n << "\n";
        return 0;
    }
    ProblemDocument doc = catalog_entry(name);
    if (action == "export") {
        if (!quiet) out << serialize_document(doc);
        return 0;
    }
    // show: print every table derivable from the stored data
    LieAlgebra g = document_algebra(doc);
    const auto& names = g.basis_names();
    std::ostringstream os;
    os << doc.name << " (dimension " << doc.dimension << ")\n";
    os << bracket_table(names, g.bracket(), "bracket");
    if (doc.cobracket) {
        Cobracket delta = document_cobracket(doc);
        os << "cobracket:\n";
        for (int i = 0; i < g.dim(); ++i)
            os << "  delta(" << names[static_cast<size_t>(i)]
               << ") = " << format_bivector(names, delta.at(i)) << "\n";
        os << bracket_table(dual_names(names), delta.dual_tensor(), "dual bracket");
    }
    if (doc.op) {
        Operator n = document_operator(doc);
        os << "operator:\n";
        for (int j = 0; j < g.dim(); ++j) {
            Vec col = n.apply(vec_basis(g.dim(), j));
            os << "  n(" << names[static_cast<size_t>(j)] << ") = " << format_lin(names, col) << "\n";
        }
        Operator tn = n.transpose();
        auto dn = dual_names(names);
        for (int j = 0; j < g.dim(); ++j)
            os << "  tn(" << dn[static_cast<size_t>(j)]
               << ") = " << format_lin(dn, tn.apply(vec_basis(g.dim(), j))) << "\n";
        os << bracket_table(names, deformed_bracket(g.bracket(), n), "deformed bracket [.,.]_n");
        if (doc.cobracket) {
            Cobracket delta = document_cobracket(doc);
            os << bracket_table(dual_names(names), deformed_bracket(delta.dual_tensor(), tn),
                                "deformed dual bracket [.,.]^tn");
            Cobracket dtn = deform_delta_tn(delta, n, 1);
            os << "deformed cobracket delta_tn:\n";
            for (int i = 0; i < g.dim(); ++i)
                os << "  delta_tn(" << names[static_cast<size_t>(i)]
                   << ") = " << format_bivector(names, dtn.at(i)) << "\n";
        }
    }
    if (doc.r_matrix) {
        Multivector r = document_rmatrix(doc);
        os << "r_matrix: r = " << format_bivector(names, r) << "\n";
        RMatrix rm = make_rmatrix(g, r);
        os << "  cybe: " << (rm.cybe_certified ? "satisfied" : "violated") << "\n";
        os << bracket_table(dual_names(names), r_bracket(rm), "r-bracket [.,.]_r");
    }
    if (!quiet) {
        if (json) {
            Report rep;
            rep.command = "catalog show " + name;
            rep.sections.push_back(os.str());
            out << rep.render_json();
        } else {
            out << os.str();
        }
    }
    return 0;
}

int cmd_dynamics(bool hamiltonians, bool json, bool quiet, std::ostream& out) {
    ProblemDocument doc = catalog_entry("euler_top");
    LieAlgebra g = document_algebra(doc);
    Cobracket delta = document_cobracket(doc);
    Operator n = document_operator(doc);

    StructureTensor dual = delta.dual_tensor();
    StructureTensor dual_tn = deformed_bracket(dual, n.transpose());
    LinearPoisson p0 = kks(dual);
    LinearPoisson p1 = kks(dual_tn);
    PolyVectorField field = euler_top_field();

    Report rep;
    rep.command = "dynamics euler-top";
    std::ostringstream os;
    os << "field:\n";
    for (int i = 0; i < 3; ++i)
        os << "  dx" << i + 1 << "/dt = " << field.comp[static_cast<size_t>(i)].str() << "\n";
    auto poisson_table = [&](const LinearPoisson& p, const std::string& label) {
        os << label << ":\n";
        for (const auto& key : increasing_tuples(3, 2))
            os << "  {x" << key[0] + 1 << ",x" << key[1] + 1
               << "} = " << p.coordinate_bracket(key[0], key[1]).str() << "\n";
    };
    poisson_table(p0, "poisson (dual bracket)");
    poisson_table(p1, "poisson (tn-deformed dual bracket)");

    HamiltonianSolutions s0 = solve_hamiltonian(p0, field);
    HamiltonianSolutions s1 = solve_hamiltonian(p1, field);
    rep.checks.push_back({"hamiltonian_dual", s0.solvable, s0.solvable ? "H = " + s0.particular.str() : "inconsistent"});
    rep.checks.push_back({"hamiltonian_tn", s1.solvable, s1.solvable ? "H = " + s1.particular.str() : "inconsistent"});
    bool sum_jacobi = jacobi_defect(dual + dual_tn).is_zero();
    rep.checks.push_back({"poisson_sum_jacobi", sum_jacobi, ""});

    if (hamiltonians) {
        auto dump = [&](const HamiltonianSolutions& s, const std::string& label) {
            os << label << ":\n";
            if (!s.solvable) {
                os << "  inconsistent\n";
                return;
            }
            os << "  particular: H = " << s.particular.str() << "\n";
            for (const auto& h : s.homogeneous) os << "  casimir direction: " << h.str() << "\n";
        };
        dump(s0, "hamiltonians (dual bracket)");
        dump(s1, "hamiltonians (tn-deformed dual bracket)");
    }
    rep.sections.push_back(os.str());
    emit(rep, json, quiet, out);
    return exit_code(rep);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact calculus for Lie bialgebras with Nijenhuis deformations"};
    app.name(kToolName);
    bool json = false, quiet = false;
    app.add_flag("--json", json, "machine-readable report");
    app.add_flag("--quiet", quiet, "suppress output, exit code only");
    app.require_subcommand(1);

    std::string file;
    bool f_jacobi = false, f_cocycle = false, f_nijenhuis = false, f_cybe = false;
    auto* check = app.add_subcommand("check", "run selected verifications on a problem file");
    check->add_option("file", file)->required();
    check->add_flag("--jacobi", f_jacobi);
    check->add_flag("--cocycle", f_cocycle);
    check->add_flag("--nijenhuis", f_nijenhuis);
    check->add_flag("--cybe", f_cybe);

    auto* classify_cmd = app.add_subcommand("classify", "classification ladder for (g, delta, n)");
    classify_cmd->add_option("file", file)->required();

    int depth = 2;
    bool force = false;
    auto* hier = app.add_subcommand("hierarchy", "verify the (i,j) grid of deformed bialgebras");
    hier->add_option("file", file)->required();
    hier->add_option("--depth", depth);
    hier->add_flag("--force", force);

    std::string cat_action, cat_name;
    auto* cat = app.add_subcommand("catalog", "built-in examples");
    cat->add_option("action", cat_action)->required()->check(CLI::IsMember({"list", "show", "export"}));
    cat->add_option("name", cat_name);

    std::string dyn_system;
    bool hamiltonians = false;
    auto* dyn = app.add_subcommand("dynamics", "linear Poisson structures and Hamiltonian search");
    dyn->add_option("system", dyn_system)->required()->check(CLI::IsMember({"euler-top"}));
    dyn->add_flag("--hamiltonians", hamiltonians);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*check) {
            LoadedProblem p = load_problem(file);
            return cmd_check(p, f_jacobi, f_cocycle, f_nijenhuis, f_cybe, json, quiet, out);
        }
        if (*classify_cmd) {
            return cmd_classify(load_problem(file), json, quiet, out);
        }
        if (*hier) {
            return cmd_hierarchy(load_problem(file), depth, force, json, quiet, out);
        }
        if (*cat) {
            if (cat_action != "list" && cat_name.empty()) {
                err << "error: catalog " << cat_action << " needs a name\n";
                return 2;
            }
            return cmd_catalog(cat_action, cat_name, json, quiet, out);
        }
        if (*dyn) {
            return cmd_dynamics(hamiltonians, json, quiet, out);
        }
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const SchemaError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownName& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace bialg
