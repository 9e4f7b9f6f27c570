#include "bialg/bialgebra.hpp"

#include <sstream>

#include "bialg/errors.hpp"

namespace bialg {

namespace {

std::string index_name(int i) {
    return "X" + std::to_string(i + 1);
}

std::string pair_name(int i, int j) {
    return "(" + index_name(i) + "," + index_name(j) + ")";
}

std::string first_defect_witness(const Cochain& defect) {
    if (defect.is_zero()) return "";
    const auto& [key, value] = *defect.values().begin();
    std::ostringstream os;
    os << "defect at (";
    for (size_t s = 0; s < key.size(); ++s) os << (s ? "," : "") << index_name(key[s]);
    os << "): component (";
    const auto& [ck, cv] = *value.components().begin();
    for (size_t s = 0; s < ck.size(); ++s) os << (s ? "," : "") << ck[s] + 1;
    os << ") = " << cv.str();
    return os.str();
}

}  // namespace

Cobracket::Cobracket(int dim, std::vector<Multivector> values) : dim_(dim), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != dim) throw DimensionMismatch("Cobracket: one bivector per basis vector");
    for (const auto& v : values_)
        if (v.dim() != dim || v.degree() != 2) throw DimensionMismatch("Cobracket: values must be bivectors");
}

Cobracket Cobracket::zero(int dim) {
    return Cobracket(dim, std::vector<Multivector>(static_cast<size_t>(dim), Multivector(dim, 2)));
}

Multivector Cobracket::apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim_) throw DimensionMismatch("Cobracket::apply");
    Multivector out(dim_, 2);
    for (int i = 0; i < dim_; ++i)
        if (!x[static_cast<size_t>(i)].is_zero()) out += x[static_cast<size_t>(i)] * values_[static_cast<size_t>(i)];
    return out;
}

StructureTensor Cobracket::dual_tensor() const {
    return dual_tensor_of(dim_, values_);
}

Cochain Cobracket::as_cochain() const {
    Cochain c(dim_, 1, 2);
    for (int i = 0; i < dim_; ++i) c.set({i}, values_[static_cast<size_t>(i)]);
    return c;
}

bool Cobracket::is_zero() const {
    for (const auto& v : values_)
        if (!v.is_zero()) return false;
    return true;
}

Cobracket operator+(const Cobracket& a, const Cobracket& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("Cobracket::+");
    std::vector<Multivector> vals;
    for (int i = 0; i < a.dim_; ++i) vals.push_back(a.at(i) + b.at(i));
    return Cobracket(a.dim_, std::move(vals));
}

Cobracket operator*(const Rational& c, const Cobracket& a) {
    std::vector<Multivector> vals;
    for (const auto& v : a.values_) vals.push_back(c * v);
    return Cobracket(a.dim_, std::move(vals));
}

bool operator==(const Cobracket& a, const Cobracket& b) {
    return a.dim_ == b.dim_ && a.values_ == b.values_;
}

CocycleReport is_cocycle(const StructureTensor& bracket, const Cobracket& delta) {
    if (bracket.dim() != delta.dim()) throw DimensionMismatch("is_cocycle: dimension");
    if (!jacobi_defect(bracket).is_zero())
        throw UncertifiedBracket("is_cocycle: supplied bracket does not satisfy Jacobi");
    CocycleReport rep;
    rep.defect = ce_coboundary(bracket, delta.as_cochain());
    rep.ok = rep.defect.is_zero();
    if (!rep.ok) rep.witness = "cocycle " + first_defect_witness(rep.defect);
    return rep;
}

BialgebraReport is_lie_bialgebra(const LieAlgebra& g, const Cobracket& delta) {
    g.require_certified();
    BialgebraReport rep;
    CocycleReport coc = is_cocycle(g.bracket(), delta);
    rep.cocycle_ok = coc.ok;

    StructureTensor dual = delta.dual_tensor();
    Cochain dual_defect = jacobi_defect(dual);
    rep.dual_jacobi_ok = dual_defect.is_zero();

    // independent pairing route to the cocycle condition
    bool pairing_ok = true;
    const int d = g.dim();
    for (int x1 = 0; x1 < d && pairing_ok; ++x1)
        for (int x2 = x1 + 1; x2 < d && pairing_ok; ++x2)
            for (int h1 = 0; h1 < d && pairing_ok; ++h1)
                for (int h2 = h1 + 1; h2 < d && pairing_ok; ++h2) {
                    Vec e1 = vec_basis(d, x1), e2 = vec_basis(d, x2);
                    Vec f1 = vec_basis(d, h1), f2 = vec_basis(d, h2);
                    Operator a1 = ad_star(g.bracket(), e1), a2 = ad_star(g.bracket(), e2);
                    Rational lhs = pairing(dual.bracket(f1, f2), g.bracket().bracket_basis(x1, x2));
                    Rational rhs = -pairing(dual.bracket(a1.apply(f1), f2), e2) -
                                   pairing(dual.bracket(f1, a1.apply(f2)), e2) +
                                   pairing(dual.bracket(a2.apply(f1), f2), e1) +
                                   pairing(dual.bracket(f1, a2.apply(f2)), e1);
                    if (lhs != rhs) pairing_ok = false;
                }
    if (pairing_ok != rep.cocycle_ok)
        throw Error("is_lie_bialgebra: pairing identity disagrees with the cocycle route (internal)");

    rep.ok = rep.cocycle_ok && rep.dual_jacobi_ok;
    if (!rep.cocycle_ok)
        rep.witness = coc.witness;
    else if (!rep.dual_jacobi_ok)
        rep.witness = "dual Jacobi " + first_defect_witness(dual_defect);
    return rep;
}

Cobracket deform_delta_tn(const Cobracket& delta, const Operator& n, int k) {
    if (n.rows() != delta.dim() || n.cols() != delta.dim()) throw DimensionMismatch("deform_delta_tn: dimension");
    if (k < 1) throw Error("deform_delta_tn: power must be >= 1");
    const int d = delta.dim();
    Operator nk = n.pow(k);
    Operator tnk = nk.transpose();
    std::vector<Multivector> vals;
    for (int i = 0; i < d; ++i)
        vals.push_back(iota(tnk, delta.at(i)) - delta.apply(nk.apply(vec_basis(d, i))));
    Cobracket direct(d, std::move(vals));

    if (k >= 2 && torsion_wrt(delta.dual_tensor(), n.transpose()).is_zero()) {
        // one-step recursion, valid when tn is Nijenhuis on the dual bracket
        Cobracket prev = deform_delta_tn(delta, n, k - 1);
        Operator tn = n.transpose();
        std::vector<Multivector> rec;
        for (int i = 0; i < d; ++i)
            rec.push_back(iota(tn, prev.at(i)) - prev.apply(n.apply(vec_basis(d, i))));
        if (!(Cobracket(d, std::move(rec)) == direct))
            throw Error("deform_delta_tn: recursion disagrees with the direct formula (internal)");
    }
    return direct;
}

StructureTensor dual_deformed_bracket(const Cobracket& delta, const Operator& n, int j) {
    if (j < 1) throw Error("dual_deformed_bracket: power must be >= 1");
    StructureTensor deformed = deformed_bracket(delta.dual_tensor(), n.pow(j).transpose());
    if (!(deform_delta_tn(delta, n, j).dual_tensor() == deformed))
        throw Error("dual_deformed_bracket: transpose duality violated (internal)");
    return deformed;
}

CocycleReport concomitant_delta_n(const LieAlgebra& g, const Cobracket& delta, const Operator& n, int k) {
    if (n.rows() != g.dim() || delta.dim() != g.dim()) throw DimensionMismatch("concomitant_delta_n: dimension");
    if (k < 1) throw Error("concomitant_delta_n: power must be >= 1");
    const int d = g.dim();
    Operator nk = n.pow(k);
    Operator tnk = nk.transpose();
    CocycleReport rep;
    rep.defect = Cochain(d, 2, 2);
    for (const auto& key : increasing_tuples(d, 2)) {
        Vec e1 = vec_basis(d, key[0]), e2 = vec_basis(d, key[1]);
        Operator u1 = underline_ad_star(g.bracket(), n, e1);
        Operator u2 = underline_ad_star(g.bracket(), n, e2);
        Multivector v = iota(tnk * u1, delta.at(key[1]));
        v -= iota(tnk * u2, delta.at(key[0]));
        v -= iota(u1, delta.apply(nk.apply(e2)));
        v += iota(u2, delta.apply(nk.apply(e1)));
        if (!v.is_zero()) rep.defect.set(key, v);
    }
    rep.ok = rep.defect.is_zero();
    if (!rep.ok) rep.witness = "C(delta,n^" + std::to_string(k) + ") " + first_defect_witness(rep.defect);
    return rep;
}

AdStarEquivariance ad_star_equivariant(const Cobracket& delta, const Operator& n) {
    if (n.rows() != delta.dim()) throw DimensionMismatch("ad_star_equivariant: dimension");
    const int d = delta.dim();
    Operator tn = n.transpose();
    for (int xi = 0; xi < d; ++xi) {
        Multivector dnx = delta.apply(n.apply(vec_basis(d, xi)));
        for (int h1 = 0; h1 < d; ++h1)
            for (int h2 = 0; h2 < d; ++h2) {
                if (h1 == h2) continue;
                Rational lhs = delta.at(xi).eval({vec_basis(d, h1), tn.apply(vec_basis(d, h2))});
                Rational rhs = dnx.component({h1, h2});
                if (lhs != rhs) return {false, xi, h1, h2};
            }
    }
    return {};
}

std::string to_string(Level level) {
    switch (level) {
        case Level::not_bialgebra: return "not_bialgebra";
        case Level::lie_bialgebra: return "lie_bialgebra";
        case Level::almost_NL: return "almost_NL";
        case Level::weak_NL: return "weak_NL";
        default: return "NL";
    }
}

Classification classify(const LieAlgebra& g, const Cobracket& delta, const Operator& n) {
    Classification cls;
    BialgebraReport base = is_lie_bialgebra(g, delta);
    if (!base.ok) {
        cls.level = Level::not_bialgebra;
        cls.witness = base.witness;
        return cls;
    }
    cls.level = Level::lie_bialgebra;

    NijenhuisCandidate cand = classify_operator(g, n);
    if (cand.status == NijStatus::neither) {
        cls.witness = "n is not even almost Nijenhuis: torsion is not a 2-cocycle";
        return cls;
    }

    CocycleReport deformed = is_cocycle(deformed_bracket(g, n), delta);
    if (!deformed.ok) {
        cls.witness = "delta is not a 1-cocycle in the deformed cohomology: " + deformed.witness;
        return cls;
    }

    LieAlgebra dual = dualize(g, delta.values());
    OperatorConcomitant dual_conc = concomitant_n_ad(dual, n.transpose());
    if (!dual_conc.is_zero()) {
        auto [i, j] = dual_conc.entries.begin()->first;
        cls.witness = "C(tn, ad*) != 0 on the dual at " + pair_name(i, j);
        return cls;
    }
    cls.level = Level::almost_NL;

    CocycleReport com = concomitant_delta_n(g, delta, n, 1);
    if (!com.ok) {
        cls.witness = com.witness;
        return cls;
    }
    cls.level = Level::weak_NL;

    Cochain dual_torsion = torsion_wrt(delta.dual_tensor(), n.transpose());
    if (!dual_torsion.is_zero()) {
        cls.witness = "torsion of tn on the dual bracket is nonzero: " + first_defect_witness(dual_torsion);
        return cls;
    }
    cls.level = Level::NL;
    cls.witness = "all conditions hold";
    return cls;
}

HierarchyGrid build_hierarchy(const LieAlgebra& g, const Cobracket& delta, const Operator& n,
                              int depth, bool force) {
    if (depth < 0) throw Error("build_hierarchy: depth must be >= 0");
    if (!force) {
        Classification cls = classify(g, delta, n);
        if (cls.level != Level::NL)
            throw Error("build_hierarchy: classification is " + to_string(cls.level) +
                        ", not NL; pass force for exploratory runs");
    }
    HierarchyGrid grid;
    grid.depth = depth;
    for (int i = 0; i <= depth; ++i)
        for (int j = 0; i + j <= depth; ++j) {
            BialgebraCandidate cell;
            cell.i = i;
            cell.j = j;
            cell.primal_bracket = i == 0 ? g.bracket() : deformed_bracket(g.bracket(), n.pow(i));
            cell.cobracket = j == 0 ? delta : deform_delta_tn(delta, n, j);
            cell.primal_lie = jacobi_defect(cell.primal_bracket).is_zero();
            cell.dual_lie = jacobi_defect(cell.cobracket.dual_tensor()).is_zero();
            cell.cocycle = cell.primal_lie && is_cocycle(cell.primal_bracket, cell.cobracket).ok;
            grid.all_cells_valid = grid.all_cells_valid && cell.valid();
            grid.cells.push_back(std::move(cell));
        }
    for (int a = 0; a <= depth; ++a)
        for (int b = a + 1; b <= depth; ++b) {
            StructureTensor sum = (a == 0 ? g.bracket() : deformed_bracket(g.bracket(), n.pow(a))) +
                                  (b == 0 ? g.bracket() : deformed_bracket(g.bracket(), n.pow(b)));
            bool compatible = jacobi_defect(sum).is_zero();
            grid.all_pairs_compatible = grid.all_pairs_compatible && compatible;
            grid.pair_compatibility.emplace_back(a, b, compatible);
        }
    return grid;
}

EquivalenceReport equivalence_suite(const LieAlgebra& g, const Cobracket& delta, const Operator& n) {
    EquivalenceReport rep;
    bool hypotheses = is_lie_bialgebra(g, delta).ok && classify_operator(g, n).status != NijStatus::neither;
    bool nl_input = hypotheses && classify(g, delta, n).level == Level::NL;
    for (int k = 1; k <= 3; ++k) {
        EquivalenceRow row;
        row.k = k;
        StructureTensor bnk = deformed_bracket(g.bracket(), n.pow(k));
        row.applicable = jacobi_defect(bnk).is_zero();
        row.tn_deformed_cocycle = is_cocycle(g.bracket(), deform_delta_tn(delta, n, k)).ok;
        if (row.applicable) {
            row.deformed_cohomology = is_cocycle(bnk, delta).ok;
            row.agree = row.tn_deformed_cocycle == row.deformed_cohomology;
            // the k = 1 equivalence needs only a bialgebra with (almost)
            // Nijenhuis n; the higher powers are guaranteed for NL input
            if (!row.agree && ((k == 1 && hypotheses) || nl_input)) rep.consistent = false;
            if (nl_input) {
                for (int i = 0; i <= k; ++i) {
                    int j = k - i;
                    StructureTensor bi = i == 0 ? g.bracket() : deformed_bracket(g.bracket(), n.pow(i));
                    Cobracket dj = j == 0 ? delta : deform_delta_tn(delta, n, j);
                    bool cell = jacobi_defect(bi).is_zero() && is_cocycle(bi, dj).ok;
                    row.double_cells.emplace_back(i, j, cell);
                    if (cell != row.tn_deformed_cocycle) rep.consistent = false;
                }
            }
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace bialg
