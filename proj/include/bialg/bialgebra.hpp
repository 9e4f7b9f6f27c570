#pragma once

#include "bialg/nijenhuis.hpp"

namespace bialg {

// Linear map delta: g -> ^2 g. Transposition gives the dual bracket through
// [eta1,eta2]_{g*}(xi) = delta(xi)(eta1,eta2).
class Cobracket {
public:
    Cobracket() = default;
    Cobracket(int dim, std::vector<Multivector> values);
    static Cobracket zero(int dim);

    int dim() const { return dim_; }
    const Multivector& at(int i) const { return values_[static_cast<size_t>(i)]; }
    const std::vector<Multivector>& values() const { return values_; }
    Multivector apply(const Vec& x) const;

    StructureTensor dual_tensor() const;
    Cochain as_cochain() const;  // arity 1, degree 2
    bool is_zero() const;

    friend Cobracket operator+(const Cobracket& a, const Cobracket& b);
    friend Cobracket operator*(const Rational& c, const Cobracket& a);
    friend bool operator==(const Cobracket& a, const Cobracket& b);

private:
    int dim_ = 0;
    std::vector<Multivector> values_;
};

struct CocycleReport {
    bool ok = true;
    Cochain defect;       // arity 2, degree 2
    std::string witness;  // first failing basis pair and component, if any
};

// 1-cocycle test of delta for the cohomology of the SUPPLIED bracket:
//   d delta(x1,x2) = ad2_{x1} delta(x2) - ad2_{x2} delta(x1) - delta([x1,x2]).
// The bracket must satisfy Jacobi (throws UncertifiedBracket otherwise); this
// single entry point serves the original and every deformed cohomology.
CocycleReport is_cocycle(const StructureTensor& bracket, const Cobracket& delta);

struct BialgebraReport {
    bool cocycle_ok = false;
    bool dual_jacobi_ok = false;
    bool ok = false;
    std::string witness;
};

// Cocycle condition plus dual Jacobi; additionally evaluates the pairing
// identity
//   [h1,h2]_{g*}([x1,x2]) = -[ad*_{x1}h1,h2](x2) - [h1,ad*_{x1}h2](x2)
//                           +[ad*_{x2}h1,h2](x1) + [h1,ad*_{x2}h2](x1)
// as an independent route to the cocycle condition and insists both agree.
BialgebraReport is_lie_bialgebra(const LieAlgebra& g, const Cobracket& delta);

// Deformation of delta by the k-th power of tn:
//   delta_{(tn)^k}(x) = iota_{(tn)^k} delta(x) - delta(n^k x).
// When tn has vanishing torsion on the dual bracket delta^t, the one-step
// recursion delta_{(tn)^k} = iota_tn delta_{(tn)^{k-1}} - delta_{(tn)^{k-1}} o n
// is verified as a second path (it fails otherwise and is then skipped).
Cobracket deform_delta_tn(const Cobracket& delta, const Operator& n, int k);

// [h1,h2]^{(tn)^j} on the dual; always equals the transpose of
// deform_delta_tn(delta, n, j), which is asserted.
StructureTensor dual_deformed_bracket(const Cobracket& delta, const Operator& n, int j);

// Concomitant C(delta, n^k): with u_x = [tn, ad*_x],
//   iota_{(tn)^k o u_{x1}} delta(x2) - iota_{u_{x1}} delta(n^k x2) - (x1 <-> x2)
// on all basis pairs; zero iff the double deformation is again a cocycle.
CocycleReport concomitant_delta_n(const LieAlgebra& g, const Cobracket& delta, const Operator& n, int k);

// ad*-equivariance of tn on the dual algebra, tested through delta:
//   delta(x)(h1, tn h2) = delta(nx)(h1, h2) for all basis triples.
struct AdStarEquivariance {
    bool ok = true;
    int witness_xi = -1, witness_h1 = -1, witness_h2 = -1;
};
AdStarEquivariance ad_star_equivariant(const Cobracket& delta, const Operator& n);

enum class Level { not_bialgebra, lie_bialgebra, almost_NL, weak_NL, NL };
std::string to_string(Level level);

struct Classification {
    Level level = Level::not_bialgebra;
    std::string witness;  // first failing identity, with basis indices and defect
};

// Classification ladder: Lie bialgebra; n (almost) Nijenhuis and delta a
// cocycle in the deformed cohomology and the deformed dual bracket Lie
// (almost_NL); C(delta,n) = 0 (weak_NL); torsion of tn on the dual zero (NL).
Classification classify(const LieAlgebra& g, const Cobracket& delta, const Operator& n);

struct BialgebraCandidate {
    int i = 0, j = 0;             // powers: bracket [.,.]_{n^i}, cobracket delta_{(tn)^j}
    StructureTensor primal_bracket;
    Cobracket cobracket;
    bool primal_lie = false;
    bool dual_lie = false;
    bool cocycle = false;
    bool valid() const { return primal_lie && dual_lie && cocycle; }
};

struct HierarchyGrid {
    int depth = 0;
    std::vector<BialgebraCandidate> cells;  // i + j <= depth, row-major in (i, j)
    // compatibility of primal brackets: ([.,.]_{n^a} + [.,.]_{n^b}) Lie
    std::vector<std::tuple<int, int, bool>> pair_compatibility;
    bool all_cells_valid = true;
    bool all_pairs_compatible = true;
};

// Builds and verifies the (i,j) grid for i + j <= depth. Every cell is
// checked independently; failures are verdicts, not errors. Requires
// classification >= NL unless force is set.
HierarchyGrid build_hierarchy(const LieAlgebra& g, const Cobracket& delta, const Operator& n,
                              int depth, bool force = false);

struct EquivalenceRow {
    int k = 1;
    bool applicable = false;  // deformed bracket [.,.]_{n^k} is Lie
    bool tn_deformed_cocycle = false;   // d delta_{(tn)^k} = 0 in the base cohomology
    bool deformed_cohomology = false;   // d delta = 0 in the [.,.]_{n^k} cohomology
    bool agree = false;
    std::vector<std::tuple<int, int, bool>> double_cells;  // i + j = k verdicts
};

struct EquivalenceReport {
    std::vector<EquivalenceRow> rows;  // k = 1..3
    bool consistent = true;            // every applicable row agrees
};

// Pass/fail matrix for the equivalences between the three deformation types,
// k <= 3. Rows where the deformed bracket fails Jacobi are marked not
// applicable. On NL input the double-deformation cells are included.
EquivalenceReport equivalence_suite(const LieAlgebra& g, const Cobracket& delta, const Operator& n);

}  // namespace bialg
