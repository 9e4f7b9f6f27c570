#pragma once

#include "bialg/bialgebra.hpp"

namespace bialg {

// Bivector r on a Lie algebra together with its sharp map and CYBE
// certificate ([[r,r]] = 0, decided exactly).
struct RMatrix {
    LieAlgebra base;
    Multivector r;        // degree 2
    Operator r_sharp;     // dual -> primal, antisymmetric matrix
    bool cybe_certified = false;
};

RMatrix make_rmatrix(const LieAlgebra& g, const Multivector& r);

// Bracket on the dual induced by r:
//   [h1,h2]_r = ad*_{r#h1} h2 - ad*_{r#h2} h1,
// equal on evaluation to [h1,h2]_r(x) = [[x,r]](h1,h2); both routes are
// computed and must agree. Lie whenever r satisfies the CYBE.
StructureTensor r_bracket(const RMatrix& rm);

// The coboundary cobracket delta_r(x) = [[x, r]] (the ad^(2)-coboundary of
// the 0-cochain r). Its transpose is r_bracket, which is asserted; for a
// CYBE-certified r the triple (g, [.,.], delta_r) must verify as a Lie
// bialgebra, which is also asserted.
Cobracket coboundary_cobracket(const RMatrix& rm);

// Concomitant C(r,n)(h1,h2) = [tn, ad*_{r#h1}] h2 - [tn, ad*_{r#h2}] h1,
// a dual-valued antisymmetric bilinear defect. Two equivalent evaluations
// (through the deformed coadjoint and through n[x, r#h] - [nx, r#h]) are
// computed and must agree with the commutator route.
struct RnConcomitant {
    int dim = 0;
    std::map<std::pair<int, int>, Vec> entries;  // i < j, nonzero only
    bool is_zero() const { return entries.empty(); }
    std::string witness() const;
};
RnConcomitant concomitant_r_n(const RMatrix& rm, const Operator& n);

struct ComposeResult {
    RMatrix nr;                        // bivector with (nr)# = n o r#
    bool nr_cybe = false;              // [[nr, nr]] = 0
    bool torsion_on_image_zero = false;  // [[n,n]](r#h1, r#h2) = 0 for all basis pairs
    bool bracket_relation = false;     // [.,.]_{nr} equals the tn-deformation of [.,.]_r
    bool cobracket_relation = false;   // delta_{nr} = iota_tn delta_r - delta_r o n
};

// Requires hypothesis (i) n o r# = r# o tn (else SkewSymmetryBroken) and
// (ii) C(r,n) = 0 (else ConcomitantNonzero). The verdict reports the CYBE
// status of nr and checks it coincides with the vanishing of the torsion of
// n on the image of r#.
ComposeResult compose_nr(const RMatrix& rm, const Operator& n);

struct PairResult {
    Operator n;                    // r2# o (r#)^{-1}
    bool r_cybe = false, r2_cybe = false, compatible = false;  // [[r2, r]] = 0
    bool torsion_zero = false;     // checked when all three Schouten brackets vanish
    bool identity_checked = false; // both r, r2 satisfy the CYBE
    bool identity_holds = false;   // eta([[n,n]](x1,x2)) = -2 [[r2,r]](tn eta, r#^-1 x1, r#^-1 x2)
};

// Recursion operator from a compatible pair of r-matrices; r must be
// non-degenerate (exact rank check, else DegenerateR).
PairResult n_from_pair(const RMatrix& rm, const RMatrix& rm2);

struct CoboundaryClassification {
    Classification classification;   // of (g, delta_r, n)
    HierarchyGrid hierarchy;
    bool concomitant_scaling_ok = false;  // C(n^k r, n) = (1/2) iota_{(tn)^k} C(r,n), k <= 3
};

// Classification of the coboundary tuple plus hierarchy generation to the
// requested depth; hypotheses of compose_nr are required and inherited.
CoboundaryClassification coboundary_classify(const RMatrix& rm, const Operator& n, int depth);

}  // namespace bialg
