#pragma once

#include "bialg/lie_algebra.hpp"

namespace bialg {

// Deformed bracket [x,y]_n = [nx,y] + [x,ny] - n[x,y]. Antisymmetric for any
// linear n; Jacobi is a property of n, not assumed here.
StructureTensor deformed_bracket(const StructureTensor& b, const Operator& n);
StructureTensor deformed_bracket(const LieAlgebra& g, const Operator& n);

// Direct power formula [x,y]_{n^i} = [n^i x, y] + [x, n^i y] - n^i [x,y].
// For Nijenhuis n this is also verified against the one-step recursion
// through [.,.]_{n^{i-1}}; the recursion is unreliable otherwise and is then
// skipped.
StructureTensor iterated_bracket(const LieAlgebra& g, const Operator& n, int i);

// Nijenhuis torsion [[n,n]](x,y) = n[x,y]_n - [nx,ny] with respect to the
// supplied bracket; equal to minus the four-term expansion
// [nx,ny] - n[nx,y] - n[x,ny] + n^2 [x,y].
Cochain torsion_wrt(const StructureTensor& b, const Operator& n);
Cochain torsion(const LieAlgebra& g, const Operator& n);
Cochain torsion_four_term(const StructureTensor& b, const Operator& n);

// Torsion of n with respect to the i-th deformed bracket. The direct path
// computes torsion_wrt([.,.]_{n^i}, n); the recursive path iterates
//   [[n,n]]_i(x,y) = [[n,n]]_{i-1}(nx,y) + [[n,n]]_{i-1}(x,ny) - n [[n,n]]_{i-1}(x,y).
Cochain iterated_torsion(const StructureTensor& b, const Operator& n, int i);
Cochain iterated_torsion_recursive(const StructureTensor& b, const Operator& n, int i);

enum class NijStatus { nijenhuis, almost_nijenhuis, neither };
std::string to_string(NijStatus s);

struct NijenhuisCandidate {
    LieAlgebra base;
    Operator n;
    Cochain torsion;  // with respect to base
    NijStatus status = NijStatus::neither;
};

// status = nijenhuis when [[n,n]] = 0; almost_nijenhuis when the torsion is a
// 2-cocycle of the adjoint cohomology; neither otherwise. Cross-checked
// against the Jacobi defect of the deformed bracket.
NijenhuisCandidate classify_operator(const LieAlgebra& g, const Operator& n);

// Nijenhuis concomitant of two operators, normalized so that the polarization
// identity concomitant(n, n) = 2 [[n,n]] holds with the torsion above.
// Symmetric in (n, n2); zero when n2 is the identity.
Cochain nijenhuis_concomitant(const LieAlgebra& g, const Operator& n, const Operator& n2);

// underline_ad_x = [ad_x, n]; its dual is [tn, ad*_x].
Operator underline_ad(const StructureTensor& b, const Operator& n, const Vec& x);
Operator underline_ad_star(const StructureTensor& b, const Operator& n, const Vec& x);

// Adjoint operator of the i-th deformed bracket for Nijenhuis n, built by the
// recursion ad^{n^i}_x = [ad^{n^{i-1}}_x, n] + ad^{n^{i-1}}_{nx}; i = 0 is ad_x.
Operator deformed_adjoint(const StructureTensor& b, const Operator& n, int i, const Vec& x);
Operator deformed_adjoint_star(const StructureTensor& b, const Operator& n, int i, const Vec& x);

// Concomitant of an operator with the adjoint action: the representation
// defect [ad^n_{x1}, ad^n_{x2}] - ad^n_{[x1,x2]_n}, an operator for every
// basis pair. Vanishes identically iff [.,.]_n satisfies Jacobi.
struct OperatorConcomitant {
    int dim = 0;
    std::map<std::pair<int, int>, Operator> entries;  // i < j, nonzero only
    bool is_zero() const { return entries.empty(); }
};
OperatorConcomitant concomitant_n_ad(const LieAlgebra& g, const Operator& n);
OperatorConcomitant concomitant_n_ad_tensor(const StructureTensor& b, const Operator& n);

}  // namespace bialg
