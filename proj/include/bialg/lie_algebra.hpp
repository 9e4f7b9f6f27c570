#pragma once

#include <map>
#include <string>
#include <vector>

#include "bialg/multivector.hpp"

namespace bialg {

// Sign conventions used throughout (fixed once, here):
//   * bracket(e_i, e_j) = sum_k c[i][j][k] e_k with c antisymmetric in (i,j);
//   * coadjoint action <ad*_xi eta, zeta> = -<eta, [xi, zeta]>, i.e.
//     ad*_xi = -transpose(ad_xi);
//   * the extension ad^(p) of ad to ^p g acts as a derivation of the wedge,
//     ad^(p)_xi(u ^ v) = [xi,u] ^ v + u ^ [xi,v]; on components this is the
//     insertion of transpose(ad_xi) into the covector slots;
//   * a cobracket delta and the bracket on g* it transposes to are related by
//     [eta1, eta2]_{g*}(xi) = delta(xi)(eta1, eta2).

enum class SpaceTag { primal, dual };

// Antisymmetric bilinear bracket candidate by structure constants.
// Not assumed to satisfy Jacobi; see LieAlgebra for the certified wrapper.
class StructureTensor {
public:
    StructureTensor() = default;
    StructureTensor(int dim, SpaceTag tag);

    int dim() const { return dim_; }
    SpaceTag tag() const { return tag_; }

    // Entry for i < j; antisymmetric extension handled by bracket_basis.
    void set_entry(int i, int j, const Vec& value);
    Vec bracket_basis(int i, int j) const;
    Vec bracket(const Vec& x, const Vec& y) const;

    // Matrix of zeta -> [x, zeta].
    Operator ad(const Vec& x) const;

    const std::map<std::pair<int, int>, Vec>& entries() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    friend StructureTensor operator+(const StructureTensor& a, const StructureTensor& b);
    friend bool operator==(const StructureTensor& a, const StructureTensor& b);

private:
    int dim_ = 0;
    SpaceTag tag_ = SpaceTag::primal;
    std::map<std::pair<int, int>, Vec> c_;  // i < j, nonzero values only
};

// Antisymmetric k-linear map g x ... x g -> ^p g, stored on strictly
// increasing input tuples.
class Cochain {
public:
    Cochain() = default;
    Cochain(int dim, int arity, int degree);

    int dim() const { return dim_; }
    int arity() const { return arity_; }
    int degree() const { return degree_; }

    void set(const Multivector::Key& inputs, const Multivector& value);  // increasing tuple
    Multivector at(const Multivector::Key& inputs) const;  // antisymmetric extension
    // Multilinear evaluation with one slot expanded over a vector argument.
    Multivector at_vectors(const std::vector<Vec>& inputs) const;

    bool is_zero() const { return vals_.empty(); }
    const std::map<Multivector::Key, Multivector>& values() const { return vals_; }

    Cochain& operator+=(const Cochain& o);
    friend Cochain operator-(Cochain a, const Cochain& b);
    friend bool operator==(const Cochain& a, const Cochain& b);

private:
    int dim_ = 0, arity_ = 0, degree_ = 0;
    std::map<Multivector::Key, Multivector> vals_;
};

// A structure tensor together with its Jacobi certificate, computed eagerly.
// Holding an uncertified tensor is allowed (deformed brackets may fail
// Jacobi); operations that need a Lie bracket call require_certified().
class LieAlgebra {
public:
    LieAlgebra() = default;
    LieAlgebra(std::string name, std::vector<std::string> basis_names, StructureTensor bracket);
    LieAlgebra(std::string name, StructureTensor bracket);  // default basis names

    const std::string& name() const { return name_; }
    const std::vector<std::string>& basis_names() const { return basis_names_; }
    const StructureTensor& bracket() const { return bracket_; }
    int dim() const { return bracket_.dim(); }
    bool jacobi_certified() const { return certified_; }
    void require_certified() const;

private:
    std::string name_;
    std::vector<std::string> basis_names_;
    StructureTensor bracket_;
    bool certified_ = false;
};

std::vector<std::string> default_basis_names(int dim, SpaceTag tag);

// Cyclic Jacobi sum [[x1,x2],x3] + [[x3,x1],x2] + [[x2,x3],x1] on basis
// triples; identically zero iff the tensor is a Lie bracket.
Cochain jacobi_defect(const StructureTensor& b);

// Coadjoint operator on the dual, <ad*_x eta, zeta> = -<eta, [x, zeta]>.
Operator ad_star(const StructureTensor& b, const Vec& x);

// Extension of the adjoint action to ^p g (the algebraic Schouten bracket
// [[x, P]]); degree-0 values are killed, degree-1 is the adjoint action.
Multivector ad_p(const StructureTensor& b, const Vec& x, const Multivector& p);

// Chevalley-Eilenberg coboundary for the ad^(p) representation. For p = 0 the
// action drops out and d alpha(x1,x2) = -alpha([x1,x2]).
Cochain ce_coboundary(const StructureTensor& b, const Cochain& c);
Cochain ce_coboundary(const LieAlgebra& g, const Cochain& c);  // requires certification

// Algebraic Schouten square/pair of bivectors as a trilinear form on g*:
//   [[r,r]](h1,h2,h3) = h1([r#h2, r#h3]) - h2([r#h1, r#h3]) + h3([r#h1, r#h2]),
// and for distinct arguments the polarization (1/2)([[r+s,r+s]] - [[r,r]] - [[s,s]]).
Multivector schouten_bivector(const StructureTensor& b, const Multivector& r, const Multivector& r2);

// Sharp map of a bivector: column i of the matrix is r#(e^i), with
// <e^j, r#(e^i)> = r(e^i, e^j). Antisymmetric as a matrix.
Operator sharp(const Multivector& r);

// Dual Lie algebra defined by transposing a Cochain(1,2) cobracket given as
// per-basis bivector values; Jacobi is checked, not assumed.
StructureTensor dual_tensor_of(int dim, const std::vector<Multivector>& delta);
LieAlgebra dualize(const LieAlgebra& g, const std::vector<Multivector>& delta);

// Whether n commutes with every ad_x (n[x,y] = [x,ny]); witness basis pair.
struct EquivarianceReport {
    bool ok = true;
    int witness_a = -1, witness_b = -1;
};
EquivarianceReport ad_equivariant(const StructureTensor& b, const Operator& n);

}  // namespace bialg
