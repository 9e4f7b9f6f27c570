#pragma once

#include <map>
#include <vector>

#include "bialg/matrix.hpp"

namespace bialg {

// Element of ^k g, stored sparsely on strictly increasing index tuples and
// extended to arbitrary tuples by antisymmetry (sign of the sorting
// permutation, zero on repeated indices). Degree 0 is a scalar, degree 1 a
// vector. A degree-k multivector is read as a k-linear alternating form on
// covectors, with the component convention
//     P(e^{i1},...,e^{ik}) = stored coefficient at (i1 < ... < ik).
class Multivector {
public:
    using Key = std::vector<int>;

    Multivector() = default;
    Multivector(int dim, int degree);

    static Multivector scalar(int dim, const Rational& c);
    static Multivector from_vector(const Vec& v);  // degree 1

    int dim() const { return dim_; }
    int degree() const { return degree_; }

    // Component at an arbitrary index tuple (antisymmetric extension).
    Rational component(const Key& idx) const;
    // Sets a strictly increasing tuple.
    void set_component(const Key& idx, const Rational& value);

    // Full multilinear evaluation at covectors given by coordinates.
    Rational eval(const std::vector<Vec>& etas) const;

    Vec to_vector() const;  // degree 1 only

    const std::map<Key, Rational>& components() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    Multivector& operator+=(const Multivector& o);
    Multivector& operator-=(const Multivector& o);
    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(const Rational& c, Multivector a);
    friend bool operator==(const Multivector& a, const Multivector& b);

private:
    int dim_ = 0, degree_ = 0;
    std::map<Key, Rational> c_;  // increasing tuples -> nonzero coefficients
};

// Antisymmetrized product; degrees add.
Multivector wedge(const Multivector& p, const Multivector& q);

// Slot insertion: (iota_phi P)(eta_1,...,eta_k) = sum_i P(eta_1,...,phi eta_i,...,eta_k),
// where phi acts on covector coordinates by its matrix (column j = image of e^j).
// The assignment phi -> iota_phi is an anti-homomorphism of Lie algebras:
// iota_[phi1,phi2] = -[iota_phi1, iota_phi2].
Multivector iota(const Operator& phi, const Multivector& p);

// All strictly increasing k-tuples in {0,...,dim-1}.
std::vector<Multivector::Key> increasing_tuples(int dim, int k);

// Sign of the permutation sorting idx (0 on repeats), with the sorted tuple.
int sort_sign(Multivector::Key& idx);

}  // namespace bialg
