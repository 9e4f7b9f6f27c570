#pragma once

#include <functional>

#include "bialg/lie_algebra.hpp"

namespace bialg {

// Sparse polynomial with rational coefficients in variables x1..x_nvars,
// keyed by exponent vectors.
class Polynomial {
public:
    using Expo = std::vector<int>;

    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int i);

    int nvars() const { return nvars_; }
    int total_degree() const;
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Expo& e, const Rational& c);
    // descending lexicographic exponent order: x1-heavy monomials print first
    const std::map<Expo, Rational, std::greater<Expo>>& terms() const { return terms_; }

    Polynomial partial(int i) const;
    Rational eval(const Vec& point) const;
    std::string str() const;  // deterministic rendering, e.g. "x1^2 - 2 x2 x3"

    Polynomial& operator+=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, Polynomial a);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    int nvars_ = 0;
    std::map<Expo, Rational, std::greater<Expo>> terms_;
};

// Linear Poisson structure {x_i, x_j} = sum_k c[i][j][k] x_k on the dual of a
// Lie algebra; Jacobi for the induced bracket on coordinates is exactly the
// Jacobi identity of the tensor, checked at construction.
struct LinearPoisson {
    int dim = 0;
    StructureTensor c;
    Polynomial coordinate_bracket(int i, int j) const;
};

LinearPoisson kks(const StructureTensor& c);  // throws JacobiFailure
LinearPoisson kks(const LieAlgebra& g);

// Polynomial vector field with per-component degree at most two.
struct PolyVectorField {
    int dim = 0;
    std::vector<Polynomial> comp;
    Vec eval(const Vec& point) const;
};

PolyVectorField make_field(std::vector<Polynomial> comp);  // enforces the degree bound

// Hamiltonian vector field xdot_i = {x_i, H} by bilinearity and Leibniz.
PolyVectorField hamiltonian_field(const LinearPoisson& p, const Polynomial& h);

// The rigid-body reduction (x2^2 - x3^2, x1(2 x3 - x2), x1(x3 - 2 x2)).
PolyVectorField euler_top_field();

struct HamiltonianSolutions {
    bool solvable = false;
    Polynomial particular;                // one Hamiltonian, if any
    std::vector<Polynomial> homogeneous;  // Casimir directions of the quadratic ansatz
};

// Solves hamiltonian_field(p, H) = X for H in the span of quadratic, linear
// and constant monomials; exact linear algebra, inconsistency is a result.
HamiltonianSolutions solve_hamiltonian(const LinearPoisson& p, const PolyVectorField& x);

}  // namespace bialg
