#pragma once

#include <vector>

#include "bialg/rational.hpp"

namespace bialg {

using Vec = std::vector<Rational>;

Vec vec_zero(int dim);
Vec vec_basis(int dim, int i);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& v);
bool vec_is_zero(const Vec& v);

// Natural pairing <eta, v> of a covector and a vector in coordinates.
Rational pairing(const Vec& eta, const Vec& v);

// Dense matrix over Rational. Column j holds the image of basis vector j,
// so apply() is the coordinate action on the space the matrix lives on;
// transpose() is the induced operator on the dual basis.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Vec apply(const Vec& v) const;
    Matrix transpose() const;
    Matrix pow(int k) const;  // square matrices, k >= 0
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& c, Matrix a);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// Square matrices acting as linear operators on g (or on g* after transpose).
using Operator = Matrix;

Matrix commutator(const Matrix& a, const Matrix& b);

struct LinearSolution {
    bool consistent = false;
    Vec particular;                  // one solution of A x = b (empty if inconsistent)
    std::vector<Vec> nullspace;      // basis of ker A
};

// Exact Gaussian elimination; inconsistency is a result, never an error.
LinearSolution solve_linear(const Matrix& A, const Vec& b);

// Exact rank (row echelon pivot count).
int rank(Matrix A);

// Inverse of a square matrix; throws DegenerateR if singular.
Matrix inverse(const Matrix& A);

}  // namespace bialg
