#include "bialg/matrix.hpp"

#include "bialg/errors.hpp"

namespace bialg {

Vec vec_zero(int dim) {
    return Vec(static_cast<size_t>(dim));
}

Vec vec_basis(int dim, int i) {
    Vec v(static_cast<size_t>(dim));
    v[static_cast<size_t>(i)] = 1;
    return v;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const Rational& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Rational pairing(const Vec& eta, const Vec& v) {
    Rational s;
    for (size_t i = 0; i < eta.size(); ++i) s += eta[i] * v[i];
    return s;
}

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Vec Matrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("Matrix::apply: size mismatch");
    Vec r(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::pow(int k) const {
    if (!is_square()) throw DimensionMismatch("Matrix::pow: not square");
    Matrix r = identity(rows_);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("Matrix::+=");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("Matrix::-=");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("Matrix::*");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int t = 0; t < a.cols_; ++t) {
            if (a.at(i, t).is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j)
                if (!b.at(t, j).is_zero()) c.at(i, j) += a.at(i, t) * b.at(t, j);
        }
    return c;
}

Matrix operator*(const Rational& c, Matrix a) {
    for (auto& x : a.a_) x *= c;
    return a;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    return a * b - b * a;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Rational inv = Rational(1) / m.at(r, col);
        for (int j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, col).is_zero()) continue;
            Rational f = m.at(i, col);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

}  // namespace

LinearSolution solve_linear(const Matrix& A, const Vec& b) {
    if (static_cast<int>(b.size()) != A.rows()) throw DimensionMismatch("solve_linear: rhs size");
    const int n = A.cols();
    Matrix aug(A.rows(), n + 1);
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, n) = b[static_cast<size_t>(i)];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == n) return {};  // 0 = 1 row: inconsistent

    LinearSolution sol;
    sol.consistent = true;
    sol.particular = vec_zero(n);
    for (size_t r = 0; r < pivots.size(); ++r)
        sol.particular[static_cast<size_t>(pivots[r])] = aug.at(static_cast<int>(r), n);

    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        Vec v = vec_zero(n);
        v[static_cast<size_t>(f)] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<size_t>(pivots[r])] = -aug.at(static_cast<int>(r), f);
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

int rank(Matrix A) {
    return static_cast<int>(rref(A).size());
}

Matrix inverse(const Matrix& A) {
    if (!A.is_square()) throw DimensionMismatch("inverse: not square");
    const int n = A.rows();
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) < n || pivots[static_cast<size_t>(n - 1)] != n - 1)
        throw DegenerateR("inverse: singular matrix");
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

}  // namespace bialg
