#include "bialg/multivector.hpp"

#include <algorithm>

#include "bialg/errors.hpp"

namespace bialg {

int sort_sign(Multivector::Key& idx) {
    int sign = 1;
    // insertion sort, counting transpositions; small tuples only
    for (size_t i = 1; i < idx.size(); ++i)
        for (size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
            std::swap(idx[j], idx[j - 1]);
            sign = -sign;
        }
    for (size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) return 0;
    return sign;
}

std::vector<Multivector::Key> increasing_tuples(int dim, int k) {
    std::vector<Multivector::Key> out;
    if (k < 0 || k > dim) return out;
    Multivector::Key cur(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        int pos = k - 1;
        while (pos >= 0 && cur[static_cast<size_t>(pos)] == dim - k + pos) --pos;
        if (pos < 0) break;
        ++cur[static_cast<size_t>(pos)];
        for (int i = pos + 1; i < k; ++i) cur[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)] + 1;
    }
    return out;
}

Multivector::Multivector(int dim, int degree) : dim_(dim), degree_(degree) {
    if (degree < 0 || dim < 0) throw DimensionMismatch("Multivector: negative dim/degree");
}

Multivector Multivector::scalar(int dim, const Rational& c) {
    Multivector m(dim, 0);
    if (!c.is_zero()) m.c_[{}] = c;
    return m;
}

Multivector Multivector::from_vector(const Vec& v) {
    Multivector m(static_cast<int>(v.size()), 1);
    for (int i = 0; i < m.dim_; ++i)
        if (!v[static_cast<size_t>(i)].is_zero()) m.c_[{i}] = v[static_cast<size_t>(i)];
    return m;
}

Rational Multivector::component(const Key& idx) const {
    if (static_cast<int>(idx.size()) != degree_) throw DimensionMismatch("Multivector::component: arity");
    Key key = idx;
    int sign = sort_sign(key);
    if (sign == 0) return Rational();
    auto it = c_.find(key);
    if (it == c_.end()) return Rational();
    return sign == 1 ? it->second : -it->second;
}

void Multivector::set_component(const Key& idx, const Rational& value) {
    if (static_cast<int>(idx.size()) != degree_) throw DimensionMismatch("Multivector::set_component: arity");
    if (!std::is_sorted(idx.begin(), idx.end()) ||
        std::adjacent_find(idx.begin(), idx.end()) != idx.end())
        throw Error("Multivector::set_component: index tuple must be strictly increasing");
    for (int i : idx)
        if (i < 0 || i >= dim_) throw DimensionMismatch("Multivector::set_component: index out of range");
    if (value.is_zero())
        c_.erase(idx);
    else
        c_[idx] = value;
}

Rational Multivector::eval(const std::vector<Vec>& etas) const {
    if (static_cast<int>(etas.size()) != degree_) throw DimensionMismatch("Multivector::eval: arity");
    for (const auto& eta : etas)
        if (static_cast<int>(eta.size()) != dim_) throw DimensionMismatch("Multivector::eval: covector size");
    Rational total;
    for (const auto& [key, coeff] : c_) {
        // coeff * det( etas[s][key[t]] ): the alternating sum over slot permutations
        const int k = degree_;
        Matrix m(k, k);
        for (int s = 0; s < k; ++s)
            for (int t = 0; t < k; ++t) m.at(s, t) = etas[static_cast<size_t>(s)][static_cast<size_t>(key[static_cast<size_t>(t)])];
        // determinant by elimination
        Rational det(1);
        bool singular = false;
        for (int i = 0; i < k && !singular; ++i) {
            int p = -1;
            for (int r = i; r < k; ++r)
                if (!m.at(r, i).is_zero()) {
                    p = r;
                    break;
                }
            if (p < 0) {
                singular = true;
                break;
            }
            if (p != i) {
                for (int j = 0; j < k; ++j) std::swap(m.at(p, j), m.at(i, j));
                det = -det;
            }
            det *= m.at(i, i);
            for (int r = i + 1; r < k; ++r) {
                if (m.at(r, i).is_zero()) continue;
                Rational f = m.at(r, i) / m.at(i, i);
                for (int j = i; j < k; ++j) m.at(r, j) -= f * m.at(i, j);
            }
        }
        if (!singular) total += coeff * det;
    }
    return total;
}

Vec Multivector::to_vector() const {
    if (degree_ != 1) throw DimensionMismatch("Multivector::to_vector: degree != 1");
    Vec v = vec_zero(dim_);
    for (const auto& [key, coeff] : c_) v[static_cast<size_t>(key[0])] = coeff;
    return v;
}

Multivector& Multivector::operator+=(const Multivector& o) {
    if (dim_ != o.dim_ || degree_ != o.degree_) throw DimensionMismatch("Multivector::+=");
    for (const auto& [key, coeff] : o.c_) {
        auto it = c_.find(key);
        if (it == c_.end()) {
            c_[key] = coeff;
        } else {
            it->second += coeff;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
    return *this += Rational(-1) * o;
}

Multivector operator*(const Rational& c, Multivector a) {
    if (c.is_zero()) return Multivector(a.dim_, a.degree_);
    for (auto& [key, coeff] : a.c_) coeff *= c;
    return a;
}

bool operator==(const Multivector& a, const Multivector& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.c_ == b.c_;
}

Multivector wedge(const Multivector& p, const Multivector& q) {
    if (p.dim() != q.dim()) throw DimensionMismatch("wedge: dimension mismatch");
    Multivector r(p.dim(), p.degree() + q.degree());
    for (const auto& [kp, vp] : p.components())
        for (const auto& [kq, vq] : q.components()) {
            Multivector::Key idx = kp;
            idx.insert(idx.end(), kq.begin(), kq.end());
            Multivector::Key key = idx;
            int sign = sort_sign(key);
            if (sign == 0) continue;
            Rational cur = r.component(key);
            r.set_component(key, cur + Rational(sign) * vp * vq);
        }
    return r;
}

Multivector iota(const Operator& phi, const Multivector& p) {
    if (phi.rows() != p.dim() || phi.cols() != p.dim()) throw DimensionMismatch("iota: dimension mismatch");
    Multivector r(p.dim(), p.degree());
    for (const auto& key : increasing_tuples(p.dim(), p.degree())) {
        Rational total;
        for (size_t s = 0; s < key.size(); ++s)
            for (int m = 0; m < p.dim(); ++m) {
                if (phi.at(m, key[s]).is_zero()) continue;
                Multivector::Key idx = key;
                idx[s] = m;
                total += phi.at(m, key[s]) * p.component(idx);
            }
        if (!total.is_zero()) r.set_component(key, total);
    }
    return r;
}

}  // namespace bialg
