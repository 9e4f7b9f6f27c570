#include "bialg/lie_algebra.hpp"

#include "bialg/errors.hpp"

namespace bialg {

StructureTensor::StructureTensor(int dim, SpaceTag tag) : dim_(dim), tag_(tag) {
    if (dim <= 0) throw DimensionMismatch("StructureTensor: dimension must be positive");
}

void StructureTensor::set_entry(int i, int j, const Vec& value) {
    if (i < 0 || j >= dim_ || i >= j) throw Error("StructureTensor::set_entry: need 0 <= i < j < dim");
    if (static_cast<int>(value.size()) != dim_) throw DimensionMismatch("StructureTensor::set_entry: value size");
    if (vec_is_zero(value))
        c_.erase({i, j});
    else
        c_[{i, j}] = value;
}

Vec StructureTensor::bracket_basis(int i, int j) const {
    if (i == j) return vec_zero(dim_);
    bool flip = i > j;
    auto it = c_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == c_.end()) return vec_zero(dim_);
    return flip ? vec_scale(Rational(-1), it->second) : it->second;
}

Vec StructureTensor::bracket(const Vec& x, const Vec& y) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
        throw DimensionMismatch("StructureTensor::bracket: vector size");
    Vec r = vec_zero(dim_);
    for (const auto& [ij, v] : c_) {
        auto [i, j] = ij;
        Rational coef = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)] -
                        x[static_cast<size_t>(j)] * y[static_cast<size_t>(i)];
        if (!coef.is_zero()) r = vec_add(r, vec_scale(coef, v));
    }
    return r;
}

Operator StructureTensor::ad(const Vec& x) const {
    Operator m(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        Vec col = bracket(x, vec_basis(dim_, j));
        for (int i = 0; i < dim_; ++i) m.at(i, j) = col[static_cast<size_t>(i)];
    }
    return m;
}

StructureTensor operator+(const StructureTensor& a, const StructureTensor& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("StructureTensor::+");
    StructureTensor r(a.dim_, a.tag_);
    for (int i = 0; i < a.dim_; ++i)
        for (int j = i + 1; j < a.dim_; ++j)
            r.set_entry(i, j, vec_add(a.bracket_basis(i, j), b.bracket_basis(i, j)));
    return r;
}

bool operator==(const StructureTensor& a, const StructureTensor& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
}

Cochain::Cochain(int dim, int arity, int degree) : dim_(dim), arity_(arity), degree_(degree) {}

void Cochain::set(const Multivector::Key& inputs, const Multivector& value) {
    if (static_cast<int>(inputs.size()) != arity_) throw DimensionMismatch("Cochain::set: arity");
    Multivector::Key k = inputs;
    if (sort_sign(k) != 1 && arity_ > 0) throw Error("Cochain::set: input tuple must be strictly increasing");
    if (value.is_zero())
        vals_.erase(inputs);
    else
        vals_[inputs] = value;
}

Multivector Cochain::at(const Multivector::Key& inputs) const {
    if (static_cast<int>(inputs.size()) != arity_) throw DimensionMismatch("Cochain::at: arity");
    Multivector::Key key = inputs;
    int sign = sort_sign(key);
    if (sign == 0) return Multivector(dim_, degree_);
    auto it = vals_.find(key);
    if (it == vals_.end()) return Multivector(dim_, degree_);
    return Rational(sign) * it->second;
}

Multivector Cochain::at_vectors(const std::vector<Vec>& inputs) const {
    if (static_cast<int>(inputs.size()) != arity_) throw DimensionMismatch("Cochain::at_vectors: arity");
    Multivector out(dim_, degree_);
    Multivector::Key idx(static_cast<size_t>(arity_));
    // expand multilinearly over basis tuples
    std::vector<int> pos(static_cast<size_t>(arity_), 0);
    while (true) {
        Rational coef(1);
        for (int s = 0; s < arity_; ++s) {
            coef *= inputs[static_cast<size_t>(s)][static_cast<size_t>(pos[static_cast<size_t>(s)])];
            idx[static_cast<size_t>(s)] = pos[static_cast<size_t>(s)];
        }
        if (!coef.is_zero()) out += coef * at(idx);
        int s = arity_ - 1;
        while (s >= 0 && pos[static_cast<size_t>(s)] == dim_ - 1) pos[static_cast<size_t>(s--)] = 0;
        if (s < 0) break;
        ++pos[static_cast<size_t>(s)];
    }
    return out;
}

Cochain& Cochain::operator+=(const Cochain& o) {
    if (dim_ != o.dim_ || arity_ != o.arity_ || degree_ != o.degree_) throw DimensionMismatch("Cochain::+=");
    for (const auto& [k, v] : o.vals_) {
        Multivector sum = at(k) + v;
        set(k, sum);
    }
    return *this;
}

Cochain operator-(Cochain a, const Cochain& b) {
    if (a.dim_ != b.dim_ || a.arity_ != b.arity_ || a.degree_ != b.degree_)
        throw DimensionMismatch("Cochain::-");
    for (const auto& [k, v] : b.vals_) a.set(k, a.at(k) - v);
    return a;
}

bool operator==(const Cochain& a, const Cochain& b) {
    return a.dim_ == b.dim_ && a.arity_ == b.arity_ && a.degree_ == b.degree_ && a.vals_ == b.vals_;
}

std::vector<std::string> default_basis_names(int dim, SpaceTag tag) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(dim));
    for (int i = 1; i <= dim; ++i)
        names.push_back(tag == SpaceTag::primal ? "X" + std::to_string(i) : "X^" + std::to_string(i));
    return names;
}

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_names, StructureTensor bracket)
    : name_(std::move(name)), basis_names_(std::move(basis_names)), bracket_(std::move(bracket)) {
    if (static_cast<int>(basis_names_.size()) != bracket_.dim())
        throw DimensionMismatch("LieAlgebra: basis names vs dimension");
    certified_ = jacobi_defect(bracket_).is_zero();
}

LieAlgebra::LieAlgebra(std::string name, StructureTensor bracket)
    : LieAlgebra(std::move(name), default_basis_names(bracket.dim(), bracket.tag()), std::move(bracket)) {}

void LieAlgebra::require_certified() const {
    if (!certified_) throw UncertifiedBracket("algebra \"" + name_ + "\" is not Jacobi-certified");
}

Cochain jacobi_defect(const StructureTensor& b) {
    Cochain out(b.dim(), 3, 1);
    for (const auto& key : increasing_tuples(b.dim(), 3)) {
        const int i = key[0], j = key[1], k = key[2];
        Vec v = b.bracket(b.bracket_basis(i, j), vec_basis(b.dim(), k));
        v = vec_add(v, b.bracket(b.bracket_basis(k, i), vec_basis(b.dim(), j)));
        v = vec_add(v, b.bracket(b.bracket_basis(j, k), vec_basis(b.dim(), i)));
        if (!vec_is_zero(v)) out.set(key, Multivector::from_vector(v));
    }
    return out;
}

Operator ad_star(const StructureTensor& b, const Vec& x) {
    return Rational(-1) * b.ad(x).transpose();
}

Multivector ad_p(const StructureTensor& b, const Vec& x, const Multivector& p) {
    if (static_cast<int>(x.size()) != b.dim() || p.dim() != b.dim())
        throw DimensionMismatch("ad_p: dimension mismatch");
    return iota(b.ad(x).transpose(), p);
}

Cochain ce_coboundary(const StructureTensor& b, const Cochain& c) {
    if (b.dim() != c.dim()) throw DimensionMismatch("ce_coboundary: dimension mismatch");
    const int k = c.arity();
    Cochain out(b.dim(), k + 1, c.degree());
    for (const auto& key : increasing_tuples(b.dim(), k + 1)) {
        Multivector total(b.dim(), c.degree());
        for (int t = 0; t <= k; ++t) {
            Multivector::Key rest;
            for (int s = 0; s <= k; ++s)
                if (s != t) rest.push_back(key[static_cast<size_t>(s)]);
            Multivector term = ad_p(b, vec_basis(b.dim(), key[static_cast<size_t>(t)]), c.at(rest));
            total += (t % 2 == 0 ? Rational(1) : Rational(-1)) * term;
        }
        for (int a = 0; a <= k; ++a)
            for (int bb = a + 1; bb <= k; ++bb) {
                Multivector::Key rest;
                for (int s = 0; s <= k; ++s)
                    if (s != a && s != bb) rest.push_back(key[static_cast<size_t>(s)]);
                Vec v = b.bracket_basis(key[static_cast<size_t>(a)], key[static_cast<size_t>(bb)]);
                Multivector term(b.dim(), c.degree());
                for (int m = 0; m < b.dim(); ++m) {
                    if (v[static_cast<size_t>(m)].is_zero()) continue;
                    Multivector::Key idx{m};
                    idx.insert(idx.end(), rest.begin(), rest.end());
                    term += v[static_cast<size_t>(m)] * c.at(idx);
                }
                total += ((a + bb) % 2 == 0 ? Rational(1) : Rational(-1)) * term;
            }
        if (!total.is_zero()) out.set(key, total);
    }
    return out;
}

Cochain ce_coboundary(const LieAlgebra& g, const Cochain& c) {
    g.require_certified();
    return ce_coboundary(g.bracket(), c);
}

Operator sharp(const Multivector& r) {
    if (r.degree() != 2) throw DimensionMismatch("sharp: degree-2 multivector expected");
    Operator m(r.dim(), r.dim());
    for (const auto& [key, v] : r.components()) {
        m.at(key[1], key[0]) = v;   // <e^j, r#(e^i)> = r(e^i,e^j)
        m.at(key[0], key[1]) = -v;
    }
    return m;
}

Multivector schouten_bivector(const StructureTensor& b, const Multivector& r, const Multivector& r2) {
    if (r.dim() != b.dim() || r2.dim() != b.dim()) throw DimensionMismatch("schouten_bivector: dimension");
    if (r.degree() != 2 || r2.degree() != 2) throw DimensionMismatch("schouten_bivector: degree-2 expected");
    if (r == r2) {
        Operator rs = sharp(r);
        Multivector out(b.dim(), 3);
        for (const auto& key : increasing_tuples(b.dim(), 3)) {
            Vec h[3] = {vec_basis(b.dim(), key[0]), vec_basis(b.dim(), key[1]), vec_basis(b.dim(), key[2])};
            Vec rh[3] = {rs.apply(h[0]), rs.apply(h[1]), rs.apply(h[2])};
            Rational val = pairing(h[0], b.bracket(rh[1], rh[2])) -
                           pairing(h[1], b.bracket(rh[0], rh[2])) +
                           pairing(h[2], b.bracket(rh[0], rh[1]));
            if (!val.is_zero()) out.set_component(key, val);
        }
        return out;
    }
    Multivector sum = r;
    sum += r2;
    Multivector mixed = schouten_bivector(b, sum, sum) - schouten_bivector(b, r, r) - schouten_bivector(b, r2, r2);
    return Rational(1, 2) * mixed;
}

StructureTensor dual_tensor_of(int dim, const std::vector<Multivector>& delta) {
    if (static_cast<int>(delta.size()) != dim) throw DimensionMismatch("dual_tensor_of: delta size");
    StructureTensor t(dim, SpaceTag::dual);
    for (const auto& key : increasing_tuples(dim, 2)) {
        Vec v = vec_zero(dim);
        for (int k = 0; k < dim; ++k) v[static_cast<size_t>(k)] = delta[static_cast<size_t>(k)].component(key);
        t.set_entry(key[0], key[1], v);
    }
    return t;
}

LieAlgebra dualize(const LieAlgebra& g, const std::vector<Multivector>& delta) {
    StructureTensor t = dual_tensor_of(g.dim(), delta);
    if (!jacobi_defect(t).is_zero())
        throw JacobiFailure("dualize: transposed cobracket is not a Lie bracket on the dual of \"" + g.name() + "\"");
    return LieAlgebra(g.name() + "*", default_basis_names(g.dim(), SpaceTag::dual), t);
}

EquivarianceReport ad_equivariant(const StructureTensor& b, const Operator& n) {
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) {
            if (i == j) continue;
            Vec lhs = n.apply(b.bracket_basis(i, j));
            Vec rhs = b.bracket(vec_basis(b.dim(), i), n.apply(vec_basis(b.dim(), j)));
            if (lhs != rhs) return {false, i, j};
        }
    return {};
}

}  // namespace bialg
