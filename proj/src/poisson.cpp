#include "bialg/poisson.hpp"

#include <numeric>
#include <sstream>

#include "bialg/errors.hpp"

namespace bialg {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Expo(static_cast<size_t>(nvars)), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
    Polynomial p(nvars);
    Expo e(static_cast<size_t>(nvars));
    e[static_cast<size_t>(i)] = 1;
    p.add_term(e, 1);
    return p;
}

int Polynomial::total_degree() const {
    int deg = 0;
    for (const auto& [e, c] : terms_)
        deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
    return deg;
}

void Polynomial::add_term(const Expo& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) throw DimensionMismatch("Polynomial::add_term: exponent size");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::partial(int i) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[static_cast<size_t>(i)] == 0) continue;
        Expo d = e;
        --d[static_cast<size_t>(i)];
        out.add_term(d, Rational(e[static_cast<size_t>(i)]) * c);
    }
    return out;
}

Rational Polynomial::eval(const Vec& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw DimensionMismatch("Polynomial::eval: point size");
    Rational total;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[static_cast<size_t>(i)]; ++k) term *= point[static_cast<size_t>(i)];
        total += term;
    }
    return total;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational coeff = c;
        if (first) {
            if (coeff < Rational(0)) {
                os << "-";
                coeff = -coeff;
            }
        } else {
            os << (coeff < Rational(0) ? " - " : " + ");
            if (coeff < Rational(0)) coeff = -coeff;
        }
        first = false;
        bool has_vars = std::accumulate(e.begin(), e.end(), 0) > 0;
        if (!has_vars || coeff != Rational(1)) os << coeff.str() << (has_vars ? " " : "");
        bool first_var = true;
        for (int i = 0; i < nvars_; ++i) {
            if (e[static_cast<size_t>(i)] == 0) continue;
            if (!first_var) os << " ";
            first_var = false;
            os << "x" << i + 1;
            if (e[static_cast<size_t>(i)] > 1) os << "^" << e[static_cast<size_t>(i)];
        }
    }
    return os.str();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw DimensionMismatch("Polynomial::+=");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a += Rational(-1) * b;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) throw DimensionMismatch("Polynomial::*");
    Polynomial out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Polynomial::Expo e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

Polynomial operator*(const Rational& c, Polynomial a) {
    if (c.is_zero()) return Polynomial(a.nvars_);
    for (auto& [e, coef] : a.terms_) coef *= c;
    return a;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

Polynomial LinearPoisson::coordinate_bracket(int i, int j) const {
    Polynomial out(dim);
    Vec v = c.bracket_basis(i, j);
    for (int k = 0; k < dim; ++k)
        if (!v[static_cast<size_t>(k)].is_zero())
            out += v[static_cast<size_t>(k)] * Polynomial::variable(dim, k);
    return out;
}

LinearPoisson kks(const StructureTensor& c) {
    if (!jacobi_defect(c).is_zero())
        throw JacobiFailure("kks: the structure tensor does not satisfy Jacobi");
    return {c.dim(), c};
}

LinearPoisson kks(const LieAlgebra& g) {
    g.require_certified();
    return {g.dim(), g.bracket()};
}

Vec PolyVectorField::eval(const Vec& point) const {
    Vec out = vec_zero(dim);
    for (int i = 0; i < dim; ++i) out[static_cast<size_t>(i)] = comp[static_cast<size_t>(i)].eval(point);
    return out;
}

PolyVectorField make_field(std::vector<Polynomial> comp) {
    PolyVectorField f;
    f.dim = static_cast<int>(comp.size());
    for (const auto& p : comp)
        if (p.total_degree() > 2) throw Error("make_field: component degree exceeds two");
    f.comp = std::move(comp);
    return f;
}

PolyVectorField hamiltonian_field(const LinearPoisson& p, const Polynomial& h) {
    if (h.nvars() != p.dim) throw DimensionMismatch("hamiltonian_field: variable count");
    std::vector<Polynomial> comp;
    for (int i = 0; i < p.dim; ++i) {
        Polynomial xi_dot(p.dim);
        for (int j = 0; j < p.dim; ++j) {
            if (i == j) continue;
            xi_dot += h.partial(j) * p.coordinate_bracket(i, j);
        }
        comp.push_back(std::move(xi_dot));
    }
    return make_field(std::move(comp));
}

PolyVectorField euler_top_field() {
    auto x = [](int i) { return Polynomial::variable(3, i); };
    Polynomial two = Polynomial::constant(3, 2);
    std::vector<Polynomial> comp;
    comp.push_back(x(1) * x(1) - x(2) * x(2));
    comp.push_back(x(0) * (two * x(2) - x(1)));
    comp.push_back(x(0) * (x(2) - two * x(1)));
    return make_field(std::move(comp));
}

HamiltonianSolutions solve_hamiltonian(const LinearPoisson& p, const PolyVectorField& x) {
    if (x.dim != p.dim) throw DimensionMismatch("solve_hamiltonian: dimension");
    const int d = p.dim;
    // ansatz monomials: x_i x_j (i <= j), x_i, 1
    std::vector<Polynomial> basis;
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) basis.push_back(Polynomial::variable(d, i) * Polynomial::variable(d, j));
    for (int i = 0; i < d; ++i) basis.push_back(Polynomial::variable(d, i));
    basis.push_back(Polynomial::constant(d, 1));

    // rows: (component, monomial) pairs over fields of ansatz members and target
    std::vector<PolyVectorField> fields;
    fields.reserve(basis.size());
    for (const auto& h : basis) fields.push_back(hamiltonian_field(p, h));

    std::map<std::pair<int, Polynomial::Expo>, int> row_index;
    auto touch = [&](int comp, const Polynomial& poly) {
        for (const auto& [e, c] : poly.terms()) {
            auto key = std::make_pair(comp, e);
            if (!row_index.count(key)) {
                int next = static_cast<int>(row_index.size());
                row_index[key] = next;
            }
        }
    };
    for (int i = 0; i < d; ++i) {
        for (const auto& f : fields) touch(i, f.comp[static_cast<size_t>(i)]);
        touch(i, x.comp[static_cast<size_t>(i)]);
    }

    Matrix a(static_cast<int>(row_index.size()), static_cast<int>(basis.size()));
    Vec b = vec_zero(static_cast<int>(row_index.size()));
    for (const auto& [key, row] : row_index) {
        auto [comp, expo] = key;
        for (size_t col = 0; col < basis.size(); ++col) {
            const auto& terms = fields[col].comp[static_cast<size_t>(comp)].terms();
            if (auto it = terms.find(expo); it != terms.end()) a.at(row, static_cast<int>(col)) = it->second;
        }
        const auto& target = x.comp[static_cast<size_t>(comp)].terms();
        if (auto it = target.find(expo); it != target.end()) b[static_cast<size_t>(row)] = it->second;
    }

    LinearSolution sol = solve_linear(a, b);
    HamiltonianSolutions out;
    out.solvable = sol.consistent;
    if (!sol.consistent) return out;
    auto combine = [&](const Vec& coeffs) {
        Polynomial h(d);
        for (size_t col = 0; col < basis.size(); ++col)
            if (!coeffs[col].is_zero()) h += coeffs[col] * basis[col];
        return h;
    };
    out.particular = combine(sol.particular);
    for (const auto& v : sol.nullspace) out.homogeneous.push_back(combine(v));
    return out;
}

}  // namespace bialg
