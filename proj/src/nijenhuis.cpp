#include "bialg/nijenhuis.hpp"

#include "bialg/errors.hpp"

namespace bialg {

StructureTensor deformed_bracket(const StructureTensor& b, const Operator& n) {
    if (n.rows() != b.dim() || n.cols() != b.dim()) throw DimensionMismatch("deformed_bracket: dimension");
    StructureTensor r(b.dim(), b.tag());
    for (const auto& key : increasing_tuples(b.dim(), 2)) {
        Vec ei = vec_basis(b.dim(), key[0]), ej = vec_basis(b.dim(), key[1]);
        Vec v = b.bracket(n.apply(ei), ej);
        v = vec_add(v, b.bracket(ei, n.apply(ej)));
        v = vec_sub(v, n.apply(b.bracket_basis(key[0], key[1])));
        r.set_entry(key[0], key[1], v);
    }
    return r;
}

StructureTensor deformed_bracket(const LieAlgebra& g, const Operator& n) {
    return deformed_bracket(g.bracket(), n);
}

StructureTensor iterated_bracket(const LieAlgebra& g, const Operator& n, int i) {
    if (i < 1) throw Error("iterated_bracket: order must be >= 1");
    StructureTensor direct = deformed_bracket(g.bracket(), n.pow(i));
    if (i >= 2 && torsion_wrt(g.bracket(), n).is_zero()) {
        // [x,y]_{n^i} = [n^{i-1}x, y]_n + [x, n^{i-1}y]_n - n^{i-1}[x,y]_n
        // holds for Nijenhuis n and is checked as a second path.
        StructureTensor bn = deformed_bracket(g.bracket(), n);
        Operator p = n.pow(i - 1);
        StructureTensor rec(g.dim(), g.bracket().tag());
        for (const auto& key : increasing_tuples(g.dim(), 2)) {
            Vec ei = vec_basis(g.dim(), key[0]), ej = vec_basis(g.dim(), key[1]);
            Vec v = bn.bracket(p.apply(ei), ej);
            v = vec_add(v, bn.bracket(ei, p.apply(ej)));
            v = vec_sub(v, p.apply(bn.bracket_basis(key[0], key[1])));
            rec.set_entry(key[0], key[1], v);
        }
        if (!(rec == direct))
            throw Error("iterated_bracket: recursion disagrees with the direct power formula for a Nijenhuis operator");
    }
    return direct;
}

Cochain torsion_wrt(const StructureTensor& b, const Operator& n) {
    if (n.rows() != b.dim() || n.cols() != b.dim()) throw DimensionMismatch("torsion_wrt: dimension");
    StructureTensor dn = deformed_bracket(b, n);
    Cochain out(b.dim(), 2, 1);
    for (const auto& key : increasing_tuples(b.dim(), 2)) {
        Vec v = n.apply(dn.bracket_basis(key[0], key[1]));
        v = vec_sub(v, b.bracket(n.apply(vec_basis(b.dim(), key[0])), n.apply(vec_basis(b.dim(), key[1]))));
        if (!vec_is_zero(v)) out.set(key, Multivector::from_vector(v));
    }
    return out;
}

Cochain torsion(const LieAlgebra& g, const Operator& n) {
    return torsion_wrt(g.bracket(), n);
}

Cochain torsion_four_term(const StructureTensor& b, const Operator& n) {
    Cochain out(b.dim(), 2, 1);
    for (const auto& key : increasing_tuples(b.dim(), 2)) {
        Vec ei = vec_basis(b.dim(), key[0]), ej = vec_basis(b.dim(), key[1]);
        Vec v = b.bracket(n.apply(ei), n.apply(ej));
        v = vec_sub(v, n.apply(b.bracket(n.apply(ei), ej)));
        v = vec_sub(v, n.apply(b.bracket(ei, n.apply(ej))));
        v = vec_add(v, (n * n).apply(b.bracket_basis(key[0], key[1])));
        if (!vec_is_zero(v)) out.set(key, Multivector::from_vector(v));
    }
    return out;
}

Cochain iterated_torsion(const StructureTensor& b, const Operator& n, int i) {
    return torsion_wrt(i == 0 ? b : deformed_bracket(b, n.pow(i)), n);
}

Cochain iterated_torsion_recursive(const StructureTensor& b, const Operator& n, int i) {
    Cochain cur = torsion_wrt(b, n);
    auto eval = [&](const Cochain& c, const Vec& x, const Vec& y) {
        return c.at_vectors({x, y}).to_vector();
    };
    for (int step = 1; step <= i; ++step) {
        Cochain next(b.dim(), 2, 1);
        for (const auto& key : increasing_tuples(b.dim(), 2)) {
            Vec ei = vec_basis(b.dim(), key[0]), ej = vec_basis(b.dim(), key[1]);
            Vec v = eval(cur, n.apply(ei), ej);
            v = vec_add(v, eval(cur, ei, n.apply(ej)));
            v = vec_sub(v, n.apply(eval(cur, ei, ej)));
            if (!vec_is_zero(v)) next.set(key, Multivector::from_vector(v));
        }
        cur = next;
    }
    return cur;
}

std::string to_string(NijStatus s) {
    switch (s) {
        case NijStatus::nijenhuis: return "nijenhuis";
        case NijStatus::almost_nijenhuis: return "almost_nijenhuis";
        default: return "neither";
    }
}

NijenhuisCandidate classify_operator(const LieAlgebra& g, const Operator& n) {
    g.require_certified();
    NijenhuisCandidate cand{g, n, torsion(g, n), NijStatus::neither};
    if (cand.torsion.is_zero())
        cand.status = NijStatus::nijenhuis;
    else if (ce_coboundary(g, cand.torsion).is_zero())
        cand.status = NijStatus::almost_nijenhuis;

    // the torsion is d-closed exactly when the deformed bracket satisfies Jacobi
    bool deformed_lie = jacobi_defect(deformed_bracket(g, n)).is_zero();
    if ((cand.status != NijStatus::neither) != deformed_lie)
        throw Error("classify_operator: cocycle/Jacobi equivalence violated (internal)");
    return cand;
}

Cochain nijenhuis_concomitant(const LieAlgebra& g, const Operator& n, const Operator& n2) {
    const StructureTensor& b = g.bracket();
    if (n.rows() != b.dim() || n2.rows() != b.dim()) throw DimensionMismatch("nijenhuis_concomitant: dimension");
    Cochain out(b.dim(), 2, 1);
    for (const auto& key : increasing_tuples(b.dim(), 2)) {
        Vec x = vec_basis(b.dim(), key[0]), y = vec_basis(b.dim(), key[1]);
        Vec nx = n.apply(x), ny = n.apply(y), mx = n2.apply(x), my = n2.apply(y);
        Vec v = vec_zero(b.dim());
        v = vec_add(v, n2.apply(b.bracket(nx, y)));
        v = vec_add(v, n2.apply(b.bracket(x, ny)));
        v = vec_add(v, n.apply(b.bracket(mx, y)));
        v = vec_add(v, n.apply(b.bracket(x, my)));
        v = vec_sub(v, b.bracket(nx, my));
        v = vec_sub(v, b.bracket(mx, ny));
        v = vec_sub(v, n.apply(n2.apply(b.bracket(x, y))));
        v = vec_sub(v, n2.apply(n.apply(b.bracket(x, y))));
        if (!vec_is_zero(v)) out.set(key, Multivector::from_vector(v));
    }
    return out;
}

Operator underline_ad(const StructureTensor& b, const Operator& n, const Vec& x) {
    return commutator(b.ad(x), n);
}

Operator underline_ad_star(const StructureTensor& b, const Operator& n, const Vec& x) {
    return commutator(n.transpose(), ad_star(b, x));
}

Operator deformed_adjoint(const StructureTensor& b, const Operator& n, int i, const Vec& x) {
    if (i == 0) return b.ad(x);
    Operator prev = deformed_adjoint(b, n, i - 1, x);
    Operator prev_nx = deformed_adjoint(b, n, i - 1, n.apply(x));
    return commutator(prev, n) + prev_nx;
}

Operator deformed_adjoint_star(const StructureTensor& b, const Operator& n, int i, const Vec& x) {
    return Rational(-1) * deformed_adjoint(b, n, i, x).transpose();
}

OperatorConcomitant concomitant_n_ad_tensor(const StructureTensor& b, const Operator& n) {
    if (n.rows() != b.dim()) throw DimensionMismatch("concomitant_n_ad: dimension");
    StructureTensor dn = deformed_bracket(b, n);
    auto adn = [&](const Vec& x) { return underline_ad(b, n, x) + b.ad(n.apply(x)); };
    OperatorConcomitant out;
    out.dim = b.dim();
    for (const auto& key : increasing_tuples(b.dim(), 2)) {
        Vec x = vec_basis(b.dim(), key[0]), y = vec_basis(b.dim(), key[1]);
        Operator m = commutator(adn(x), adn(y)) - adn(dn.bracket_basis(key[0], key[1]));
        if (!m.is_zero()) out.entries[{key[0], key[1]}] = m;
    }
    return out;
}

OperatorConcomitant concomitant_n_ad(const LieAlgebra& g, const Operator& n) {
    g.require_certified();
    OperatorConcomitant out = concomitant_n_ad_tensor(g.bracket(), n);
    bool deformed_lie = jacobi_defect(deformed_bracket(g, n)).is_zero();
    if (out.is_zero() != deformed_lie)
        throw Error("concomitant_n_ad: vanishing/Jacobi equivalence violated (internal)");
    return out;
}

}  // namespace bialg
