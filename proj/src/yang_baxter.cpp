#include "bialg/yang_baxter.hpp"

#include <sstream>

#include "bialg/errors.hpp"

namespace bialg {

RMatrix make_rmatrix(const LieAlgebra& g, const Multivector& r) {
    g.require_certified();
    if (r.dim() != g.dim() || r.degree() != 2) throw DimensionMismatch("make_rmatrix: bivector expected");
    RMatrix rm{g, r, sharp(r), false};
    if (!(rm.r_sharp.transpose() == Rational(-1) * rm.r_sharp))
        throw Error("make_rmatrix: sharp map not antisymmetric (internal)");
    rm.cybe_certified = schouten_bivector(g.bracket(), r, r).is_zero();
    return rm;
}

StructureTensor r_bracket(const RMatrix& rm) {
    const StructureTensor& b = rm.base.bracket();
    const int d = b.dim();
    StructureTensor out(d, SpaceTag::dual);
    for (const auto& key : increasing_tuples(d, 2)) {
        Vec h1 = vec_basis(d, key[0]), h2 = vec_basis(d, key[1]);
        Vec v = ad_star(b, rm.r_sharp.apply(h1)).apply(h2);
        v = vec_sub(v, ad_star(b, rm.r_sharp.apply(h2)).apply(h1));
        out.set_entry(key[0], key[1], v);
    }
    // second route: [h1,h2]_r(x) = [[x,r]](h1,h2)
    for (const auto& key : increasing_tuples(d, 2))
        for (int x = 0; x < d; ++x) {
            Rational via_adp = ad_p(b, vec_basis(d, x), rm.r).component(key);
            if (out.bracket_basis(key[0], key[1])[static_cast<size_t>(x)] != via_adp)
                throw Error("r_bracket: the coadjoint and Schouten routes disagree (internal)");
        }
    return out;
}

Cobracket coboundary_cobracket(const RMatrix& rm) {
    const StructureTensor& b = rm.base.bracket();
    const int d = b.dim();
    std::vector<Multivector> vals;
    for (int i = 0; i < d; ++i) vals.push_back(ad_p(b, vec_basis(d, i), rm.r));
    Cobracket delta(d, std::move(vals));
    if (!(delta.dual_tensor() == r_bracket(rm)))
        throw Error("coboundary_cobracket: transpose does not match r_bracket (internal)");
    if (rm.cybe_certified && !is_lie_bialgebra(rm.base, delta).ok)
        throw Error("coboundary_cobracket: certified r-matrix did not produce a Lie bialgebra (internal)");
    return delta;
}

std::string RnConcomitant::witness() const {
    if (entries.empty()) return "";
    const auto& [key, v] = *entries.begin();
    std::ostringstream os;
    os << "C(r,n) defect at (X^" << key.first + 1 << ",X^" << key.second + 1 << ")";
    return os.str();
}

RnConcomitant concomitant_r_n(const RMatrix& rm, const Operator& n) {
    const StructureTensor& b = rm.base.bracket();
    const int d = b.dim();
    if (n.rows() != d || n.cols() != d) throw DimensionMismatch("concomitant_r_n: dimension");
    Operator tn = n.transpose();
    RnConcomitant out;
    out.dim = d;
    for (const auto& key : increasing_tuples(d, 2)) {
        Vec h1 = vec_basis(d, key[0]), h2 = vec_basis(d, key[1]);
        Vec rh1 = rm.r_sharp.apply(h1), rh2 = rm.r_sharp.apply(h2);

        Vec v = underline_ad_star(b, n, rh1).apply(h2);
        v = vec_sub(v, underline_ad_star(b, n, rh2).apply(h1));

        // route 2: through the deformed coadjoint representation
        Vec v2 = vec_zero(d);
        // route 3: [C(h1,h2)](x) = h1(n[x,rh2] - [nx,rh2]) - h2(n[x,rh1] - [nx,rh1])
        Vec v3 = vec_zero(d);
        for (int x = 0; x < d; ++x) {
            Vec ex = vec_basis(d, x);
            Operator adn_star = deformed_adjoint_star(b, n, 1, ex);
            Vec w1 = vec_sub(adn_star.apply(h1), tn.apply(ad_star(b, ex).apply(h1)));
            Vec w2 = vec_sub(adn_star.apply(h2), tn.apply(ad_star(b, ex).apply(h2)));
            v2[static_cast<size_t>(x)] = pairing(w1, rh2) - pairing(w2, rh1);
            Vec a1 = vec_sub(n.apply(b.bracket(ex, rh2)), b.bracket(n.apply(ex), rh2));
            Vec a2 = vec_sub(n.apply(b.bracket(ex, rh1)), b.bracket(n.apply(ex), rh1));
            v3[static_cast<size_t>(x)] = pairing(h1, a1) - pairing(h2, a2);
        }
        if (!(v == v2) || !(v == v3))
            throw Error("concomitant_r_n: the three evaluation routes disagree (internal)");
        if (!vec_is_zero(v)) out.entries[{key[0], key[1]}] = v;
    }
    return out;
}

ComposeResult compose_nr(const RMatrix& rm, const Operator& n) {
    const StructureTensor& b = rm.base.bracket();
    const int d = b.dim();
    Operator tn = n.transpose();
    if (!(n * rm.r_sharp == rm.r_sharp * tn))
        throw SkewSymmetryBroken("compose_nr: n o r# != r# o tn, the bivector n·r would not be skew");
    if (!concomitant_r_n(rm, n).is_zero())
        throw ConcomitantNonzero("compose_nr: C(r,n) != 0");

    Operator nrs = n * rm.r_sharp;
    Multivector nr_mv(d, 2);
    for (const auto& key : increasing_tuples(d, 2))
        nr_mv.set_component(key, nrs.at(key[1], key[0]));  // nr(e^i, e^j) = <e^j, (nr)# e^i>
    ComposeResult res;
    res.nr = make_rmatrix(rm.base, nr_mv);
    res.nr_cybe = res.nr.cybe_certified;

    res.torsion_on_image_zero = true;
    for (const auto& key : increasing_tuples(d, 2)) {
        Vec rh1 = rm.r_sharp.apply(vec_basis(d, key[0]));
        Vec rh2 = rm.r_sharp.apply(vec_basis(d, key[1]));
        Vec t = torsion_wrt(b, n).at_vectors({rh1, rh2}).to_vector();
        if (!vec_is_zero(t)) res.torsion_on_image_zero = false;
    }
    if (res.nr_cybe != res.torsion_on_image_zero)
        throw Error("compose_nr: CYBE(nr) does not match the torsion-on-image criterion (internal)");

    res.bracket_relation = r_bracket(res.nr) == deformed_bracket(r_bracket(rm), tn);
    Cobracket delta_r = coboundary_cobracket(rm);
    res.cobracket_relation = coboundary_cobracket(res.nr) == deform_delta_tn(delta_r, n, 1);
    return res;
}

PairResult n_from_pair(const RMatrix& rm, const RMatrix& rm2) {
    const StructureTensor& b = rm.base.bracket();
    const int d = b.dim();
    if (rm2.base.dim() != d) throw DimensionMismatch("n_from_pair: dimension");
    if (rank(rm.r_sharp) < d) throw DegenerateR("n_from_pair: r is degenerate, r# is not invertible");
    Operator r_inv = inverse(rm.r_sharp);

    PairResult res;
    res.n = rm2.r_sharp * r_inv;
    res.r_cybe = rm.cybe_certified;
    res.r2_cybe = rm2.cybe_certified;
    Multivector mixed = schouten_bivector(b, rm2.r, rm.r);
    res.compatible = mixed.is_zero();

    Cochain tors = torsion_wrt(b, res.n);
    if (res.r_cybe && res.r2_cybe && res.compatible) {
        res.torsion_zero = tors.is_zero();
        if (!res.torsion_zero)
            throw Error("n_from_pair: compatible pair of r-matrices produced nonzero torsion (internal)");
    }

    if (res.r_cybe && res.r2_cybe) {
        res.identity_checked = true;
        res.identity_holds = true;
        Operator tn = res.n.transpose();
        for (int m = 0; m < d && res.identity_holds; ++m)
            for (const auto& key : increasing_tuples(d, 2)) {
                Vec eta = vec_basis(d, m);
                Rational lhs = tors.at_vectors({vec_basis(d, key[0]), vec_basis(d, key[1])})
                                   .to_vector()[static_cast<size_t>(m)];
                Rational rhs = Rational(-2) * mixed.eval({tn.apply(eta),
                                                          r_inv.apply(vec_basis(d, key[0])),
                                                          r_inv.apply(vec_basis(d, key[1]))});
                if (lhs != rhs) {
                    res.identity_holds = false;
                    break;
                }
            }
    }
    return res;
}

CoboundaryClassification coboundary_classify(const RMatrix& rm, const Operator& n, int depth) {
    compose_nr(rm, n);  // enforce and inherit the hypotheses
    Cobracket delta_r = coboundary_cobracket(rm);
    CoboundaryClassification out;
    out.classification = classify(rm.base, delta_r, n);

    bool nondegenerate = rank(rm.r_sharp) == rm.base.dim();
    bool nijenhuis = torsion_wrt(rm.base.bracket(), n).is_zero();
    if (nondegenerate && nijenhuis && out.classification.level != Level::NL)
        throw Error("coboundary_classify: non-degenerate coboundary tuple with Nijenhuis n must be NL");
    out.hierarchy = build_hierarchy(rm.base, delta_r, n,
                                    depth, out.classification.level != Level::NL);

    // C(n^k r, n) = (1/2) iota_{(tn)^k} C(r,n) for k <= 3
    out.concomitant_scaling_ok = true;
    const int d = rm.base.dim();
    for (int k = 1; k <= 3 && out.concomitant_scaling_ok; ++k) {
        Operator nk_sharp = n.pow(k) * rm.r_sharp;
        Multivector nkr(d, 2);
        for (const auto& key : increasing_tuples(d, 2)) nkr.set_component(key, nk_sharp.at(key[1], key[0]));
        RnConcomitant lhs = concomitant_r_n(make_rmatrix(rm.base, nkr), n);
        RnConcomitant base = concomitant_r_n(rm, n);
        Operator tnk = n.pow(k).transpose();
        for (const auto& key : increasing_tuples(d, 2)) {
            auto value_at = [&](const Vec& e1, const Vec& e2) {
                Vec v = vec_zero(d);
                for (const auto& [ij, w] : base.entries) {
                    Rational coef = e1[static_cast<size_t>(ij.first)] * e2[static_cast<size_t>(ij.second)] -
                                    e1[static_cast<size_t>(ij.second)] * e2[static_cast<size_t>(ij.first)];
                    if (!coef.is_zero()) v = vec_add(v, vec_scale(coef, w));
                }
                return v;
            };
            Vec h1 = vec_basis(d, key[0]), h2 = vec_basis(d, key[1]);
            Vec rhs = vec_scale(Rational(1, 2),
                                vec_add(value_at(tnk.apply(h1), h2), value_at(h1, tnk.apply(h2))));
            Vec got = vec_zero(d);
            if (auto it = lhs.entries.find({key[0], key[1]}); it != lhs.entries.end()) got = it->second;
            if (!(got == rhs)) out.concomitant_scaling_ok = false;
        }
    }
    return out;
}

}  // namespace bialg
