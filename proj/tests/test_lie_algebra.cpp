#include <doctest.h>

#include "bialg/errors.hpp"
#include "test_support.hpp"

using namespace bialg;
using namespace bialg::testing;

TEST_CASE("jacobi_defect: book algebra and abelian are Lie") {
    CHECK(jacobi_defect(book().bracket()).is_zero());
    StructureTensor abelian(3, SpaceTag::primal);
    CHECK(jacobi_defect(abelian).is_zero());
    CHECK(book().jacobi_certified());
}

TEST_CASE("jacobi_defect: a non-Lie antisymmetric tensor has nonzero defect") {
    // [e0,e1] = e2, [e0,e2] = e0, [e1,e2] = e1: the cyclic sum at (0,1,2) is -2 e2
    StructureTensor t(3, SpaceTag::primal);
    t.set_entry(0, 1, vec_basis(3, 2));
    t.set_entry(0, 2, vec_basis(3, 0));
    t.set_entry(1, 2, vec_basis(3, 1));
    Cochain defect = jacobi_defect(t);
    CHECK_FALSE(defect.is_zero());
    CHECK(defect.at({0, 1, 2}).to_vector() == vec_scale(Rational(-2), vec_basis(3, 2)));
    CHECK_FALSE(LieAlgebra("bad", t).jacobi_certified());
    CHECK_THROWS_AS(LieAlgebra("bad", t).require_certified(), UncertifiedBracket);
}

TEST_CASE("coadjoint action reproduces the book-algebra table") {
    StructureTensor b = book().bracket();
    CHECK(ad_star(b, basis(3, 0)).apply(basis(3, 1)) == basis(3, 1));    // ad*_{X1}X^2 = X^2
    CHECK(ad_star(b, basis(3, 0)).apply(basis(3, 2)) == basis(3, 2));    // ad*_{X1}X^3 = X^3
    CHECK(ad_star(b, basis(3, 1)).apply(basis(3, 1)) ==
          vec_scale(Rational(-1), basis(3, 0)));                         // ad*_{X2}X^2 = -X^1
    CHECK(ad_star(b, basis(3, 2)).apply(basis(3, 2)) ==
          vec_scale(Rational(-1), basis(3, 0)));                         // ad*_{X3}X^3 = -X^1
    CHECK(ad_star(b, basis(3, 0)).apply(basis(3, 0)) == vec_zero(3));
    // abelian algebra: ad* vanishes
    StructureTensor abelian(3, SpaceTag::primal);
    CHECK(ad_star(abelian, basis(3, 0)).is_zero());
}

TEST_CASE("ad_p: degree 0 dies, degree 1 is the adjoint action") {
    StructureTensor b = book().bracket();
    CHECK(ad_p(b, basis(3, 0), Multivector::scalar(3, Rational(5))).is_zero());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Multivector v = ad_p(b, basis(3, i), Multivector::from_vector(basis(3, j)));
            CHECK(v.to_vector() == b.bracket_basis(i, j));
        }
}

TEST_CASE("ad_p acts as a derivation on decomposables") {
    Rng rng(23);
    for (const auto& entry : algebra_pool()) {
        const int d = entry.algebra.dim();
        if (d < 2) continue;
        for (int trial = 0; trial < 10; ++trial) {
            Vec xi = vec_zero(d), u = vec_zero(d), v = vec_zero(d);
            for (auto& x : xi) x = rng.rational();
            for (auto& x : u) x = rng.rational();
            for (auto& x : v) x = rng.rational();
            const StructureTensor& b = entry.algebra.bracket();
            Multivector uv = wedge(Multivector::from_vector(u), Multivector::from_vector(v));
            Multivector lhs = ad_p(b, xi, uv);
            Multivector rhs = wedge(Multivector::from_vector(b.bracket(xi, u)), Multivector::from_vector(v)) +
                              wedge(Multivector::from_vector(u), Multivector::from_vector(b.bracket(xi, v)));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("ce_coboundary: the k=0 case is ad_p") {
    Rng rng(31);
    StructureTensor b = book().bracket();
    Multivector r = rng.bivec(3);
    Cochain r_as_cochain(3, 0, 2);
    r_as_cochain.set({}, r);
    Cochain d = ce_coboundary(b, r_as_cochain);
    for (int i = 0; i < 3; ++i) CHECK(d.at({i}) == ad_p(b, basis(3, i), r));
}

TEST_CASE("ce_coboundary: p=0 reduces to d alpha(x,y) = -alpha([x,y])") {
    StructureTensor b = book().bracket();
    for (int a = 0; a < 3; ++a) {
        Cochain alpha(3, 1, 0);
        for (int i = 0; i < 3; ++i)
            alpha.set({i}, Multivector::scalar(3, i == a ? Rational(1) : Rational(0)));
        Cochain d = ce_coboundary(b, alpha);
        for (const auto& key : increasing_tuples(3, 2)) {
            Rational expected = -b.bracket_basis(key[0], key[1])[static_cast<size_t>(a)];
            CHECK(d.at(key).component({}) == expected);
        }
    }
}

TEST_CASE("euler-top cobracket is a 1-cocycle") {
    Cochain d = ce_coboundary(book(), euler_delta().as_cochain());
    CHECK(d.is_zero());

    // the rearranged pairwise form: ad_p(X1, delta X2) - ad_p(X2, delta X1) = delta([X1,X2])
    StructureTensor b = book().bracket();
    Cobracket delta = euler_delta();
    for (const auto& key : increasing_tuples(3, 2)) {
        Multivector lhs = ad_p(b, basis(3, key[0]), delta.at(key[1])) -
                          ad_p(b, basis(3, key[1]), delta.at(key[0]));
        CHECK(lhs == delta.apply(b.bracket_basis(key[0], key[1])));
    }
}

TEST_CASE("d o d = 0 on random cochains over the pool and every catalog algebra") {
    Rng rng(37);
    std::vector<LieAlgebra> algebras;
    for (const auto& entry : algebra_pool()) algebras.push_back(entry.algebra);
    for (const auto& name : catalog_names()) algebras.push_back(document_algebra(catalog_entry(name)));
    for (const auto& g : algebras) {
        for (int arity = 1; arity <= 2; ++arity)
            for (int degree = 1; degree <= 2; ++degree) {
                Cochain c = rng.cochain(g.dim(), arity, degree);
                CHECK(ce_coboundary(g, ce_coboundary(g, c)).is_zero());
            }
    }
}

TEST_CASE("schouten_bivector: zero bivector and the r4 r-matrix") {
    CHECK(schouten_bivector(r4().bracket(), Multivector(4, 2), Multivector(4, 2)).is_zero());
    Multivector r = r4_r();
    CHECK(schouten_bivector(r4().bracket(), r, r).is_zero());
}

TEST_CASE("schouten_bivector: polarization matches the expansion route") {
    Rng rng(41);
    for (const auto& entry : algebra_pool()) {
        const int d = entry.algebra.dim();
        for (int trial = 0; trial < 10; ++trial) {
            Multivector a = rng.bivec(d), b = rng.bivec(d);
            Multivector mixed = schouten_bivector(entry.algebra.bracket(), a, b);
            // symmetry of the pairing and consistency with the square
            CHECK(mixed == schouten_bivector(entry.algebra.bracket(), b, a));
            Multivector sum = a;
            sum += b;
            Multivector square = schouten_bivector(entry.algebra.bracket(), sum, sum);
            Multivector recomposed = schouten_bivector(entry.algebra.bracket(), a, a);
            recomposed += Rational(2) * mixed;
            recomposed += schouten_bivector(entry.algebra.bracket(), b, b);
            CHECK(square == recomposed);
        }
    }
}

TEST_CASE("dualize: euler cobracket gives so(3), solvable22 gives its printed dual") {
    LieAlgebra dual = dualize(book(), euler_delta().values());
    CHECK(dual.bracket().bracket_basis(0, 1) == vec_scale(Rational(-1), basis(3, 2)));
    CHECK(dual.bracket().bracket_basis(0, 2) == basis(3, 1));
    CHECK(dual.bracket().bracket_basis(1, 2) == vec_scale(Rational(-1), basis(3, 0)));
    CHECK(dual.bracket().tag() == SpaceTag::dual);
    CHECK(dual.jacobi_certified());
    // it is so(3): same constants as the catalog entry
    CHECK(dual.bracket().bracket_basis(0, 1) == so3().bracket().bracket_basis(0, 1));

    LieAlgebra dual22 = dualize(s22(), s22_delta().values());
    CHECK(dual22.bracket().bracket_basis(0, 1) == vec_scale(Rational(2), basis(4, 1)));
    CHECK(dual22.bracket().bracket_basis(2, 3) == basis(4, 2));

    // zero cobracket dualizes to the abelian algebra
    LieAlgebra ab = dualize(book(), Cobracket::zero(3).values());
    CHECK(ab.bracket().is_zero());
}

TEST_CASE("dualize: a generic cobracket fails Jacobi on the dual") {
    Rng rng(43);
    bool threw = false;
    for (int trial = 0; trial < 20 && !threw; ++trial) {
        try {
            dualize(book(), rng.cobracket(3).values());
        } catch (const JacobiFailure&) {
            threw = true;
        }
    }
    CHECK(threw);
}

TEST_CASE("ad_equivariant: projector on solvable22, witness on r4") {
    CHECK(ad_equivariant(s22().bracket(), s22_n()).ok);
    CHECK(ad_equivariant(book().bracket(), Matrix::identity(3)).ok);
    auto rep = ad_equivariant(r4().bracket(), r4_n());
    CHECK_FALSE(rep.ok);
    CHECK(rep.witness_a == 2);  // n[X3,X4] != [X3, n X4]
    CHECK(rep.witness_b == 3);
}
