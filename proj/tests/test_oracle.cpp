#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "vectcoh/catalog.hpp"
#include "vectcoh/oracle.hpp"

using namespace vectcoh;
using vectcoh::testing::Gen;

namespace {
Scalar S(long n, long d = 1) { return Scalar(rat_of(n, d)); }
UPoly xpow(int k) { return UPoly::monomial(QuadExt(1), k); }
}  // namespace

TEST_CASE("density action on concrete polynomials") {
    // X = x^2, f = x, w = 1: x^2 * 1 + 1 * 2x * x = 3x^2
    PolyDensity f{xpow(1), QuadExt(1)};
    ConcreteVectorField X{xpow(2)};
    CHECK(act_density(X, f).coeffs == xpow(2).scaled(QuadExt(3)));

    // translations drop the weight term
    ConcreteVectorField one{UPoly(QuadExt(1))};
    Gen g;
    for (int i = 0; i < 20; ++i) {
        PolyDensity h{g.upoly(5), QuadExt(g.rat())};
        CHECK(act_density(one, h).coeffs == h.coeffs.derivative());
    }

    // Euler operator: X = x on x^p at weight w gives (p + w) x^p
    for (int p = 0; p <= 6; ++p) {
        QuadExt w(rat_of(7, 3));
        PolyDensity xp{xpow(p), w};
        CHECK(act_density(ConcreteVectorField{xpow(1)}, xp).coeffs ==
              xpow(p).scaled(QuadExt(rat_of(p)) + w));
    }
}

TEST_CASE("vector field bracket") {
    CHECK(bracket({xpow(2)}, {xpow(1)}).coeffs == -xpow(2));
    Gen g;
    for (int i = 0; i < 100; ++i) {
        ConcreteVectorField X{g.upoly(4)}, Y{g.upoly(4)}, Z{g.upoly(4)};
        CHECK(bracket(X, X).coeffs.is_zero());
        CHECK(bracket(X, Y).coeffs == -bracket(Y, X).coeffs);
        // Jacobi identity
        UPoly j = bracket(X, bracket(Y, Z)).coeffs + bracket(Y, bracket(Z, X)).coeffs +
                  bracket(Z, bracket(X, Y)).coeffs;
        CHECK(j.is_zero());
    }
    for (int n = 1; n <= 5; ++n)
        CHECK(bracket({UPoly(QuadExt(1))}, {xpow(n)}).coeffs == xpow(n - 1).scaled(QuadExt(n)));
}

TEST_CASE("concrete cochain evaluation") {
    // C_{0,1}(X)(f) = X'' f with X = x^3, f = x: 6x * x = 6x^2
    CHECK(eval_cochain1(Catalog::c01(), QuadExt(0), xpow(3), xpow(1)) ==
          xpow(2).scaled(QuadExt(6)));
    // Omega_{0,1}(x^2, x^3)(1) = (2x * 6x - 2 * 3x^2) * 1 = 6x^2
    CHECK(eval_jet2(Catalog::omega01().body, QuadExt(0), xpow(2), xpow(3), UPoly(QuadExt(1))) ==
          xpow(2).scaled(QuadExt(6)));
    // constant field and density: all derivative terms vanish
    CHECK(eval_cochain1(Catalog::c_k2(S(5)), QuadExt(5), UPoly(QuadExt(1)), UPoly(QuadExt(1)))
              .is_zero());
}

TEST_CASE("action property on monomials") {
    // act([X,Y]) = act(X) act(Y) - act(Y) act(X)
    Gen g;
    QuadExt w(rat_of(-11, 5));
    for (int i = 0; i < 40; ++i) {
        ConcreteVectorField X{g.upoly(4)}, Y{g.upoly(4)};
        PolyDensity f{g.upoly(4), w};
        PolyDensity lhs = act_density(bracket(X, Y), f);
        PolyDensity rhs1 = act_density(X, act_density(Y, f));
        PolyDensity rhs2 = act_density(Y, act_density(X, f));
        CHECK(lhs.coeffs == rhs1.coeffs - rhs2.coeffs);
    }
}

TEST_CASE("concrete coboundary agrees with the symbolic one") {
    // general order-3 cochain at shift 2 with alpha = (1,1,1,1), w = 2
    Cochain1 b(S(2), 2);
    for (auto& a : b.alpha) a = S(1);
    JetPoly sym = coboundary1(b).body;
    QuadExt l0(2);
    auto fail = cross_check_equal2(sym, l0, 8, [&](const UPoly& X, const UPoly& Y, const UPoly& f) {
        return concrete_coboundary1(b, l0, X, Y, f);
    });
    CHECK(!fail.has_value());

    // a deliberately perturbed coefficient is caught with a witness tuple
    JetPoly bad = sym;
    JetMonomial m0;
    m0.v[0] = 1;
    m0.v[1] = 1;
    m0.f = 2;
    bad.add_term(m0, S(1, 7));
    auto caught = cross_check_equal2(bad, l0, 6, [&](const UPoly& X, const UPoly& Y, const UPoly& f) {
        return concrete_coboundary1(b, l0, X, Y, f);
    });
    REQUIRE(caught.has_value());
    CHECK(caught->a + caught->b + caught->e > 0);
}

TEST_CASE("cocycle property cross-checked on monomials") {
    QuadExt l0(rat_of(7, 3));
    Cochain1 c = Catalog::c_k2(Scalar(l0));
    auto fail = cross_check_zero2(coboundary1(c).body.eval_lambda(l0), l0, 8);
    CHECK(!fail.has_value());
    // concrete route entirely: d C = 0 evaluated with polynomial arithmetic
    for (int a = 0; a <= 6; ++a)
        for (int bb = 0; bb <= 6; ++bb)
            CHECK(concrete_coboundary1(c, l0, xpow(a), xpow(bb), xpow(3)).is_zero());
}

TEST_CASE("concrete cup agrees with the symbolic cup") {
    Gen g;
    Scalar l = Scalar::lambda();
    Cochain1 c1 = Catalog::c_k2(l + S(2));
    Cochain1 c2 = Catalog::c_k2(l);
    Cochain2 sym = cup(c1, c2);
    for (const QuadExt& l0 : oracle_sample_weights()) {
        Cochain1 s1 = c1.specialize(l0), s2 = c2.specialize(l0);
        auto fail = cross_check_equal2(sym.body.eval_lambda(l0), l0, 7,
                                       [&](const UPoly& X, const UPoly& Y, const UPoly& f) {
                                           return concrete_cup(s1, s2, l0, X, Y, f);
                                       });
        CHECK(!fail.has_value());
    }
}
