#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "vectcoh/roots.hpp"
#include "vectcoh/scalar.hpp"

using namespace vectcoh;
using vectcoh::testing::Gen;

static Scalar S(long n, long d = 1) { return Scalar(rat_of(n, d)); }

TEST_CASE("rational arithmetic basics") {
    CHECK(rat_of(1, 2) + rat_of(1, 3) == rat_of(5, 6));
    CHECK(rat_parse(" -4/6 ") == rat_of(-2, 3));
    CHECK(rat_gcd(rat_of(4, 3), rat_of(2, 9)) == rat_of(2, 9));
    CHECK_THROWS_AS(rat_of(1, 0), arithmetic_error);
}

TEST_CASE("quadratic extension arithmetic") {
    QuadExt a1 = ConstantsTable::a(1);
    QuadExt a2 = ConstantsTable::a(2);
    // hand oracle: (-(5+s)/2)(-(5-s)/2) = (25 - 19)/4
    Rat expected = (Rat(25) - Rat(19)) / 4;
    CHECK(a1 * a2 == QuadExt(expected));
    CHECK(a1 + a2 == QuadExt(rat_of(-5)));
    CHECK(a1.conj() == a2);
    CHECK((a1 * a1.inv()) == QuadExt(1));
    CHECK_THROWS_AS(QuadExt(Rat(0), Rat(1), 19) * QuadExt(Rat(0), Rat(1), 39), arithmetic_error);
    CHECK_THROWS_AS(QuadExt(Rat(0)).inv(), arithmetic_error);

    // exact sign of a + b sqrt(d)
    CHECK(QuadExt(Rat(-5), Rat(1), 19).sign() < 0);   // sqrt(19) < 5
    CHECK(QuadExt(Rat(-4), Rat(1), 19).sign() > 0);   // sqrt(19) > 4
    CHECK(ConstantsTable::a(1).sign() < 0);
    CHECK(ConstantsTable::alpha(2).sign() < 0);
}

TEST_CASE("galois conjugation is a ring automorphism pairing the table") {
    Gen g;
    for (int i = 0; i < 200; ++i) {
        QuadExt x = g.quad(19), y = g.quad(19);
        CHECK((x + y).conj() == x.conj() + y.conj());
        CHECK((x * y).conj() == x.conj() * y.conj());
    }
    CHECK(ConstantsTable::a(1).conj() == ConstantsTable::a(2));
    CHECK(ConstantsTable::alpha(1).conj() == ConstantsTable::alpha(2));
    CHECK(ConstantsTable::beta(1).conj() == ConstantsTable::beta(2));
    CHECK(ConstantsTable::gamma(1).conj() == ConstantsTable::gamma(2));
    CHECK(ConstantsTable::eta(1).conj() == ConstantsTable::eta(2));
    CHECK(ConstantsTable::theta(1).conj() == ConstantsTable::theta(2));
    CHECK(ConstantsTable::mu(1).conj() == ConstantsTable::mu(2));
    CHECK(ConstantsTable::nu(1).conj() == ConstantsTable::nu(2));
}

TEST_CASE("scalar field operations and canonical form") {
    CHECK(S(1, 2) + S(1, 3) == S(5, 6));

    Scalar l = Scalar::lambda();
    Scalar q = l * l + S(6) * l + S(8);
    CHECK(q.inv() * q == S(1));
    CHECK_THROWS_AS(S(0).inv(), arithmetic_error);

    // canonical form: reduced, monic denominator
    Scalar r = Scalar(UPoly::parse("2*l^2+2"), UPoly::parse("4*l+4"));
    CHECK(r.den().is_monic());
    CHECK(UPoly::gcd(r.num(), r.den()).degree() == 0);
    // (2l^2+2)/(4l+4) = (l^2+1)/(2l+2) with monic denominator l+1 and num (1/2)(l^2+1)
    CHECK(r == Scalar(UPoly::parse("1/2*l^2+1/2"), UPoly::parse("l+1")));
}

TEST_CASE("scalar field laws on randomized inputs") {
    Gen g;
    for (int i = 0; i < 120; ++i) {
        Scalar x = g.scalar(), y = g.scalar(), z = g.scalar();
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + (-x) == S(0));
        Scalar nx = g.nonzero_scalar();
        CHECK(nx * nx.inv() == S(1));
    }
}

TEST_CASE("evaluation and poles") {
    Scalar l = Scalar::lambda();
    CHECK((-l).eval(QuadExt(0)) == QuadExt(0));

    // a_i are the roots of 2 l^2 + 10 l + 3, so l^2 + 5 l + 3/2 vanishes there;
    // oracle: direct expansion in QuadExt arithmetic
    QuadExt a1 = ConstantsTable::a(1);
    QuadExt direct = a1 * a1 + QuadExt(5) * a1 + QuadExt(rat_of(3, 2));
    CHECK(direct.is_zero());
    Scalar p = l * l + S(5) * l + S(3, 2);
    CHECK(p.eval(a1) == QuadExt(0));
    CHECK(p.eval(ConstantsTable::a(2)) == QuadExt(0));

    Scalar pole = (l * l + S(6) * l + S(8)).inv();
    CHECK_THROWS_AS(pole.eval(QuadExt(-2)), pole_error);
    try {
        pole.eval(QuadExt(-2));
    } catch (const pole_error& e) {
        CHECK(e.factor() == "l+2");
    }

    // substitution is a homomorphism
    Gen g;
    QuadExt at(rat_of(7, 3));
    for (int i = 0; i < 80; ++i) {
        Scalar x = g.scalar(), y = g.scalar();
        if (x.has_pole_at(at) || y.has_pole_at(at)) continue;
        CHECK((x + y).eval(at) == x.eval(at) + y.eval(at));
        CHECK((x * y).eval(at) == x.eval(at) * y.eval(at));
    }
}

TEST_CASE("roots in quadratic extensions") {
    // 2 l^2 + 10 l + 3 -> a1, a2
    UPoly p = UPoly::parse("2*l^2+10*l+3");
    RootSplit rs = roots_in_quadext(p);
    REQUIRE(rs.roots.size() == 2);
    CHECK(rs.residual == UPoly(QuadExt(1)));
    CHECK(std::count(rs.roots.begin(), rs.roots.end(), ConstantsTable::a(1)) == 1);
    CHECK(std::count(rs.roots.begin(), rs.roots.end(), ConstantsTable::a(2)) == 1);

    // l^2 + 7 l + 5/2: roots (-7 +- sqrt(39))/2
    rs = roots_in_quadext(UPoly::parse("l^2+7*l+5/2"));
    REQUIRE(rs.roots.size() == 2);
    QuadExt b1(rat_of(-7, 2), rat_of(-1, 2), 39);
    QuadExt b2(rat_of(-7, 2), rat_of(1, 2), 39);
    CHECK(std::count(rs.roots.begin(), rs.roots.end(), b1) == 1);
    CHECK(std::count(rs.roots.begin(), rs.roots.end(), b2) == 1);

    // l^2 + 1: no supported roots, irreducible residual
    rs = roots_in_quadext(UPoly::parse("l^2+1"));
    CHECK(rs.roots.empty());
    CHECK(rs.residual == UPoly::parse("l^2+1"));

    // rational roots with multiplicity collapse: (l+2)^2 (l+4)
    rs = roots_in_quadext(UPoly::parse("l^3+8*l^2+20*l+16"));
    REQUIRE(rs.roots.size() == 2);
    CHECK(rs.roots[0] == QuadExt(rat_of(-4)));
    CHECK(rs.roots[1] == QuadExt(rat_of(-2)));

    // quartic splitting into two quadratics over Q: (2l^2+10l+3)(2l^2+14l+5)
    rs = roots_in_quadext(UPoly::parse("2*l^2+10*l+3") * UPoly::parse("2*l^2+14*l+5"));
    REQUIRE(rs.roots.size() == 4);
    CHECK(std::count(rs.roots.begin(), rs.roots.end(), ConstantsTable::a(1)) == 1);
    CHECK(std::count(rs.roots.begin(), rs.roots.end(), b1) == 1);

    CHECK_THROWS_AS(roots_in_quadext(UPoly::parse("l^5+1")), unsupported_degree_error);
}

TEST_CASE("serialization round-trips exactly") {
    Gen g;
    for (int i = 0; i < 150; ++i) {
        int disc = i % 3 == 0 ? 0 : (i % 3 == 1 ? 19 : 39);
        QuadExt q = g.quad(disc);
        CHECK(QuadExt::parse(q.str()) == q);
        Scalar s = g.scalar(disc);
        CHECK(Scalar::parse(s.str()) == s);
    }
    // canonical uniqueness: equal values have identical renderings
    Scalar x = S(1, 3) * Scalar::lambda() + S(2);
    Scalar y = (Scalar::lambda() + S(6)) * S(1, 3);
    CHECK(x == y);
    CHECK(x.str() == y.str());
}
