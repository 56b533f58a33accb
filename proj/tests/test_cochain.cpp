#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "vectcoh/catalog.hpp"

using namespace vectcoh;
using vectcoh::testing::Gen;

namespace {
constexpr int kX = 0;
constexpr int kY = 1;

Scalar S(long n, long d = 1) { return Scalar(rat_of(n, d)); }
Scalar lam() { return Scalar::lambda(); }

JetPoly poly2(std::initializer_list<std::tuple<int, int, int, Scalar>> terms) {
    JetPoly p(0b011u);
    for (const auto& [i, j, e, c] : terms) {
        JetMonomial m;
        m.v[0] = i;
        m.v[1] = j;
        m.f = e;
        p.add_term(m, c);
    }
    return p;
}

Cochain1 random_cochain(Gen& g, const Scalar& w, int k, bool lambda_coeffs = false) {
    Cochain1 c(w, k);
    for (int j = 0; j <= k + 1; ++j) {
        c.alpha[j] = Scalar(g.rat());
        if (lambda_coeffs && g.small_int(0, 2) == 0) c.alpha[j] = c.alpha[j] * lam() + Scalar(g.rat());
    }
    return c;
}
}  // namespace

TEST_CASE("table of 1-cocycles: every family is killed by the coboundary") {
    Scalar l = lam();
    CHECK(coboundary1(Catalog::c_diag(l)).is_zero());
    CHECK(coboundary1(Catalog::c01()).is_zero());
    CHECK(coboundary1(Catalog::c01_tilde()).is_zero());
    CHECK(coboundary1(Catalog::c_k2(l)).is_zero());
    CHECK(coboundary1(Catalog::c_k3(l)).is_zero());
    CHECK(coboundary1(Catalog::c_k4(l)).is_zero());
    CHECK(coboundary1(Catalog::c05()).is_zero());
    CHECK(coboundary1(Catalog::cm41()).is_zero());
    CHECK(coboundary1(Catalog::c_ai6(1)).is_zero());
    CHECK(coboundary1(Catalog::c_ai6(2)).is_zero());

    // the order-6 family at shift 5 really needs its pinned weights
    Cochain1 c05_shifted(S(1), 5, Catalog::c05().alpha);
    CHECK(!coboundary1(c05_shifted).is_zero());
    // the a_i family is a cocycle only at the two resonant surd weights
    Cochain1 c6_generic(l, 6, Catalog::c_ai6(1).alpha);
    CHECK(!coboundary1(c6_generic).is_zero());
}

TEST_CASE("coboundary of the general order-3 cochain at shift 2") {
    // d kills the alpha_0, alpha_1 monomials (both are cocycles); the
    // alpha_2, alpha_3 images below were derived by hand Leibniz expansion
    // and cross-checked on concrete monomials.
    Scalar l = lam();
    for (int j : {0, 1}) {
        Cochain1 b(l, 2);
        b.alpha[j] = S(1);
        CHECK(coboundary1(b).is_zero());
    }
    Cochain1 b2(l, 2);
    b2.alpha[2] = S(1);
    JetPoly d2 = poly2({{3, 1, 0, -l}, {2, 1, 1, -(S(2) * l + S(1))}}).antisymmetrize(kX, kY);
    CHECK(coboundary1(b2).body == d2);

    Cochain1 b3(l, 2);
    b3.alpha[3] = S(1);
    JetPoly d3 = poly2({{0, 4, 0, l},
                        {0, 3, 1, S(3) * l + S(1)},
                        {0, 2, 2, S(3) * l + S(3)},
                        {0, 1, 3, S(1)}})
                     .antisymmetrize(kX, kY);
    CHECK(coboundary1(b3).body == d3);

    // the classical display of this map carries the opposite orientation:
    // it equals -(d b) term by term
    JetPoly display = poly2({{0, 4, 0, -l},
                             {1, 3, 0, -l},
                             {0, 3, 1, -(S(3) * l + S(1))},
                             {1, 2, 1, -(S(2) * l + S(1))},
                             {0, 2, 2, -(S(3) * l + S(3))},
                             {0, 1, 3, S(-1)}})
                        .antisymmetrize(kX, kY);
    Cochain1 b23(l, 2);
    b23.alpha[2] = S(1);
    b23.alpha[3] = S(1);
    CHECK(coboundary1(b23).body == -display);
}

TEST_CASE("coboundary images used by the deformation analysis") {
    // d(X^(5) f) at shift 4 equals 5(X^(4)Y'' - X''Y^(4)) f
    Cochain1 b(lam(), 4);
    b.alpha[0] = S(1);
    CHECK(coboundary1(b).body == poly2({{4, 2, 0, S(5)}}).antisymmetrize(kX, kY));

    // the order-6 general coboundary at (0,5): f-coefficient of the alpha_0
    // image is 9 X^(5)Y'' + 5 X^(4)Y^(3) - (X <-> Y)
    Cochain1 b0(S(0), 5);
    b0.alpha[0] = S(1);
    CHECK(coboundary1(b0).body ==
          poly2({{5, 2, 0, S(9)}, {4, 3, 0, S(5)}}).antisymmetrize(kX, kY));
}

TEST_CASE("coboundary of degree-0 cochains lands in the kernel of d1") {
    Gen g;
    Scalar l = lam();
    for (int k = 0; k <= 6; ++k) {
        Cochain1 db = coboundary0(l, k, Scalar(g.rat()));
        CHECK(coboundary1(db).is_zero());
    }
    // explicit low-order value: d(a d^2) = -a(l X^(3) f + (2l+1) X'' f')
    Cochain1 d2 = coboundary0(l, 2, S(1));
    CHECK(d2.alpha[0] == -l);
    CHECK(d2.alpha[1] == -(S(2) * l + S(1)));
    CHECK(d2.alpha[2].is_zero());
    CHECK(d2.alpha[3].is_zero());
}

TEST_CASE("d o d = 0 from degree 1 to degree 3") {
    Gen g;
    Scalar l = lam();
    for (int i = 0; i < 40; ++i) {
        int k = static_cast<int>(g.small_int(0, 8));
        Cochain1 b = random_cochain(g, l, k, true);
        Cochain3 dd = coboundary2(coboundary1(b));
        CHECK(dd.is_zero());
    }
    // and at specialized resonant weights
    for (const Scalar& w : {S(0), S(-4), Scalar(ConstantsTable::a(1))}) {
        Cochain1 b = random_cochain(g, w, 5);
        CHECK(coboundary2(coboundary1(b)).is_zero());
    }
}

TEST_CASE("coboundary2 output is totally antisymmetric") {
    Gen g;
    Cochain1 b = random_cochain(g, lam(), 4, true);
    Cochain3 d = coboundary2(coboundary1(b) + Catalog::omega_k4(lam()));
    CHECK(d.totally_antisymmetric());
}

TEST_CASE("multiplication-type shift-1 body is a 2-cocycle at every weight") {
    // the lambda terms cancel in [L_P, mult(W)], so cocyclehood here is
    // weight independent; the weight only decides triviality
    for (const Scalar& w : {S(0), S(1), S(-7), lam()}) {
        Cochain2 om(w, 1, Catalog::omega01().body);
        CHECK(coboundary2(om).is_zero());
    }
}

TEST_CASE("cup products reproducing the displayed 2-cocycles") {
    Scalar l = lam();
    // [[C_{1,1}, C_{0,1}]] = Omega_{0,1}
    CHECK(cup(Catalog::c_diag(S(1)), Catalog::c01()) == Catalog::omega01());
    // -[[C_{0,1}, C_{0,0}]] = Omega_{0,1}
    CHECK(-cup(Catalog::c01(), Catalog::c_diag(S(0))) == Catalog::omega01());
    // [[C_{1,1}, Ctilde_{0,1}]] = Omega_{0,1}; the variant with C_{0,0} on
    // the right vanishes identically (symmetric composition)
    CHECK(cup(Catalog::c_diag(S(1)), Catalog::c01_tilde()) == Catalog::omega01());
    CHECK(cup(Catalog::c01_tilde(), Catalog::c_diag(S(0))).is_zero());
    // generic-weight identities for shift 2
    CHECK(cup(Catalog::c_k2(l), Catalog::c_diag(l)) == Catalog::omega_k2(l));
    CHECK(-cup(Catalog::c_diag(l + S(2)), Catalog::c_k2(l)) == Catalog::omega_k2(l));
    // shift 4: the diagonal-after order reproduces the display exactly
    CHECK(cup(Catalog::c_diag(l + S(4)), Catalog::c_k4(l)) == Catalog::omega_k4(l));
}

TEST_CASE("cup with a coboundary is the coboundary of the composite") {
    // [[C_{3,5}, C_{1,3}]] = d b_{1,5} with b_{1,5} = -2 X^(4) f'
    Cochain2 cup35 = cup(Catalog::c_k2(S(3)), Catalog::c_k2(S(1)));
    CHECK(cup35 == coboundary1(Catalog::b_k4(S(1))));
    // and as a generic-weight rational identity
    Cochain2 cupg = cup(Catalog::c_k2(lam() + S(2)), Catalog::c_k2(lam()));
    CHECK(cupg == coboundary1(Catalog::b_k4(lam())));
}

TEST_CASE("cup of 1-cocycles is a 2-cocycle; bilinearity; antisymmetry") {
    Scalar l = lam();
    std::vector<Cochain1> cocycles = {Catalog::c_diag(l),  Catalog::c_k2(l),
                                      Catalog::c_k3(l),    Catalog::c_k4(l),
                                      Catalog::c_diag(l + S(2))};
    for (const auto& c1 : cocycles) {
        for (const auto& c2 : cocycles) {
            if (!cup_chains(c1, c2)) continue;
            Cochain2 om = cup(c1, c2);
            CHECK(om.body.antisymmetric_in(kX, kY));
            CHECK(coboundary2(om).is_zero());
        }
    }
    // [[C, 0]] = 0
    Cochain1 zero(l, 0);
    CHECK(cup(Catalog::c_k2(l), zero.scaled(S(0))).is_zero());
    CHECK_THROWS_AS(cup(Catalog::c_k2(S(0)), Catalog::c_k2(S(7))), structure_error);
}

TEST_CASE("specialization commutes with the coboundary") {
    Gen g;
    QuadExt at(rat_of(7, 3));
    for (int i = 0; i < 25; ++i) {
        int k = static_cast<int>(g.small_int(0, 6));
        Cochain1 b = random_cochain(g, lam(), k, true);
        CHECK(coboundary1(b.specialize(at)).body == coboundary1(b).body.eval_lambda(at));
    }
}

TEST_CASE("cocycle availability per block") {
    CHECK(Catalog::cocycles_at(lam(), 2).size() == 1);
    CHECK(Catalog::cocycles_at(S(0), 1).size() == 2);
    CHECK(Catalog::cocycles_at(S(3), 1).empty());
    CHECK(Catalog::cocycles_at(S(0), 5).size() == 1);
    CHECK(Catalog::cocycles_at(S(-4), 5).size() == 1);
    CHECK(Catalog::cocycles_at(S(1), 5).empty());
    CHECK(Catalog::cocycles_at(Scalar(ConstantsTable::a(1)), 6).size() == 1);
    CHECK(Catalog::cocycles_at(lam(), 6).empty());
    CHECK(Catalog::cocycles_at(lam(), 7).empty());
}

TEST_CASE("catalog serialization round-trips and the hash is stable") {
    Catalog cat;
    for (const auto& e : cat.entries()) {
        if (e.c1) {
            Cochain1 c = e.c1();
            CHECK(deserialize_cochain1(serialize(c)) == c);
        }
    }
    CHECK(cat.hash() == Catalog().hash());
    CHECK(!cat.hash().empty());
}

TEST_CASE("weight rendering and parsing") {
    CHECK(weight_str(lam()) == "l");
    CHECK(weight_str(lam() + S(3)) == "l+3");
    CHECK(weight_str(S(-4)) == "-4");
    CHECK(weight_str(Scalar(ConstantsTable::a(1))) == "a1");
    CHECK(weight_str(Scalar(ConstantsTable::a(2)) - S(3)) == "a2-3");
    for (const char* s : {"l", "l+3", "l-1/2", "-4", "7/3", "a1", "a1+6", "a2-4"}) {
        CHECK(weight_str(weight_parse(s)) == s);
    }
}
