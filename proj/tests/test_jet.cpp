#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "vectcoh/jet.hpp"

using namespace vectcoh;
using vectcoh::testing::Gen;

namespace {
constexpr int kX = 0;
constexpr int kY = 1;

JetMonomial mono2(int i, int j, int e) {
    JetMonomial m;
    m.v[0] = i;
    m.v[1] = j;
    m.f = e;
    return m;
}

JetPoly poly2(std::initializer_list<std::tuple<int, int, int, long>> terms) {
    JetPoly p(0b011u);
    for (auto [i, j, e, c] : terms) p.add_term(mono2(i, j, e), Scalar(rat_of(c)));
    return p;
}

JetPoly poly1(std::initializer_list<std::tuple<int, int, long>> terms) {
    JetPoly p(0b001u);
    for (auto [i, e, c] : terms) {
        JetMonomial m;
        m.v[0] = i;
        m.f = e;
        p.add_term(m, Scalar(rat_of(c)));
    }
    return p;
}

JetPoly random_jet(Gen& g, unsigned mask, int max_order) {
    JetPoly p(mask);
    int nterms = static_cast<int>(g.small_int(1, 5));
    for (int t = 0; t < nterms; ++t) {
        JetMonomial m;
        for (int s = 0; s < 3; ++s)
            if (mask & (1u << s)) m.v[s] = static_cast<int>(g.small_int(0, max_order));
        m.f = static_cast<int>(g.small_int(0, max_order));
        p.add_term(m, Scalar(g.rat()));
    }
    return p;
}
}  // namespace

TEST_CASE("total derivative satisfies the Leibniz rule") {
    // d(X'' f) = X''' f + X'' f'
    JetPoly p = poly1({{2, 0, 1}});
    CHECK(p.total_derivative() == poly1({{3, 0, 1}, {2, 1, 1}}));

    // d(X' Y'' f) = X'' Y'' f + X' Y''' f + X' Y'' f'
    JetPoly q = poly2({{1, 2, 0, 1}});
    CHECK(q.total_derivative() == poly2({{2, 2, 0, 1}, {1, 3, 0, 1}, {1, 2, 1, 1}}));

    // d(0) = 0 and linearity
    CHECK(JetPoly(0b011u).total_derivative().is_zero());
    Gen g;
    for (int i = 0; i < 60; ++i) {
        JetPoly a = random_jet(g, 0b011u, 4), b = random_jet(g, 0b011u, 4);
        CHECK((a + b).total_derivative() == a.total_derivative() + b.total_derivative());
    }

    // raises homogeneous total order by exactly one
    JetPoly h = poly2({{1, 2, 3, 5}, {2, 2, 2, -7}});
    REQUIRE(h.homogeneous_order() == 6);
    CHECK(h.total_derivative().homogeneous_order() == 7);
}

TEST_CASE("bracket substitution") {
    // W f with W = [X,Y] -> (X Y' - X' Y) f
    JetPoly w0 = poly1({{0, 0, 1}});
    CHECK(w0.substitute_bracket(kX, kX, kY) == poly2({{0, 1, 0, 1}, {1, 0, 0, -1}}));

    // W' f -> (X Y'' - X'' Y) f ; derived by differentiating X Y' - X' Y once,
    // the middle terms cancel
    JetPoly w1 = poly1({{1, 0, 1}});
    JetPoly once = poly2({{0, 1, 0, 1}, {1, 0, 0, -1}}).total_derivative();
    // remove the f' part: W' f means derivative hits W only
    JetPoly expect = poly2({{0, 2, 0, 1}, {2, 0, 0, -1}});
    CHECK(w1.substitute_bracket(kX, kX, kY) == expect);
    CHECK(once == expect + poly2({{0, 1, 1, 1}, {1, 0, 1, -1}}));

    // W'' f -> (X Y''' + X' Y'' - X'' Y' - X''' Y) f via the Leibniz oracle
    JetPoly w2 = poly1({{2, 0, 1}});
    JetPoly d2 = w0.substitute_bracket(kX, kX, kY);
    for (int i = 0; i < 2; ++i) d2 = d2.total_derivative();
    JetPoly expect2 = poly2({{0, 3, 0, 1}, {1, 2, 0, 1}, {2, 1, 0, -1}, {3, 0, 0, -1}});
    CHECK(w2.substitute_bracket(kX, kX, kY) == expect2);

    // result is always antisymmetric under X <-> Y
    Gen g;
    for (int i = 0; i < 60; ++i) {
        JetPoly t = random_jet(g, 0b001u, 5);
        JetPoly s = t.substitute_bracket(kX, kX, kY);
        CHECK(s.antisymmetric_in(kX, kY));
    }

    CHECK_THROWS_AS(poly2({{1, 1, 0, 1}}).substitute_bracket(kX, kX, kY), structure_error);
}

TEST_CASE("slot swaps and antisymmetrization") {
    JetPoly p = poly2({{1, 2, 0, 1}});
    CHECK(p.swap_slots(kX, kY) == poly2({{2, 1, 0, 1}}));
    CHECK(p.swap_slots(kX, kY).swap_slots(kX, kY) == p);
    CHECK(p.antisymmetrize(kX, kY) == poly2({{1, 2, 0, 1}, {2, 1, 0, -1}}));
    CHECK(poly2({{1, 1, 1, 1}}).antisymmetrize(kX, kY).is_zero());
    CHECK_THROWS_AS(poly1({{1, 0, 1}}).swap_slots(kX, kY), structure_error);

    Gen g;
    for (int i = 0; i < 60; ++i) {
        JetPoly a = random_jet(g, 0b011u, 4);
        // antisymmetrize twice doubles
        JetPoly anti = a.antisymmetrize(kX, kY);
        CHECK(anti.antisymmetrize(kX, kY) == anti + anti);
        // total derivative commutes with swaps
        CHECK(a.total_derivative().swap_slots(kX, kY) == a.swap_slots(kX, kY).total_derivative());
    }
}

TEST_CASE("lie derivative on densities") {
    Scalar l = Scalar::lambda();
    // L_X f = X f' + l X' f
    JetPoly lf = lie_derivative(kX, l, JetPoly::density());
    JetPoly expect(0b001u);
    expect.add_term(mono2(0, 0, 1), Scalar(1));  // X f'
    JetMonomial m;
    m.v[0] = 1;
    expect.add_term(m, l);  // l X' f
    CHECK(lf == expect);

    // weight zero drops the X' term
    JetPoly lf0 = lie_derivative(kX, Scalar(0), JetPoly::density());
    CHECK(lf0 == poly1({{0, 1, 1}}));

    // d/dx intertwines F_l -> F_{l+1} only at l = 0: by direct expansion the
    // commutation defect L^{l+1}_X(f') - d(L^l_X f) equals -l X'' f
    JetPoly fp = JetPoly::density().total_derivative();
    JetPoly lhs = lie_derivative(kX, l + Scalar(1), fp);
    JetPoly rhs = lie_derivative(kX, l, JetPoly::density()).total_derivative();
    JetPoly defect(0b001u);
    JetMonomial x2;
    x2.v[0] = 2;
    defect.add_term(x2, -l);
    CHECK(lhs - rhs == defect);
    CHECK(lie_derivative(kX, Scalar(1), fp) ==
          lie_derivative(kX, Scalar(0), JetPoly::density()).total_derivative());
}

TEST_CASE("rendering and homogeneity report") {
    JetPoly p = poly2({{3, 2, 1, 1}});
    CHECK(p.str() == "X^(3)Y''f'");
    // display order puts the highest X-derivative first
    JetPoly q = poly2({{1, 2, 0, 1}, {2, 1, 0, -1}});
    CHECK(q.str() == "-X''Y'f + X'Y''f");
    JetPoly inhom = poly2({{1, 0, 0, 1}, {2, 2, 2, 3}});
    CHECK(!inhom.homogeneous_order().has_value());
}
