#include "vectcoh/oracle.hpp"

namespace vectcoh {

PolyDensity act_density(const ConcreteVectorField& X, const PolyDensity& f) {
    UPoly out = X.coeffs * f.coeffs.derivative() +
                X.coeffs.derivative() * f.coeffs.scaled(f.weight);
    return PolyDensity{out, f.weight};
}

ConcreteVectorField bracket(const ConcreteVectorField& X, const ConcreteVectorField& Y) {
    return ConcreteVectorField{X.coeffs * Y.coeffs.derivative() - X.coeffs.derivative() * Y.coeffs};
}

namespace {
UPoly derivative_n(UPoly p, int n) {
    for (int i = 0; i < n; ++i) p = p.derivative();
    return p;
}
}  // namespace

UPoly eval_cochain1(const Cochain1& c, const QuadExt& l0, const UPoly& X, const UPoly& f) {
    UPoly acc;
    int m = c.shift + 1;
    for (int j = 0; j <= m; ++j) {
        if (c.alpha[j].is_zero()) continue;
        acc += (derivative_n(X, m - j) * derivative_n(f, j)).scaled(c.alpha[j].eval(l0));
    }
    return acc;
}

UPoly eval_jet2(const JetPoly& body, const QuadExt& l0, const UPoly& X, const UPoly& Y,
                const UPoly& f) {
    UPoly acc;
    for (const auto& [m, coef] : body.terms()) {
        UPoly term = derivative_n(X, m.v[0]) * derivative_n(Y, m.v[1]) * derivative_n(f, m.f);
        acc += term.scaled(coef.eval(l0));
    }
    return acc;
}

UPoly eval_jet3(const JetPoly& body, const QuadExt& l0, const UPoly& X, const UPoly& Y,
                const UPoly& Z, const UPoly& f) {
    UPoly acc;
    for (const auto& [m, coef] : body.terms()) {
        UPoly term = derivative_n(X, m.v[0]) * derivative_n(Y, m.v[1]) *
                     derivative_n(Z, m.v[2]) * derivative_n(f, m.f);
        acc += term.scaled(coef.eval(l0));
    }
    return acc;
}

UPoly concrete_coboundary1(const Cochain1& b, const QuadExt& l0, const UPoly& X, const UPoly& Y,
                           const UPoly& f) {
    QuadExt w = b.weight.eval(l0);
    QuadExt wk = w + QuadExt(b.shift);
    auto lie = [](const UPoly& vf, const QuadExt& wt, const UPoly& g) {
        return vf * g.derivative() + vf.derivative() * g.scaled(wt);
    };
    // [L_X, b(Y)] f - [L_Y, b(X)] f - b([X,Y]) f
    UPoly bX_f = eval_cochain1(b, l0, X, f);
    UPoly bY_f = eval_cochain1(b, l0, Y, f);
    UPoly term1 = lie(X, wk, bY_f) - eval_cochain1(b, l0, Y, lie(X, w, f));
    UPoly term2 = lie(Y, wk, bX_f) - eval_cochain1(b, l0, X, lie(Y, w, f));
    UPoly term3 = eval_cochain1(b, l0, X * Y.derivative() - X.derivative() * Y, f);
    return term1 - term2 - term3;
}

UPoly concrete_cup(const Cochain1& c1, const Cochain1& c2, const QuadExt& l0, const UPoly& X,
                   const UPoly& Y, const UPoly& f) {
    UPoly acc;
    if (c2.target() == c1.weight) {
        acc += eval_cochain1(c1, l0, X, eval_cochain1(c2, l0, Y, f)) -
               eval_cochain1(c1, l0, Y, eval_cochain1(c2, l0, X, f));
    }
    if (c1.target() == c2.weight) {
        acc += eval_cochain1(c2, l0, X, eval_cochain1(c1, l0, Y, f)) -
               eval_cochain1(c2, l0, Y, eval_cochain1(c1, l0, X, f));
    }
    return acc;
}

std::optional<CrossCheckFailure> cross_check_zero2(const JetPoly& body, const QuadExt& l0,
                                                   int bound) {
    return cross_check_equal2(body, l0, bound,
                              [](const UPoly&, const UPoly&, const UPoly&) { return UPoly(); });
}

std::optional<CrossCheckFailure> cross_check_equal2(
    const JetPoly& body, const QuadExt& l0, int bound,
    const std::function<UPoly(const UPoly&, const UPoly&, const UPoly&)>& concrete) {
    for (int a = 0; a <= bound; ++a) {
        UPoly X = UPoly::monomial(QuadExt(1), a);
        for (int b = 0; b <= bound; ++b) {
            UPoly Y = UPoly::monomial(QuadExt(1), b);
            for (int e = 0; e <= bound; ++e) {
                UPoly f = UPoly::monomial(QuadExt(1), e);
                UPoly lhs = eval_jet2(body, l0, X, Y, f);
                UPoly rhs = concrete(X, Y, f);
                if (lhs != rhs) {
                    return CrossCheckFailure{a, b, e,
                                             "mismatch at X=x^" + std::to_string(a) + ", Y=x^" +
                                                 std::to_string(b) + ", f=x^" + std::to_string(e)};
                }
            }
        }
    }
    return std::nullopt;
}

std::vector<QuadExt> oracle_sample_weights() {
    return {QuadExt(rat_of(7, 3)), QuadExt(rat_of(-11, 5)), QuadExt(rat_of(13, 7))};
}

}  // namespace vectcoh
