#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vectcoh/cochain.hpp"

namespace vectcoh {

// Concrete polynomial model: densities f dx^w with f in Q(sqrt(d))[x] and
// polynomial vector fields X d/dx.  Everything here avoids the jet algebra
// on purpose: plain polynomial differentiation only, so agreement with the
// symbolic path is a genuine cross-check.
struct PolyDensity {
    UPoly coeffs;   // polynomial in x
    QuadExt weight;
};

struct ConcreteVectorField {
    UPoly coeffs;  // polynomial in x
};

// L^w_X f = X f' + w X' f.
PolyDensity act_density(const ConcreteVectorField& X, const PolyDensity& f);

// [X, Y] = X Y' - X' Y.
ConcreteVectorField bracket(const ConcreteVectorField& X, const ConcreteVectorField& Y);

// Evaluate a 1-cochain on concrete data: substitute derivatives of X for
// the jet symbols.  The weight of f must match the cochain's source weight
// evaluated at l0.
UPoly eval_cochain1(const Cochain1& c, const QuadExt& l0, const UPoly& X, const UPoly& f);

// Evaluate a two-slot jet polynomial on concrete X, Y, f at weight l0.
UPoly eval_jet2(const JetPoly& body, const QuadExt& l0, const UPoly& X, const UPoly& Y,
                const UPoly& f);
UPoly eval_jet3(const JetPoly& body, const QuadExt& l0, const UPoly& X, const UPoly& Y,
                const UPoly& Z, const UPoly& f);

// Concrete coboundary d b(X, Y) f computed with polynomial arithmetic only.
UPoly concrete_coboundary1(const Cochain1& b, const QuadExt& l0, const UPoly& X, const UPoly& Y,
                           const UPoly& f);

// Concrete cup product [[c1, c2]](X, Y) f (both chain orientations, as in
// the symbolic definition).
UPoly concrete_cup(const Cochain1& c1, const Cochain1& c2, const QuadExt& l0, const UPoly& X,
                   const UPoly& Y, const UPoly& f);

// Monomial cross-check: does the two-slot identity `body == 0` hold on all
// tuples X = x^a, Y = x^b, f = x^e with a, b, e <= bound?  Returns the
// first failing tuple if not.
struct CrossCheckFailure {
    int a, b, e;
    std::string detail;
};
std::optional<CrossCheckFailure> cross_check_zero2(const JetPoly& body, const QuadExt& l0,
                                                   int bound);

// Compare a claimed symbolic value of a 2-cochain against an independently
// evaluated concrete functional on monomials.
std::optional<CrossCheckFailure> cross_check_equal2(
    const JetPoly& body, const QuadExt& l0, int bound,
    const std::function<UPoly(const UPoly&, const UPoly&, const UPoly&)>& concrete);

// Default sampled generic weights for cross-checks: 7/3, -11/5, 13/7.
std::vector<QuadExt> oracle_sample_weights();

}  // namespace vectcoh
