#pragma once

#include <string>
#include <vector>

#include "vectcoh/jet.hpp"

namespace vectcoh {

// Weights are scalars: the formal weight l (possibly shifted, l + c) or a
// constant of Q(sqrt(d)).  Rendering recognizes a1/a2 offsets.
std::string weight_str(const Scalar& w);
Scalar weight_parse(const std::string& text);

// Translation-invariant 1-cochain of weight w and shift k in the canonical
// order-homogeneous coefficient form  sum_j alpha_j X^(k+1-j) f^(j),
// j = 0..k+1.
struct Cochain1 {
    Scalar weight;
    int shift = 0;
    std::vector<Scalar> alpha;  // size shift + 2

    Cochain1() = default;
    Cochain1(Scalar w, int k) : weight(std::move(w)), shift(k), alpha(k + 2, Scalar(0)) {}
    Cochain1(Scalar w, int k, std::vector<Scalar> a);

    Scalar target() const { return weight + Scalar(shift); }
    bool is_zero() const;
    int order() const { return shift + 1; }

    Cochain1 operator-() const;
    friend Cochain1 operator+(const Cochain1& a, const Cochain1& b);
    friend Cochain1 operator-(const Cochain1& a, const Cochain1& b);
    Cochain1 scaled(const Scalar& c) const;
    bool operator==(const Cochain1& o) const {
        return weight == o.weight && shift == o.shift && alpha == o.alpha;
    }

    // The value b(X) f as a jet polynomial in the given vector slot.
    JetPoly to_jet(int slot) const;
    // b(slot) applied to an arbitrary density-valued argument.
    JetPoly apply(int slot, const JetPoly& arg) const;

    Cochain1 specialize(const QuadExt& l0) const;
    Cochain1 galois_conj() const;
    std::string str() const;
};

// Antisymmetric two-slot 2-cochain; body lives in slots (X, Y).
struct Cochain2 {
    Scalar weight;
    int shift = 0;
    JetPoly body;  // slots {X,Y}, homogeneous of order shift + 2 in the calculus

    Cochain2() = default;
    Cochain2(Scalar w, int k) : weight(std::move(w)), shift(k), body(0b011u) {}
    Cochain2(Scalar w, int k, JetPoly b);

    bool is_zero() const { return body.is_zero(); }
    Cochain2 operator-() const { return Cochain2(weight, shift, -body); }
    friend Cochain2 operator+(const Cochain2& a, const Cochain2& b);
    friend Cochain2 operator-(const Cochain2& a, const Cochain2& b);
    Cochain2 scaled(const Scalar& c) const { return Cochain2(weight, shift, body.scaled(c)); }
    bool operator==(const Cochain2& o) const {
        return weight == o.weight && shift == o.shift && body == o.body;
    }

    Cochain2 specialize(const QuadExt& l0) const;
    std::string str() const { return body.str(); }
};

// Totally antisymmetric three-slot 3-cochain.
struct Cochain3 {
    Scalar weight;
    int shift = 0;
    JetPoly body;  // slots {X,Y,Z}

    bool is_zero() const { return body.is_zero(); }
    bool totally_antisymmetric() const;
};

// L^w_X on densities, as in the module action; the f argument may be any
// one-slot-or-less jet polynomial.
JetPoly lie_derivative_on_density(int slot, const Scalar& weight, const JetPoly& f);

// Chevalley-Eilenberg differentials.
Cochain2 coboundary1(const Cochain1& b);
Cochain3 coboundary2(const Cochain2& omega);

// Differential of a degree-0 cochain a * d^k (the translation-invariant
// operators of pure order k), returned in the canonical Cochain1 form.
Cochain1 coboundary0(const Scalar& weight, int order, const Scalar& a);

// Cup product [[C1, C2]](x, y) = [C1(x), C2(y)] + [C2(x), C1(y)] restricted
// to the graded component where the two operator blocks chain; extension by
// zero off their source components.  Requires at least one chaining.
Cochain2 cup(const Cochain1& c1, const Cochain1& c2);
bool cup_chains(const Cochain1& c1, const Cochain1& c2);

}  // namespace vectcoh
