#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "vectcoh/scalar.hpp"

namespace vectcoh {

// A jet monomial X^(a) Y^(b) Z^(c) f^(e): the product of derivatives of up
// to three vector-field slots and one density slot.  Which vector slots are
// actually present is owned by the enclosing JetPoly (multilinearity: each
// present slot appears exactly once per monomial, possibly underived).
struct JetMonomial {
    std::array<int, 3> v{0, 0, 0};
    int f = 0;

    int total(unsigned mask) const {
        int t = f;
        for (int s = 0; s < 3; ++s)
            if (mask & (1u << s)) t += v[s];
        return t;
    }
    bool operator==(const JetMonomial& o) const { return v == o.v && f == o.f; }
};

// Display order: highest X-derivative first, then Y, Z, f.
struct JetMonomialDescending {
    bool operator()(const JetMonomial& a, const JetMonomial& b) const {
        if (a.v != b.v) return a.v > b.v;
        return a.f > b.f;
    }
};

// Finite Scalar-linear combination of jet monomials, multilinear in every
// active slot.  slot 0 = X, 1 = Y, 2 = Z; the density slot f is always
// active.  No zero coefficients are stored.
class JetPoly {
public:
    using TermMap = std::map<JetMonomial, Scalar, JetMonomialDescending>;

    JetPoly() = default;
    explicit JetPoly(unsigned slot_mask) : mask_(slot_mask) {}

    // The bare density f (no vector slots).
    static JetPoly density() {
        JetPoly p(0u);
        p.add_term(JetMonomial{}, Scalar(1));
        return p;
    }

    unsigned slot_mask() const { return mask_; }
    bool slot_active(int s) const { return (mask_ >> s) & 1u; }
    int arity() const { return __builtin_popcount(mask_); }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }

    void add_term(const JetMonomial& m, const Scalar& c);

    JetPoly operator-() const;
    friend JetPoly operator+(const JetPoly& p, const JetPoly& q);
    friend JetPoly operator-(const JetPoly& p, const JetPoly& q);
    JetPoly& operator+=(const JetPoly& q) { return *this = *this + q; }
    JetPoly& operator-=(const JetPoly& q) { return *this = *this - q; }
    JetPoly scaled(const Scalar& c) const;

    bool operator==(const JetPoly& q) const { return mask_ == q.mask_ && terms_ == q.terms_; }
    bool operator!=(const JetPoly& q) const { return !(*this == q); }

    // Total derivative d/dx: Leibniz over all active slots and f.
    JetPoly total_derivative() const;
    JetPoly derivative_n(int n) const;

    // Multiplication by the factor slot^(order); the slot must be inactive.
    JetPoly mul_slot(int slot, int order) const;

    // Exchange of two active slots; antisymmetrize(p) = p - swap(p).
    JetPoly swap_slots(int s1, int s2) const;
    JetPoly antisymmetrize(int s1, int s2) const;
    bool antisymmetric_in(int s1, int s2) const;

    // Replace the active slot `src` (a one-vector-argument template slot) by
    // the bracket [A, B] = A B' - A' B of two fresh slots.
    JetPoly substitute_bracket(int src, int slot_a, int slot_b) const;

    // Move active slots around: perm[s] gives the new index of old slot s
    // (identity on inactive slots; targets must be distinct and free).
    JetPoly relabel(const std::array<int, 3>& perm) const;

    // Homogeneity is checked and reported, never silently enforced.
    std::optional<int> homogeneous_order() const;

    // Specialize the weight variable in every coefficient.
    JetPoly eval_lambda(const QuadExt& x) const;
    JetPoly galois_conj() const;

    // Rendering close to the classical notation: X^(3)Y''f'.
    std::string str() const;

private:
    unsigned mask_ = 0;
    TermMap terms_;
};

// L_X with weight w acting on a density-valued jet polynomial:
// X * d(g) + w * X' * g.  The slot must be inactive in g.
JetPoly lie_derivative(int slot, const Scalar& weight, const JetPoly& g);

// Apply a differential-operator template to an argument polynomial: every
// template term  c * (slot factors) * f^(e)  becomes  c * (slot factors) *
// d^e(arg).  Active slots of the template and argument must not overlap.
JetPoly apply_operator(const JetPoly& templ, const JetPoly& arg);

}  // namespace vectcoh
