#pragma once

#include <map>
#include <string>
#include <vector>

#include "vectcoh/scalar.hpp"

namespace vectcoh {

// Deformation parameter t[w,w+k]; ttilde[0,1] is a distinct generator,
// never aliased with t[0,1].
struct ParamKey {
    Scalar lo;
    int shift = 0;
    bool tilde = false;

    Scalar hi() const { return lo + Scalar(shift); }
    std::string str() const;
    static ParamKey parse(const std::string& text);

    bool operator==(const ParamKey& o) const {
        return shift == o.shift && tilde == o.tilde && lo == o.lo;
    }
    bool operator<(const ParamKey& o) const {
        if (lo != o.lo) return lo < o.lo;
        if (shift != o.shift) return shift < o.shift;
        return tilde < o.tilde;
    }
};

// Multidegree over the parameters (sparse, positive exponents).
using TMonomial = std::map<ParamKey, int>;

std::string tmonomial_str(const TMonomial& m);
int tmonomial_degree(const TMonomial& m);
TMonomial tmonomial_mul(const TMonomial& a, const TMonomial& b);

// Sparse polynomial in the deformation parameters over the scalar field.
class TPoly {
public:
    TPoly() = default;
    explicit TPoly(Scalar c) { add(TMonomial{}, std::move(c)); }
    static TPoly var(const ParamKey& k) {
        TPoly p;
        p.add(TMonomial{{k, 1}}, Scalar(1));
        return p;
    }

    const std::map<TMonomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int degree() const;
    void add(const TMonomial& m, const Scalar& c);

    TPoly operator-() const;
    friend TPoly operator+(const TPoly& a, const TPoly& b);
    friend TPoly operator-(const TPoly& a, const TPoly& b);
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    TPoly& operator+=(const TPoly& b) { return *this = *this + b; }
    TPoly& operator-=(const TPoly& b) { return *this = *this - b; }
    TPoly scaled(const Scalar& c) const;
    bool operator==(const TPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const TPoly& o) const { return !(*this == o); }

    // Leading term in the fixed monomial order: lexicographic over the
    // parameter order with earlier parameters weighing more.
    const TMonomial* leading_monomial() const;
    Scalar leading_coeff() const;

    // Canonical normalized form of an extracted condition: denominators
    // cleared, polynomial and rational content removed, leading coefficient
    // positive under the fixed monomial order.
    TPoly condition_normal_form() const;

    // Substitute concrete parameter values (missing keys read as zero).
    Scalar substitute(const std::map<ParamKey, QuadExt>& values) const;
    // Relabel parameters (weights shifted by -c), for the shift-invariance
    // comparison.
    TPoly relabel_weights(const Scalar& offset) const;

    std::string str() const;

private:
    std::map<TMonomial, Scalar> terms_;
};

// Ideal membership in the degree-graded sense used by the obstruction
// analysis: p is a member when it is a combination sum_i m_i g_i with
// monomial coefficients (everything here is homogeneous).  A fast path
// recognizes exact scalar multiples of a single generator.
bool ideal_member(const TPoly& p, const std::vector<TPoly>& gens);

}  // namespace vectcoh
