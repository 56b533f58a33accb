#pragma once

#include <compare>
#include <string>
#include <vector>

#include "vectcoh/quadext.hpp"

namespace vectcoh {

// Dense univariate polynomial over Q(sqrt(d)), ascending coefficients.
// The zero polynomial is the empty coefficient list; otherwise the leading
// coefficient is nonzero.  The indeterminate has no fixed name: the weight
// variable renders as "l", concrete space polynomials as "x".
class UPoly {
public:
    UPoly() = default;
    UPoly(QuadExt c) { coeffs_.push_back(std::move(c)); trim(); }  // NOLINT
    UPoly(long c) : UPoly(QuadExt(c)) {}                           // NOLINT
    explicit UPoly(std::vector<QuadExt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UPoly variable() { return monomial(QuadExt(1), 1); }
    static UPoly monomial(QuadExt c, int power);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<QuadExt>& coeffs() const { return coeffs_; }
    QuadExt coeff(int k) const {
        return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : QuadExt(0);
    }
    QuadExt leading() const { return is_zero() ? QuadExt(0) : coeffs_.back(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const { return !is_zero() && leading() == QuadExt(1); }
    int disc() const;

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& p, const UPoly& q);
    friend UPoly operator-(const UPoly& p, const UPoly& q);
    friend UPoly operator*(const UPoly& p, const UPoly& q);
    UPoly& operator+=(const UPoly& q) { return *this = *this + q; }
    UPoly& operator-=(const UPoly& q) { return *this = *this - q; }
    UPoly& operator*=(const UPoly& q) { return *this = *this * q; }

    UPoly scaled(const QuadExt& c) const;
    UPoly monic() const;
    UPoly derivative() const;
    QuadExt eval(const QuadExt& x) const;
    UPoly shift_arg(const QuadExt& c) const;  // p(x + c)

    // Quotient/remainder over the coefficient field.
    static void divmod(const UPoly& a, const UPoly& b, UPoly& quo, UPoly& rem);
    friend UPoly operator/(const UPoly& a, const UPoly& b);
    friend UPoly operator%(const UPoly& a, const UPoly& b);
    bool divides(const UPoly& a) const;

    // Monic gcd; gcd(0,0) = 0.
    static UPoly gcd(UPoly a, UPoly b);

    // gcd of the rational coordinates of all coefficients (0 for the zero
    // polynomial); dividing by it clears rational content.
    Rat rational_content() const;

    bool operator==(const UPoly& q) const { return coeffs_ == q.coeffs_; }
    bool operator!=(const UPoly& q) const { return !(*this == q); }
    std::strong_ordering operator<=>(const UPoly& q) const;

    // Sparse rendering "c*v^k+..." with descending powers; v is the variable
    // name ("l" or "x").
    std::string str(const std::string& var = "l") const;
    static UPoly parse(const std::string& text, const std::string& var = "l");

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<QuadExt> coeffs_;
};

}  // namespace vectcoh
