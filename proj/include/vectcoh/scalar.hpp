#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "vectcoh/upoly.hpp"

namespace vectcoh {

// Element of Q(sqrt(d))(l): rational function in the formal weight l.
// Canonical form: denominator monic and nonzero, gcd(num, den) = 1; the
// zero element is 0/1.  Values are immutable once built.
class Scalar {
public:
    Scalar() : num_(), den_(QuadExt(1)) {}
    Scalar(long v) : num_(QuadExt(v)), den_(QuadExt(1)) {}  // NOLINT
    Scalar(QuadExt v) : num_(std::move(v)), den_(QuadExt(1)) {}  // NOLINT
    Scalar(Rat v) : num_(QuadExt(std::move(v))), den_(QuadExt(1)) {}  // NOLINT
    Scalar(UPoly num, UPoly den);
    explicit Scalar(UPoly num) : num_(std::move(num)), den_(QuadExt(1)) {}

    static Scalar lambda() { return Scalar(UPoly::variable()); }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_rational() const { return is_constant() && num_.disc() == 0; }
    // Requires is_constant().
    QuadExt constant() const;

    Scalar operator-() const { return Scalar::raw(-num_, den_); }
    Scalar inv() const;
    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inv(); }
    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
    Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

    bool operator==(const Scalar& y) const { return num_ == y.num_ && den_ == y.den_; }
    bool operator!=(const Scalar& y) const { return !(*this == y); }
    std::strong_ordering operator<=>(const Scalar& y) const;

    // Substitution l := x; throws pole_error when the denominator vanishes,
    // carrying the monic minimal polynomial of x over Q.
    QuadExt eval(const QuadExt& x) const;
    bool has_pole_at(const QuadExt& x) const { return den_.eval(x).is_zero(); }
    Scalar shift_lambda(const QuadExt& c) const;  // l := l + c

    // Galois conjugation sqrt(d) -> -sqrt(d) applied to every coefficient.
    Scalar galois_conj() const;

    // "(num)/(den)" with sparse polynomials; exact round-trip with parse.
    std::string str() const;
    static Scalar parse(const std::string& text);

private:
    static Scalar raw(UPoly num, UPoly den) {
        Scalar s;
        s.num_ = std::move(num);
        s.den_ = std::move(den);
        return s;
    }
    UPoly num_, den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Monic minimal polynomial over Q of an element of Q(sqrt(d)).
UPoly minimal_poly(const QuadExt& x);

}  // namespace vectcoh
