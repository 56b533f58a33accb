#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "vectcoh/rational.hpp"

namespace vectcoh {

// Element a + b*sqrt(d) of a real quadratic extension of Q.  d = 0 marks a
// plain rational (b must vanish); the supported surds are d = 19 and d = 39.
// A single expression never mixes the two surds: combining them throws.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(long v) : a_(rat_of(v)), b_(0), d_(0) {}  // NOLINT(runtime/explicit)
    QuadExt(Rat v) : a_(std::move(v)), b_(0), d_(0) {}  // NOLINT(runtime/explicit)
    QuadExt(Rat base, Rat surd, int d);

    const Rat& base() const { return a_; }
    const Rat& surd() const { return b_; }
    int disc() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadExt conj() const { return QuadExt(a_, -b_, d_); }
    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
    QuadExt inv() const;

    // Exact sign of the real number a + b*sqrt(d), d > 0.
    int sign() const;

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inv(); }

    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }

    bool operator==(const QuadExt& y) const { return a_ == y.a_ && b_ == y.b_; }
    bool operator!=(const QuadExt& y) const { return !(*this == y); }

    // Structural total order (d, base, surd); used for canonical containers,
    // unrelated to the numeric order on the real line.
    std::strong_ordering operator<=>(const QuadExt& y) const;

    std::string str() const;
    static QuadExt parse(const std::string& text);

private:
    Rat a_, b_;
    int d_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& q);

// Shared discriminant of two operands; throws on a 19/39 clash.
int unify_disc(int d1, int d2);

// The named exact constants of the cocycle tables.  Index i is 1 or 2; the
// two members of each pair are Galois conjugates over Q(sqrt(19)).
struct ConstantsTable {
    static QuadExt a(int i);       // roots of 2*l^2 + 10*l + 3
    static QuadExt alpha(int i);
    static QuadExt beta(int i);
    static QuadExt gamma(int i);
    static QuadExt eta(int i);
    static QuadExt theta(int i);
    static QuadExt mu(int i);
    static QuadExt nu(int i);
};

}  // namespace vectcoh
