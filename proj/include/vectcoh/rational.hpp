#pragma once

#include <gmpxx.h>

#include <string>

#include "vectcoh/errors.hpp"

namespace vectcoh {

// Arbitrary-precision rational, always in canonical form (reduced,
// positive denominator).  GMP's mpq_class maintains the invariant for all
// arithmetic; construction from raw parts goes through rat_of below.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat_of(long num, long den = 1) {
    if (den == 0) throw arithmetic_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_of(const Int& num, const Int& den) {
    if (den == 0) throw arithmetic_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "123", "-4/5" and surrounding whitespace.
Rat rat_parse(const std::string& text);

inline int rat_sign(const Rat& q) { return sgn(q); }
inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

// gcd extended to rationals: gcd(a/b, c/d) = gcd(a,c)/lcm(b,d); gcd(0,x)=|x|.
Rat rat_gcd(const Rat& a, const Rat& b);

Rat rat_pow(const Rat& base, unsigned exp);

std::string rat_str(const Rat& q);

}  // namespace vectcoh
