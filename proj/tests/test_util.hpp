#pragma once

#include <random>

#include "vectcoh/scalar.hpp"

namespace vectcoh::testing {

// Deterministic generators for property tests.
class Gen {
public:
    explicit Gen(uint64_t seed = 0x5eedc0de) : rng_(seed) {}

    long small_int(long lo = -9, long hi = 9) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(rng_);
    }

    Rat rat() {
        long den = small_int(1, 7);
        return rat_of(small_int(), den);
    }

    QuadExt quad(int disc = 0) {
        if (disc == 0) return QuadExt(rat());
        return QuadExt(rat(), rat(), disc);
    }

    QuadExt nonzero_quad(int disc = 0) {
        for (;;) {
            QuadExt q = quad(disc);
            if (!q.is_zero()) return q;
        }
    }

    UPoly upoly(int max_deg = 3, int disc = 0) {
        std::vector<QuadExt> c;
        int deg = static_cast<int>(small_int(0, max_deg));
        for (int i = 0; i <= deg; ++i) c.push_back(quad(disc));
        return UPoly(std::move(c));
    }

    UPoly nonzero_upoly(int max_deg = 3, int disc = 0) {
        for (;;) {
            UPoly p = upoly(max_deg, disc);
            if (!p.is_zero()) return p;
        }
    }

    Scalar scalar(int disc = 0) { return Scalar(upoly(2, disc), nonzero_upoly(2, disc)); }

    Scalar nonzero_scalar(int disc = 0) {
        for (;;) {
            Scalar s = scalar(disc);
            if (!s.is_zero()) return s;
        }
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace vectcoh::testing
