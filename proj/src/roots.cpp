#include "vectcoh/roots.hpp"

#include <algorithm>
#include <map>

namespace vectcoh {

namespace {

// Trial division with a Pollard-rho fallback; desk-scale inputs only.
void factor_into(Int n, std::map<Int, int>& out);

Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return Int(2);
    Int x = 2, y = 2, d = 1, c = 1;
    while (true) {
        x = 2;
        y = 2;
        d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = gcd(Int(x > y ? x - y : y - x), n);
        }
        if (d != n) return d;
        c += 1;
    }
}

void factor_into(Int n, std::map<Int, int>& out) {
    if (n < 0) n = -n;
    if (n <= 1) return;
    for (Int p = 2; p * p <= n && p < 1000000; p == 2 ? p = 3 : p += 2) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

std::vector<Int> divisors(const Int& n) {
    std::map<Int, int> fac;
    factor_into(n, fac);
    std::vector<Int> divs{1};
    for (const auto& [p, e] : fac) {
        size_t sz = divs.size();
        Int pw = 1;
        for (int i = 1; i <= e; ++i) {
            pw *= p;
            for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pw);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

bool all_rational(const UPoly& p) {
    for (const auto& c : p.coeffs())
        if (!c.is_rational()) return false;
    return true;
}

// Primitive integer coefficients of a rational-coefficient polynomial.
std::vector<Int> integerize(const UPoly& p) {
    Int den = 1;
    for (const auto& c : p.coeffs()) den = lcm(den, Int(c.base().get_den()));
    std::vector<Int> v;
    v.reserve(p.coeffs().size());
    Int g = 0;
    for (const auto& c : p.coeffs()) {
        Int x = Int(c.base().get_num()) * (den / Int(c.base().get_den()));
        g = gcd(g, x);
        v.push_back(x);
    }
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

std::vector<Rat> rational_roots(const UPoly& p) {
    std::vector<Rat> roots;
    std::vector<Int> c = integerize(p);
    // strip x^k
    size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    if (low > 0) roots.push_back(Rat(0));
    if (low + 1 >= c.size()) return roots;
    Int a0 = c[low], an = c.back();
    for (const Int& pnum : divisors(a0)) {
        for (const Int& pden : divisors(an)) {
            for (int s : {1, -1}) {
                Rat cand = rat_of(s * pnum, pden);
                if (p.eval(QuadExt(cand)).is_zero()) roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// sqrt of a quadratic-extension element within its own field, if it exists.
bool quadext_sqrt(const QuadExt& x, QuadExt& out) {
    if (x.is_zero()) {
        out = QuadExt(0);
        return true;
    }
    if (x.sign() < 0) return false;
    int d = x.disc();
    if (d == 0) {
        Rat r;
        if (rat_is_square(x.base(), r)) {
            out = QuadExt(r);
            return true;
        }
        return false;  // sqrt may live in Q(sqrt(d)) but the caller decides d
    }
    // (u + v sqrt(d))^2 = a + b sqrt(d):  u^2 + v^2 d = a, 2uv = b
    Rat a = x.base(), b = x.surd();
    Rat discr = a * a - b * b * d;  // = (u^2 - v^2 d)^2
    Rat e;
    if (!rat_is_square(discr, e)) return false;
    for (const Rat& s : {e, Rat(-e)}) {
        Rat u2 = (a + s) / 2;
        Rat u;
        if (rat_sign(u2) >= 0 && rat_is_square(u2, u) && u != 0) {
            Rat v = b / (u * 2);
            QuadExt cand(u, v, d);
            if (cand * cand == x) {
                out = cand.sign() >= 0 ? cand : -cand;
                return true;
            }
        }
    }
    return false;
}

// Quadratic x^2 + px + q with rational p, q: roots rational or in Q(sqrt(19)),
// Q(sqrt(39)); otherwise none.
bool quadratic_roots_rat(const Rat& p, const Rat& q, std::vector<QuadExt>& out) {
    Rat disc = p * p - 4 * q;
    if (disc == 0) {
        out.push_back(QuadExt(-p / 2));
        return true;
    }
    if (rat_sign(disc) < 0) return false;
    Int n2 = Int(disc.get_num()) * Int(disc.get_den());
    Int sf = squarefree_part(n2);
    if (sf == 1) {
        Rat e;
        rat_is_square(disc, e);
        out.push_back(QuadExt((-p + e) / 2));
        out.push_back(QuadExt((-p - e) / 2));
        return true;
    }
    if (sf != 19 && sf != 39) return false;
    // disc = e^2 * sf  with rational e > 0
    Rat e2 = disc / Rat(sf);
    Rat e;
    if (!rat_is_square(e2, e)) return false;
    out.push_back(QuadExt(-p / 2, e / 2, static_cast<int>(sf.get_si())));
    out.push_back(QuadExt(-p / 2, -e / 2, static_cast<int>(sf.get_si())));
    return true;
}

// Quadratic over Q(sqrt(d)) with genuinely irrational data.
bool quadratic_roots_quad(const QuadExt& p, const QuadExt& q, std::vector<QuadExt>& out) {
    QuadExt disc = p * p - QuadExt(4) * q;
    QuadExt s;
    if (!quadext_sqrt(disc, s)) {
        if (disc.is_rational()) {
            // fall back to the rational-disc route inside the same field
            std::vector<QuadExt> tmp;
            Rat e;
            if (rat_sign(disc.base()) >= 0 && rat_is_square(disc.base(), e)) {
                s = QuadExt(e);
            } else {
                return false;
            }
        } else {
            return false;
        }
    }
    QuadExt half = QuadExt(rat_of(1, 2));
    out.push_back((-p + s) * half);
    out.push_back((-p - s) * half);
    return true;
}

}  // namespace

Int squarefree_part(const Int& n) {
    std::map<Int, int> fac;
    factor_into(n, fac);
    Int r = n < 0 ? -1 : 1;
    for (const auto& [p, e] : fac)
        if (e % 2) r *= p;
    return r;
}

bool rat_is_square(const Rat& q, Rat& root) {
    if (rat_sign(q) < 0) return false;
    Int n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    root = rat_of(rn, rd);
    return true;
}

RootSplit roots_in_quadext(const UPoly& input) {
    if (input.is_zero()) throw structure_error("roots of the zero polynomial");
    if (input.degree() > 4)
        throw unsupported_degree_error("root extraction limited to degree <= 4, got degree " +
                                       std::to_string(input.degree()));
    RootSplit out;
    // squarefree part: multiplicities are irrelevant to the callers
    UPoly p = input.monic();
    if (p.degree() >= 1) {
        UPoly g = UPoly::gcd(p, p.derivative());
        if (g.degree() > 0) p = (p / g).monic();
    }
    out.residual = UPoly(QuadExt(1));

    auto strip_root = [&](const QuadExt& r) {
        UPoly lin(std::vector<QuadExt>{-r, QuadExt(1)});
        p = (p / lin).monic();
        out.roots.push_back(r);
    };

    if (all_rational(p)) {
        for (const Rat& r : rational_roots(p)) strip_root(QuadExt(r));
        if (p.degree() == 2) {
            std::vector<QuadExt> qr;
            if (quadratic_roots_rat(p.coeff(1).base(), p.coeff(0).base(), qr)) {
                for (const auto& r : qr) out.roots.push_back(r);
                p = UPoly(QuadExt(1));
            }
        } else if (p.degree() == 4) {
            // split into two rational quadratics via the resolvent cubic
            Rat b = p.coeff(3).base(), c = p.coeff(2).base(), dd = p.coeff(1).base(),
                e = p.coeff(0).base();
            UPoly resolvent(std::vector<QuadExt>{
                QuadExt(-(b * b * e - 4 * c * e + dd * dd)), QuadExt(b * dd - 4 * e), QuadExt(-c),
                QuadExt(1)});
            bool split = false;
            for (const Rat& z : rational_roots(resolvent)) {
                // p = (x^2 + sx + u)(x^2 + tx + v) with u + v = z, s + t = b
                Rat st = c - z;           // s*t
                Rat disc = b * b - 4 * st;
                Rat w;
                if (!rat_is_square(disc, w)) continue;
                Rat s = (b + w) / 2, t = (b - w) / 2;
                // u,v from u+v = z, s v + t u = dd (try both assignments)
                for (int flip = 0; flip < 2 && !split; ++flip) {
                    Rat ss = flip ? t : s, tt = flip ? s : t;
                    Rat u, v;
                    if (ss != tt) {
                        v = (dd - tt * z) / (ss - tt);
                        u = z - v;
                    } else {
                        if (ss * z != dd) continue;
                        // u v = e with u + v = z
                        std::vector<QuadExt> uv;
                        if (!quadratic_roots_rat(-z, e, uv) || uv.front().disc() != 0) continue;
                        u = uv[0].base();
                        v = uv.size() > 1 ? uv[1].base() : uv[0].base();
                    }
                    if (u * v != e) continue;
                    std::vector<QuadExt> qr;
                    quadratic_roots_rat(ss, u, qr);
                    quadratic_roots_rat(tt, v, qr);
                    for (const auto& r : qr) out.roots.push_back(r);
                    UPoly rem(QuadExt(1));
                    if (qr.size() < 4) {
                        // keep the unsolved quadratic(s) as residual
                        std::vector<QuadExt> probe;
                        if (!quadratic_roots_rat(ss, u, probe) || probe.empty())
                            rem *= UPoly(std::vector<QuadExt>{QuadExt(u), QuadExt(ss), QuadExt(1)});
                        probe.clear();
                        if (!quadratic_roots_rat(tt, v, probe) || probe.empty())
                            rem *= UPoly(std::vector<QuadExt>{QuadExt(v), QuadExt(tt), QuadExt(1)});
                    }
                    p = rem;
                    split = true;
                }
                if (split) break;
            }
        }
    } else {
        for (int guard = 0; p.degree() == 1 || p.degree() == 2; ++guard) {
            if (guard > 8) break;
            if (p.degree() == 1) {
                strip_root(-p.coeff(0));
                continue;
            }
            std::vector<QuadExt> qr;
            if (!quadratic_roots_quad(p.coeff(1), p.coeff(0), qr)) break;
            for (const auto& r : qr) out.roots.push_back(r);
            p = UPoly(QuadExt(1));
        }
    }
    if (p.degree() == 1) strip_root(-p.coeff(0));
    out.residual = p;
    std::sort(out.roots.begin(), out.roots.end());
    out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
    return out;
}

}  // namespace vectcoh
