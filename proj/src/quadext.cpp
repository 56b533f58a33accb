#include "vectcoh/quadext.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace vectcoh {

Rat rat_parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw parse_error("empty rational literal");
    Rat q;
    if (q.set_str(s, 10) != 0) throw parse_error("bad rational literal: " + text);
    if (q.get_den() == 0) throw arithmetic_error("rational with zero denominator");
    q.canonicalize();
    return q;
}

Rat rat_gcd(const Rat& a, const Rat& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    Int n = gcd(Int(a.get_num()), Int(b.get_num()));
    Int d = lcm(Int(a.get_den()), Int(b.get_den()));
    return rat_of(n, d);
}

Rat rat_pow(const Rat& base, unsigned exp) {
    Rat r(1);
    Rat b = base;
    unsigned e = exp;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

int unify_disc(int d1, int d2) {
    if (d1 == 0) return d2;
    if (d2 == 0 || d1 == d2) return d1;
    std::ostringstream os;
    os << "mixing sqrt(" << d1 << ") and sqrt(" << d2 << ") in one expression";
    throw arithmetic_error(os.str());
}

QuadExt::QuadExt(Rat base, Rat surd, int d) : a_(std::move(base)), b_(std::move(surd)), d_(d) {
    if (b_ == 0) {
        d_ = 0;
    } else if (d_ != 19 && d_ != 39) {
        throw arithmetic_error("unsupported discriminant " + std::to_string(d));
    }
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    int d = unify_disc(x.d_, y.d_);
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    int d = unify_disc(x.d_, y.d_);
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_, d);
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    int d = unify_disc(x.d_, y.d_);
    return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
}

QuadExt QuadExt::inv() const {
    if (is_zero()) throw arithmetic_error("division by zero");
    // norm = a^2 - b^2 d is nonzero for nonzero elements (d is not a square)
    Rat norm = a_ * a_ - b_ * b_ * d_;
    return QuadExt(a_ / norm, -b_ / norm, d_);
}

int QuadExt::sign() const {
    if (b_ == 0) return rat_sign(a_);
    if (a_ == 0) return rat_sign(b_);
    int sa = rat_sign(a_), sb = rat_sign(b_);
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with b^2 d
    Rat lhs = a_ * a_, rhs = b_ * b_ * d_;
    if (lhs == rhs) return 0;  // unreachable for squarefree d
    return lhs > rhs ? sa : sb;
}

std::strong_ordering QuadExt::operator<=>(const QuadExt& y) const {
    if (d_ != y.d_) return d_ <=> y.d_;
    if (int c = cmp(a_, y.a_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (int c = cmp(b_, y.b_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string QuadExt::str() const {
    if (b_ == 0) return rat_str(a_);
    std::ostringstream os;
    if (a_ != 0) {
        os << rat_str(a_);
        os << (rat_sign(b_) < 0 ? "-" : "+");
        Rat ab = abs(b_);
        if (ab != 1) os << rat_str(ab) << "*";
    } else {
        if (b_ == -1) {
            os << "-";
        } else if (b_ != 1) {
            os << rat_str(b_) << "*";
        }
    }
    os << "sqrt(" << d_ << ")";
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool eat_str(const char* t) {
        skip_ws();
        size_t j = i, k = 0;
        while (t[k] && j < s.size() && s[j] == t[k]) ++j, ++k;
        if (t[k]) return false;
        i = j;
        return true;
    }
};

Rat parse_unsigned_rat(Cursor& c) {
    c.skip_ws();
    size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) throw parse_error("expected number in \"" + c.s + "\"");
    std::string num = c.s.substr(start, c.i - start);
    if (c.eat('/')) {
        c.skip_ws();
        size_t ds = c.i;
        while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
        if (c.i == ds) throw parse_error("expected denominator in \"" + c.s + "\"");
        num += "/" + c.s.substr(ds, c.i - ds);
    }
    return rat_parse(num);
}

// term := [sign] ( r ['*' sqrt(d)] | sqrt(d) )
void parse_term(Cursor& c, Rat& a, Rat& b, int& d, bool first) {
    int sign = 1;
    c.skip_ws();
    if (c.eat('+')) {
        sign = 1;
    } else if (c.eat('-')) {
        sign = -1;
    } else if (!first) {
        throw parse_error("expected '+' or '-' in \"" + c.s + "\"");
    }
    c.skip_ws();
    if (c.eat_str("sqrt(")) {
        Rat dd = parse_unsigned_rat(c);
        if (!c.eat(')')) throw parse_error("missing ')' in \"" + c.s + "\"");
        if (!rat_is_integer(dd)) throw parse_error("non-integer discriminant in \"" + c.s + "\"");
        d = static_cast<int>(dd.get_num().get_si());
        b += sign;
        return;
    }
    Rat r = parse_unsigned_rat(c);
    c.skip_ws();
    if (c.eat('*')) {
        if (!c.eat_str("sqrt(")) throw parse_error("expected sqrt( in \"" + c.s + "\"");
        Rat dd = parse_unsigned_rat(c);
        if (!c.eat(')')) throw parse_error("missing ')' in \"" + c.s + "\"");
        if (!rat_is_integer(dd)) throw parse_error("non-integer discriminant in \"" + c.s + "\"");
        d = static_cast<int>(dd.get_num().get_si());
        b += sign * r;
        return;
    }
    a += sign * r;
}

}  // namespace

QuadExt QuadExt::parse(const std::string& text) {
    Cursor c{text};
    Rat a(0), b(0);
    int d = 0;
    parse_term(c, a, b, d, true);
    c.skip_ws();
    while (c.i < c.s.size()) {
        int d2 = 0;
        parse_term(c, a, b, d2, false);
        d = unify_disc(d, d2);
        c.skip_ws();
    }
    if (b == 0) d = 0;
    return QuadExt(a, b, d);
}

std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.str(); }

namespace {
QuadExt q19(long an, long ad, long bn, long bd) {
    return QuadExt(rat_of(an, ad), rat_of(bn, bd), 19);
}
}  // namespace

QuadExt ConstantsTable::a(int i) { return q19(-5, 2, i == 1 ? -1 : 1, 2); }
QuadExt ConstantsTable::alpha(int i) { return q19(-22, 4, i == 1 ? -5 : 5, 4); }
QuadExt ConstantsTable::beta(int i) { return q19(31, 2, i == 1 ? 7 : -7, 2); }
QuadExt ConstantsTable::gamma(int i) { return q19(25, 2, i == 1 ? 7 : -7, 2); }
QuadExt ConstantsTable::eta(int i) { return q19(7L * 76437, 1, i == 1 ? 7L * 53739 : -7L * 53739, 1); }
QuadExt ConstantsTable::theta(int i) {
    return q19(64L * 1160123, 1, i == 1 ? 64L * 30689 : -64L * 30689, 1);
}
QuadExt ConstantsTable::mu(int i) { return q19(8947638, 1, i == 1 ? 205273 : -205273, 1); }
QuadExt ConstantsTable::nu(int i) {
    return q19(96L * 474174, 1, i == 1 ? 96L * 108783 : -96L * 108783, 1);
}

}  // namespace vectcoh
