#include "vectcoh/scalar.hpp"

#include <ostream>

namespace vectcoh {

Scalar::Scalar(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw arithmetic_error("scalar with zero denominator");
    if (num_.is_zero()) {
        den_ = UPoly(QuadExt(1));
        return;
    }
    UPoly g = UPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    QuadExt lead = den_.leading();
    if (lead != QuadExt(1)) {
        QuadExt li = lead.inv();
        num_ = num_.scaled(li);
        den_ = den_.scaled(li);
    }
}

QuadExt Scalar::constant() const {
    if (!is_constant()) throw structure_error("scalar is not constant: " + str());
    if (is_zero()) return QuadExt(0);
    return num_.coeff(0) * den_.coeff(0).inv();
}

Scalar Scalar::inv() const {
    if (is_zero()) throw arithmetic_error("division by zero");
    return Scalar(den_, num_);
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    return Scalar(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

Scalar operator-(const Scalar& x, const Scalar& y) {
    return Scalar(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    return Scalar(x.num_ * y.num_, x.den_ * y.den_);
}

std::strong_ordering Scalar::operator<=>(const Scalar& y) const {
    auto c = num_ <=> y.num_;
    if (c != std::strong_ordering::equal) return c;
    return den_ <=> y.den_;
}

UPoly minimal_poly(const QuadExt& x) {
    if (x.is_rational()) {
        // v - x
        return UPoly(std::vector<QuadExt>{QuadExt(-x.base()), QuadExt(1)});
    }
    // v^2 - 2a v + (a^2 - b^2 d)
    Rat a = x.base(), b = x.surd();
    Rat norm = a * a - b * b * x.disc();
    return UPoly(std::vector<QuadExt>{QuadExt(norm), QuadExt(Rat(-2) * a), QuadExt(1)});
}

QuadExt Scalar::eval(const QuadExt& x) const {
    QuadExt d = den_.eval(x);
    if (d.is_zero())
        throw pole_error("pole of " + str() + " at l = " + x.str(), minimal_poly(x).str());
    return num_.eval(x) * d.inv();
}

Scalar Scalar::shift_lambda(const QuadExt& c) const {
    return Scalar(num_.shift_arg(c), den_.shift_arg(c));
}

namespace {
UPoly poly_conj(const UPoly& p) {
    std::vector<QuadExt> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(c.conj());
    return UPoly(std::move(v));
}
}  // namespace

Scalar Scalar::galois_conj() const { return Scalar(poly_conj(num_), poly_conj(den_)); }

std::string Scalar::str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

Scalar Scalar::parse(const std::string& text) {
    // exact inverse of str(): (poly)/(poly); also accepts a bare polynomial
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= text.size() || text[i] != '(') return Scalar(UPoly::parse(text));
    auto read_group = [&]() -> std::string {
        if (text[i] != '(') throw parse_error("expected '(' in \"" + text + "\"");
        int depth = 1;
        size_t start = ++i;
        while (i < text.size() && depth) {
            if (text[i] == '(') ++depth;
            if (text[i] == ')') --depth;
            ++i;
        }
        if (depth) throw parse_error("unbalanced '(' in \"" + text + "\"");
        return text.substr(start, i - start - 1);
    };
    std::string nums = read_group();
    skip_ws();
    if (i >= text.size() || text[i] != '/') {
        // a parenthesized bare polynomial
        skip_ws();
        if (i < text.size()) throw parse_error("trailing input in \"" + text + "\"");
        return Scalar(UPoly::parse(nums));
    }
    ++i;
    skip_ws();
    std::string dens = read_group();
    skip_ws();
    if (i < text.size()) throw parse_error("trailing input in \"" + text + "\"");
    return Scalar(UPoly::parse(nums), UPoly::parse(dens));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace vectcoh
