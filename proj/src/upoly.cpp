#include "vectcoh/upoly.hpp"

#include <cctype>
#include <sstream>

namespace vectcoh {

UPoly UPoly::monomial(QuadExt c, int power) {
    if (c.is_zero()) return UPoly();
    std::vector<QuadExt> v(power + 1, QuadExt(0));
    v[power] = std::move(c);
    return UPoly(std::move(v));
}

int UPoly::disc() const {
    int d = 0;
    for (const auto& c : coeffs_) d = unify_disc(d, c.disc());
    return d;
}

UPoly UPoly::operator-() const {
    std::vector<QuadExt> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(-c);
    return UPoly(std::move(v));
}

UPoly operator+(const UPoly& p, const UPoly& q) {
    std::vector<QuadExt> v(std::max(p.coeffs_.size(), q.coeffs_.size()), QuadExt(0));
    for (size_t i = 0; i < p.coeffs_.size(); ++i) v[i] += p.coeffs_[i];
    for (size_t i = 0; i < q.coeffs_.size(); ++i) v[i] += q.coeffs_[i];
    return UPoly(std::move(v));
}

UPoly operator-(const UPoly& p, const UPoly& q) { return p + (-q); }

UPoly operator*(const UPoly& p, const UPoly& q) {
    if (p.is_zero() || q.is_zero()) return UPoly();
    std::vector<QuadExt> v(p.coeffs_.size() + q.coeffs_.size() - 1, QuadExt(0));
    for (size_t i = 0; i < p.coeffs_.size(); ++i)
        for (size_t j = 0; j < q.coeffs_.size(); ++j) v[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return UPoly(std::move(v));
}

UPoly UPoly::scaled(const QuadExt& c) const {
    if (c.is_zero()) return UPoly();
    std::vector<QuadExt> v;
    v.reserve(coeffs_.size());
    for (const auto& x : coeffs_) v.push_back(x * c);
    return UPoly(std::move(v));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inv());
}

UPoly UPoly::derivative() const {
    if (coeffs_.size() <= 1) return UPoly();
    std::vector<QuadExt> v;
    v.reserve(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) v.push_back(coeffs_[i] * QuadExt((long)i));
    return UPoly(std::move(v));
}

QuadExt UPoly::eval(const QuadExt& x) const {
    QuadExt r(0);
    for (size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
    return r;
}

UPoly UPoly::shift_arg(const QuadExt& c) const {
    UPoly r, xc = variable() + UPoly(c);
    UPoly pw(QuadExt(1));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        r += pw.scaled(coeffs_[i]);
        pw *= xc;
    }
    return r;
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& quo, UPoly& rem) {
    if (b.is_zero()) throw arithmetic_error("polynomial division by zero");
    quo = UPoly();
    rem = a;
    QuadExt lead_inv = b.leading().inv();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int k = rem.degree() - b.degree();
        QuadExt c = rem.leading() * lead_inv;
        UPoly t = monomial(c, k);
        quo += t;
        rem -= t * b;
    }
}

UPoly operator/(const UPoly& a, const UPoly& b) {
    UPoly q, r;
    UPoly::divmod(a, b, q, r);
    return q;
}

UPoly operator%(const UPoly& a, const UPoly& b) {
    UPoly q, r;
    UPoly::divmod(a, b, q, r);
    return r;
}

bool UPoly::divides(const UPoly& a) const {
    if (is_zero()) return a.is_zero();
    return (a % *this).is_zero();
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Rat UPoly::rational_content() const {
    Rat g(0);
    for (const auto& c : coeffs_) {
        g = rat_gcd(g, c.base());
        g = rat_gcd(g, c.surd());
    }
    return g;
}

std::strong_ordering UPoly::operator<=>(const UPoly& q) const {
    if (coeffs_.size() != q.coeffs_.size())
        return coeffs_.size() <=> q.coeffs_.size();
    for (size_t i = coeffs_.size(); i-- > 0;) {
        auto c = coeffs_[i] <=> q.coeffs_[i];
        if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const QuadExt& c = coeffs_[i];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool needs_paren = cs.find_first_of("+-", 1) != std::string::npos;
        if (!first) {
            if (!needs_paren && cs[0] == '-') {
                os << "-";
                cs = cs.substr(1);
            } else {
                os << "+";
            }
        }
        first = false;
        if (i > 0 && cs == "1") {
            os << var;
            if (i > 1) os << "^" << i;
            continue;
        }
        if (needs_paren) {
            os << "(" << cs << ")";
        } else {
            os << cs;
        }
        if (i > 0) {
            os << "*" << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UPoly UPoly::parse(const std::string& text, const std::string& var) {
    // split on top-level '+'/'-', then locate the variable in each term;
    // everything before it (minus a joining '*') is a QuadExt coefficient.
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw parse_error("empty polynomial literal");
    UPoly result;
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+') {
            ++i;
        } else if (s[i] == '-') {
            sign = -1;
            ++i;
        } else if (i != 0) {
            throw parse_error("expected '+' or '-' in \"" + text + "\"");
        }
        size_t start = i;
        int depth = 0;
        while (i < s.size() && (depth > 0 || (s[i] != '+' && s[i] != '-'))) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') --depth;
            ++i;
        }
        std::string term = s.substr(start, i - start);
        if (term.empty()) throw parse_error("empty term in \"" + text + "\"");
        // the variable occurs at depth 0; coefficient text never contains it
        size_t var_pos = std::string::npos;
        depth = 0;
        for (size_t j = 0; j < term.size(); ++j) {
            if (term[j] == '(') ++depth;
            if (term[j] == ')') --depth;
            if (depth == 0 && term.compare(j, var.size(), var) == 0) {
                var_pos = j;
                break;
            }
        }
        QuadExt coef(1);
        int power = 0;
        if (var_pos == std::string::npos) {
            std::string cs = term;
            if (cs.size() >= 2 && cs.front() == '(' && cs.back() == ')')
                cs = cs.substr(1, cs.size() - 2);
            coef = QuadExt::parse(cs);
        } else {
            if (var_pos > 0) {
                std::string cs = term.substr(0, var_pos);
                if (!cs.empty() && cs.back() == '*') cs.pop_back();
                if (cs.size() >= 2 && cs.front() == '(' && cs.back() == ')')
                    cs = cs.substr(1, cs.size() - 2);
                if (!cs.empty()) coef = QuadExt::parse(cs);
            }
            size_t j = var_pos + var.size();
            power = 1;
            if (j < term.size()) {
                if (term[j] != '^') throw parse_error("bad term \"" + term + "\"");
                power = std::stoi(term.substr(j + 1));
            }
        }
        if (sign < 0) coef = -coef;
        result += monomial(coef, power);
    }
    return result;
}

}  // namespace vectcoh
