#include "vectcoh/tpoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "vectcoh/cochain.hpp"
#include "vectcoh/solver.hpp"

namespace vectcoh {

std::string ParamKey::str() const {
    std::string head = tilde ? "ttilde" : "t";
    return head + "[" + weight_str(lo) + "," + weight_str(hi()) + "]";
}

ParamKey ParamKey::parse(const std::string& text) {
    ParamKey k;
    std::string s = text;
    if (s.rfind("ttilde[", 0) == 0) {
        k.tilde = true;
        s = s.substr(7);
    } else if (s.rfind("t[", 0) == 0) {
        s = s.substr(2);
    } else {
        throw parse_error("bad parameter name: " + text);
    }
    if (s.empty() || s.back() != ']') throw parse_error("bad parameter name: " + text);
    s.pop_back();
    size_t comma = s.find(',');
    if (comma == std::string::npos) throw parse_error("bad parameter name: " + text);
    k.lo = weight_parse(s.substr(0, comma));
    Scalar hi = weight_parse(s.substr(comma + 1));
    Scalar diff = hi - k.lo;
    if (!diff.is_constant() || !diff.constant().is_rational() ||
        !rat_is_integer(diff.constant().base()) || rat_sign(diff.constant().base()) < 0)
        throw parse_error("non-integer shift in parameter: " + text);
    k.shift = static_cast<int>(diff.constant().base().get_num().get_si());
    return k;
}

std::string tmonomial_str(const TMonomial& m) {
    if (m.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, e] : m) {
        if (!first) os << "*";
        first = false;
        os << k.str();
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

int tmonomial_degree(const TMonomial& m) {
    int d = 0;
    for (const auto& [k, e] : m) d += e;
    return d;
}

TMonomial tmonomial_mul(const TMonomial& a, const TMonomial& b) {
    TMonomial r = a;
    for (const auto& [k, e] : b) r[k] += e;
    return r;
}

bool TPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

int TPoly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, tmonomial_degree(m));
    return d;
}

void TPoly::add(const TMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TPoly TPoly::operator-() const {
    TPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

TPoly operator+(const TPoly& a, const TPoly& b) {
    TPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add(m, c);
    return r;
}

TPoly operator-(const TPoly& a, const TPoly& b) { return a + (-b); }

TPoly operator*(const TPoly& a, const TPoly& b) {
    TPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add(tmonomial_mul(ma, mb), ca * cb);
    return r;
}

TPoly TPoly::scaled(const Scalar& c) const {
    TPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

namespace {
// lexicographic order with earlier parameters weighing more: compare the
// exponent of each parameter in the ascending key order; first difference
// decides, larger exponent = larger monomial.
bool tmono_less(const TMonomial& a, const TMonomial& b) {
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first) return false;  // a has the earlier var -> a bigger
        if (ib->first < ia->first) return true;
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    if (ia != a.end()) return false;
    if (ib != b.end()) return true;
    return false;
}
}  // namespace

const TMonomial* TPoly::leading_monomial() const {
    const TMonomial* best = nullptr;
    for (const auto& [m, c] : terms_)
        if (!best || tmono_less(*best, m)) best = &m;
    return best;
}

Scalar TPoly::leading_coeff() const {
    const TMonomial* m = leading_monomial();
    return m ? terms_.at(*m) : Scalar(0);
}

TPoly TPoly::condition_normal_form() const {
    if (terms_.empty()) return *this;
    // clear denominators
    UPoly den_lcm(QuadExt(1));
    for (const auto& [m, c] : terms_) {
        UPoly g = UPoly::gcd(den_lcm, c.den());
        den_lcm = den_lcm * (c.den() / g);
    }
    TPoly cleared = scaled(Scalar(den_lcm));
    // polynomial content
    UPoly content;
    for (const auto& [m, c] : cleared.terms_)
        content = content.is_zero() ? c.num() : UPoly::gcd(content, c.num());
    if (content.degree() > 0) cleared = cleared.scaled(Scalar(UPoly(QuadExt(1)), content));
    // rational content
    Rat rc(0);
    for (const auto& [m, c] : cleared.terms_) rc = rat_gcd(rc, c.num().rational_content());
    if (rc != 0 && rc != 1) cleared = cleared.scaled(Scalar(rat_of(1) / rc));
    // positive leading coefficient
    Scalar lead = cleared.leading_coeff();
    int sign = lead.num().leading().sign();
    if (sign < 0) cleared = -cleared;
    return cleared;
}

Scalar TPoly::substitute(const std::map<ParamKey, QuadExt>& values) const {
    Scalar acc(0);
    for (const auto& [m, c] : terms_) {
        Scalar term = c;
        for (const auto& [k, e] : m) {
            auto it = values.find(k);
            QuadExt v = it == values.end() ? QuadExt(0) : it->second;
            for (int i = 0; i < e; ++i) term *= Scalar(v);
            if (term.is_zero()) break;
        }
        acc += term;
    }
    return acc;
}

TPoly TPoly::relabel_weights(const Scalar& offset) const {
    TPoly r;
    for (const auto& [m, c] : terms_) {
        TMonomial m2;
        for (const auto& [k, e] : m) {
            ParamKey k2 = k;
            k2.lo = k.lo - offset;
            m2[k2] = e;
        }
        r.add(m2, c);
    }
    return r;
}

std::string TPoly::str() const {
    if (terms_.empty()) return "0";
    // render in descending monomial order (leading first)
    std::vector<const TMonomial*> order;
    for (const auto& [m, c] : terms_) order.push_back(&m);
    std::sort(order.begin(), order.end(),
              [](const TMonomial* x, const TMonomial* y) { return tmono_less(*y, *x); });
    std::ostringstream os;
    bool first = true;
    for (const TMonomial* m : order) {
        const Scalar& c = terms_.at(*m);
        std::string cs = c.is_constant()
                             ? c.constant().str()
                             : (c.den() == UPoly(QuadExt(1)) ? c.num().str() : c.str());
        bool neg = cs.size() > 1 && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
        bool composite = cs.find_first_of("+-", 1) != std::string::npos || cs.find('/') != std::string::npos;
        if (first) {
            if (neg) {
                os << "-";
                cs = cs.substr(1);
            }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        first = false;
        if (m->empty()) {
            os << (composite ? "(" + cs + ")" : cs);
            continue;
        }
        if (cs != "1") os << (composite ? "(" + cs + ")" : cs) << "*";
        os << tmonomial_str(*m);
    }
    return os.str();
}

bool ideal_member(const TPoly& p, const std::vector<TPoly>& gens) {
    if (p.is_zero()) return true;
    if (gens.empty()) return false;
    // fast path: scalar multiple of one generator
    for (const TPoly& g : gens) {
        if (g.is_zero() || g.terms().size() != p.terms().size()) continue;
        auto ig = g.terms().begin();
        auto ip = p.terms().begin();
        if (ig->first != ip->first) continue;
        Scalar ratio = ip->second / ig->second;
        bool match = true;
        for (; ig != g.terms().end(); ++ig, ++ip) {
            if (ip == p.terms().end() || ig->first != ip->first ||
                ip->second != ig->second * ratio) {
                match = false;
                break;
            }
        }
        if (match) return true;
    }
    // dense linear reduction over generator multiples of matching degree
    int dp = p.degree();
    std::set<ParamKey> vars;
    for (const auto& [m, c] : p.terms())
        for (const auto& [k, e] : m) vars.insert(k);
    for (const TPoly& g : gens)
        for (const auto& [m, c] : g.terms())
            for (const auto& [k, e] : m) vars.insert(k);
    std::vector<ParamKey> vlist(vars.begin(), vars.end());
    // all monomials of a given degree over vlist
    std::vector<TMonomial> mons;
    std::vector<std::vector<TMonomial>> by_degree(dp + 1);
    by_degree[0].push_back(TMonomial{});
    for (int d = 1; d <= dp; ++d) {
        std::set<std::string> seen;
        for (const auto& base : by_degree[d - 1]) {
            for (const auto& v : vlist) {
                TMonomial m = base;
                ++m[v];
                std::string key = tmonomial_str(m);
                if (seen.insert(key).second) by_degree[d].push_back(m);
            }
        }
    }
    // columns: g * monomial with deg(g * m) == dp (homogeneous setting)
    std::vector<TPoly> cols;
    for (const TPoly& g : gens) {
        int dg = g.degree();
        if (dg < 0 || dg > dp) continue;
        for (const auto& m : by_degree[dp - dg]) {
            TPoly mult;
            mult.add(m, Scalar(1));
            cols.push_back(g * mult);
        }
    }
    if (cols.empty()) return false;
    // assemble the membership system
    std::map<std::string, size_t> row_of;
    auto see = [&](const TPoly& q) {
        for (const auto& [m, c] : q.terms()) row_of.emplace(tmonomial_str(m), 0);
    };
    for (const auto& c : cols) see(c);
    see(p);
    size_t nrows = 0;
    for (auto& [k, idx] : row_of) idx = nrows++;
    LinearSystem sys;
    sys.a.assign(nrows, std::vector<Scalar>(cols.size(), Scalar(0)));
    sys.rhs.assign(nrows, Scalar(0));
    for (size_t j = 0; j < cols.size(); ++j) {
        sys.labels.push_back("m" + std::to_string(j));
        for (const auto& [m, c] : cols[j].terms()) sys.a[row_of[tmonomial_str(m)]][j] = c;
    }
    for (const auto& [m, c] : p.terms()) sys.rhs[row_of[tmonomial_str(m)]] = c;
    return solve_exact(sys).solved();
}

}  // namespace vectcoh
