#include "vectcoh/jet.hpp"

#include <sstream>

namespace vectcoh {

namespace {
Rat binom(int n, int k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rat(b);
}

void append_derivative_marks(std::ostream& os, int order) {
    if (order == 0) return;
    if (order <= 2) {
        for (int i = 0; i < order; ++i) os << "'";
    } else {
        os << "^(" << order << ")";
    }
}
}  // namespace

void JetPoly::add_term(const JetMonomial& m, const Scalar& c) {
    for (int s = 0; s < 3; ++s)
        if (!slot_active(s) && m.v[s] != 0)
            throw structure_error("jet term uses inactive slot");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

JetPoly JetPoly::operator-() const {
    JetPoly r(mask_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

JetPoly operator+(const JetPoly& p, const JetPoly& q) {
    if (!p.is_zero() && !q.is_zero() && p.mask_ != q.mask_)
        throw structure_error("adding jet polynomials with different slot sets");
    JetPoly r(p.is_zero() ? q.mask_ : p.mask_);
    r.terms_ = p.terms_;
    for (const auto& [m, c] : q.terms_) r.add_term(m, c);
    return r;
}

JetPoly operator-(const JetPoly& p, const JetPoly& q) { return p + (-q); }

JetPoly JetPoly::scaled(const Scalar& c) const {
    JetPoly r(mask_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

JetPoly JetPoly::total_derivative() const {
    JetPoly r(mask_);
    for (const auto& [m, c] : terms_) {
        for (int s = 0; s < 3; ++s) {
            if (!slot_active(s)) continue;
            JetMonomial m2 = m;
            ++m2.v[s];
            r.add_term(m2, c);
        }
        JetMonomial mf = m;
        ++mf.f;
        r.add_term(mf, c);
    }
    return r;
}

JetPoly JetPoly::derivative_n(int n) const {
    JetPoly r = *this;
    for (int i = 0; i < n; ++i) r = r.total_derivative();
    return r;
}

JetPoly JetPoly::mul_slot(int slot, int order) const {
    if (slot_active(slot)) throw structure_error("slot already present in jet polynomial");
    JetPoly r(mask_ | (1u << slot));
    for (const auto& [m, c] : terms_) {
        JetMonomial m2 = m;
        m2.v[slot] = order;
        r.terms_.emplace(m2, c);
    }
    return r;
}

JetPoly JetPoly::swap_slots(int s1, int s2) const {
    if (!slot_active(s1) || !slot_active(s2))
        throw structure_error("swap of an absent slot");
    JetPoly r(mask_);
    for (const auto& [m, c] : terms_) {
        JetMonomial m2 = m;
        std::swap(m2.v[s1], m2.v[s2]);
        r.add_term(m2, c);
    }
    return r;
}

JetPoly JetPoly::antisymmetrize(int s1, int s2) const { return *this - swap_slots(s1, s2); }

bool JetPoly::antisymmetric_in(int s1, int s2) const {
    return swap_slots(s1, s2) == -*this;
}

JetPoly JetPoly::substitute_bracket(int src, int slot_a, int slot_b) const {
    if (!slot_active(src)) throw structure_error("bracket substitution on absent slot");
    unsigned rest = mask_ & ~(1u << src);
    if ((rest & (1u << slot_a)) || (rest & (1u << slot_b)) || slot_a == slot_b)
        throw structure_error("bracket substitution targets collide");
    JetPoly r(rest | (1u << slot_a) | (1u << slot_b));
    for (const auto& [m, c] : terms_) {
        int n = m.v[src];
        JetMonomial base = m;
        base.v[src] = 0;
        // (A B' - A' B)^(n) = sum_j C(n,j) [ A^(j) B^(n-j+1) - A^(j+1) B^(n-j) ]
        for (int j = 0; j <= n; ++j) {
            Scalar cj = c * Scalar(binom(n, j));
            JetMonomial m1 = base;
            m1.v[slot_a] = j;
            m1.v[slot_b] = n - j + 1;
            r.add_term(m1, cj);
            JetMonomial m2 = base;
            m2.v[slot_a] = j + 1;
            m2.v[slot_b] = n - j;
            r.add_term(m2, -cj);
        }
    }
    return r;
}

JetPoly JetPoly::relabel(const std::array<int, 3>& perm) const {
    unsigned new_mask = 0;
    for (int s = 0; s < 3; ++s)
        if (slot_active(s)) {
            if (new_mask & (1u << perm[s])) throw structure_error("relabel targets collide");
            new_mask |= 1u << perm[s];
        }
    JetPoly r(new_mask);
    for (const auto& [m, c] : terms_) {
        JetMonomial m2;
        m2.f = m.f;
        for (int s = 0; s < 3; ++s)
            if (slot_active(s)) m2.v[perm[s]] = m.v[s];
        r.add_term(m2, c);
    }
    return r;
}

std::optional<int> JetPoly::homogeneous_order() const {
    std::optional<int> order;
    for (const auto& [m, c] : terms_) {
        int t = m.total(mask_);
        if (!order) {
            order = t;
        } else if (*order != t) {
            return std::nullopt;
        }
    }
    return order;
}

JetPoly JetPoly::eval_lambda(const QuadExt& x) const {
    JetPoly r(mask_);
    for (const auto& [m, c] : terms_) r.add_term(m, Scalar(c.eval(x)));
    return r;
}

JetPoly JetPoly::galois_conj() const {
    JetPoly r(mask_);
    for (const auto& [m, c] : terms_) r.add_term(m, c.galois_conj());
    return r;
}

std::string JetPoly::str() const {
    if (terms_.empty()) return "0";
    static const char* names[3] = {"X", "Y", "Z"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        // compact display for constant coefficients
        if (c.is_constant()) cs = c.constant().str();
        bool neg = cs.size() > 1 && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
        bool composite = cs.find_first_of("+-", 1) != std::string::npos || cs.find('/') != std::string::npos;
        if (first) {
            if (neg) {
                os << "-";
                cs = cs.substr(1);
            }
        } else {
            if (neg) {
                os << " - ";
                cs = cs.substr(1);
            } else {
                os << " + ";
            }
        }
        first = false;
        if (cs != "1" || (m.total(mask_) == 0 && m.f == 0 && mask_ == 0)) {
            if (composite)
                os << "(" << cs << ")";
            else
                os << cs;
            os << "*";
        }
        for (int s = 0; s < 3; ++s) {
            if (!slot_active(s)) continue;
            os << names[s];
            append_derivative_marks(os, m.v[s]);
        }
        os << "f";
        append_derivative_marks(os, m.f);
    }
    return os.str();
}

JetPoly lie_derivative(int slot, const Scalar& weight, const JetPoly& g) {
    JetPoly xg = g.total_derivative().mul_slot(slot, 0);
    JetPoly wg = g.mul_slot(slot, 1).scaled(weight);
    return xg + wg;
}

JetPoly apply_operator(const JetPoly& templ, const JetPoly& arg) {
    if (templ.slot_mask() & arg.slot_mask())
        throw structure_error("operator template and argument share slots");
    JetPoly result(templ.slot_mask() | arg.slot_mask());
    for (const auto& [m, c] : templ.terms()) {
        JetPoly piece = arg.derivative_n(m.f).scaled(c);
        for (int s = 0; s < 3; ++s)
            if (templ.slot_active(s)) piece = piece.mul_slot(s, m.v[s]);
        result += piece;
    }
    return result;
}

}  // namespace vectcoh
