#include "vectcoh/cochain.hpp"

#include <sstream>

namespace vectcoh {

namespace {
constexpr int kX = 0;
constexpr int kY = 1;
constexpr int kZ = 2;
}  // namespace

std::string weight_str(const Scalar& w) {
    if (w.is_constant()) {
        QuadExt c = w.constant();
        if (c.is_rational()) return rat_str(c.base());
        if (c.disc() == 19) {
            for (int i = 1; i <= 2; ++i) {
                QuadExt off = c - ConstantsTable::a(i);
                if (off.is_zero()) return i == 1 ? "a1" : "a2";
                if (off.is_rational()) {
                    std::string base = i == 1 ? "a1" : "a2";
                    Rat r = off.base();
                    return base + (rat_sign(r) > 0 ? "+" : "-") + rat_str(abs(r));
                }
            }
        }
        return c.str();
    }
    if (w.den().is_constant() && w.num().degree() == 1 && w.num().coeff(1) == QuadExt(1) &&
        w.den().coeff(0) == QuadExt(1)) {
        QuadExt c = w.num().coeff(0);
        if (c.is_zero()) return "l";
        if (c.is_rational()) {
            Rat r = c.base();
            return std::string("l") + (rat_sign(r) > 0 ? "+" : "-") + rat_str(abs(r));
        }
    }
    return w.str();
}

Scalar weight_parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw parse_error("empty weight");
    auto with_offset = [&](Scalar head, size_t pos) -> Scalar {
        if (pos >= s.size()) return head;
        if (s[pos] != '+' && s[pos] != '-') throw parse_error("bad weight: " + text);
        Rat off = rat_parse(s.substr(pos + 1));
        return s[pos] == '+' ? head + Scalar(off) : head - Scalar(off);
    };
    if (s[0] == 'l') return with_offset(Scalar::lambda(), 1);
    if (s.rfind("a1", 0) == 0) return with_offset(Scalar(ConstantsTable::a(1)), 2);
    if (s.rfind("a2", 0) == 0) return with_offset(Scalar(ConstantsTable::a(2)), 2);
    return Scalar(QuadExt::parse(s));
}

Cochain1::Cochain1(Scalar w, int k, std::vector<Scalar> a)
    : weight(std::move(w)), shift(k), alpha(std::move(a)) {
    if (static_cast<int>(alpha.size()) != k + 2)
        throw structure_error("1-cochain at shift " + std::to_string(k) + " needs " +
                              std::to_string(k + 2) + " coefficients");
}

bool Cochain1::is_zero() const {
    for (const auto& a : alpha)
        if (!a.is_zero()) return false;
    return true;
}

Cochain1 Cochain1::operator-() const {
    Cochain1 r(weight, shift);
    for (size_t j = 0; j < alpha.size(); ++j) r.alpha[j] = -alpha[j];
    return r;
}

Cochain1 operator+(const Cochain1& a, const Cochain1& b) {
    if (a.shift != b.shift || a.weight != b.weight)
        throw structure_error("adding 1-cochains from different blocks");
    Cochain1 r(a.weight, a.shift);
    for (size_t j = 0; j < r.alpha.size(); ++j) r.alpha[j] = a.alpha[j] + b.alpha[j];
    return r;
}

Cochain1 operator-(const Cochain1& a, const Cochain1& b) { return a + (-b); }

Cochain1 Cochain1::scaled(const Scalar& c) const {
    Cochain1 r(weight, shift);
    for (size_t j = 0; j < alpha.size(); ++j) r.alpha[j] = alpha[j] * c;
    return r;
}

JetPoly Cochain1::to_jet(int slot) const { return apply(slot, JetPoly::density()); }

JetPoly Cochain1::apply(int slot, const JetPoly& arg) const {
    JetPoly templ(1u << slot);
    int m = shift + 1;
    for (int j = 0; j <= m; ++j) {
        JetMonomial mono;
        mono.v[slot] = m - j;
        mono.f = j;
        templ.add_term(mono, alpha[j]);
    }
    return apply_operator(templ, arg);
}

Cochain1 Cochain1::specialize(const QuadExt& l0) const {
    Cochain1 r(Scalar(weight.eval(l0)), shift);
    for (size_t j = 0; j < alpha.size(); ++j) r.alpha[j] = Scalar(alpha[j].eval(l0));
    return r;
}

Cochain1 Cochain1::galois_conj() const {
    Cochain1 r(weight.galois_conj(), shift);
    for (size_t j = 0; j < alpha.size(); ++j) r.alpha[j] = alpha[j].galois_conj();
    return r;
}

std::string Cochain1::str() const { return to_jet(kX).str(); }

Cochain2::Cochain2(Scalar w, int k, JetPoly b) : weight(std::move(w)), shift(k), body(std::move(b)) {
    if (!body.is_zero() && body.slot_mask() != 0b011u)
        throw structure_error("2-cochain body must live in slots X, Y");
}

Cochain2 operator+(const Cochain2& a, const Cochain2& b) {
    if (a.shift != b.shift || a.weight != b.weight)
        throw structure_error("adding 2-cochains from different blocks");
    return Cochain2(a.weight, a.shift, a.body + b.body);
}

Cochain2 operator-(const Cochain2& a, const Cochain2& b) { return a + (-b); }

Cochain2 Cochain2::specialize(const QuadExt& l0) const {
    return Cochain2(Scalar(weight.eval(l0)), shift, body.eval_lambda(l0));
}

bool Cochain3::totally_antisymmetric() const {
    if (body.is_zero()) return true;
    return body.swap_slots(kX, kY) == -body && body.swap_slots(kY, kZ) == -body;
}

JetPoly lie_derivative_on_density(int slot, const Scalar& weight, const JetPoly& f) {
    return lie_derivative(slot, weight, f);
}

Cochain2 coboundary1(const Cochain1& b) {
    // [L_X, b(Y)] - (X<->Y) - b([X,Y])
    JetPoly bY = b.to_jet(kY);
    JetPoly act = lie_derivative(kX, b.target(), bY) - b.apply(kY, lie_derivative(kX, b.weight, JetPoly::density()));
    JetPoly body = act.antisymmetrize(kX, kY);
    JetPoly templ = b.to_jet(kX);
    body -= templ.substitute_bracket(kX, kX, kY);
    return Cochain2(b.weight, b.shift, body);
}

Cochain3 coboundary2(const Cochain2& om) {
    if (!om.body.is_zero() && !om.body.antisymmetric_in(kX, kY))
        throw structure_error("coboundary2 requires an antisymmetric 2-cochain");
    Scalar target = om.weight + Scalar(om.shift);
    JetPoly total(0b111u);
    // cyclic permutations (P,Q,R) of (X,Y,Z); slots are relabeled so that
    // om's (X,Y) become (Q,R).
    const std::array<std::array<int, 3>, 3> cyc = {{{kX, kY, kZ}, {kY, kZ, kX}, {kZ, kX, kY}}};
    for (const auto& pqr : cyc) {
        int P = pqr[0], Q = pqr[1], R = pqr[2];
        std::array<int, 3> perm{};
        perm[kX] = Q;
        perm[kY] = R;
        perm[kZ] = P;  // unused slot, any free target
        JetPoly om_qr = om.body.relabel(perm);
        // [L_P, om(Q,R)]
        JetPoly act = lie_derivative(P, target, om_qr) -
                      apply_operator(om_qr, lie_derivative(P, om.weight, JetPoly::density()));
        total += act;
        // - om([P,Q], R): stage om's first argument on slot P, expand it to
        // the bracket [P, Q].
        std::array<int, 3> perm2{};
        perm2[kX] = P;  // staging slot, consumed by the substitution
        perm2[kY] = R;
        perm2[kZ] = Q;
        JetPoly om_tmp = om.body.relabel(perm2);
        total -= om_tmp.substitute_bracket(P, P, Q);
    }
    Cochain3 r;
    r.weight = om.weight;
    r.shift = om.shift;
    r.body = total;
    return r;
}

Cochain1 coboundary0(const Scalar& weight, int order, const Scalar& a) {
    // d(a * d^k)(X) = L^{w+k}_X (f^(k)) - a d^k(L^w_X f), written in the
    // canonical basis: -sum_{m>=2} [C(k,m) + w C(k,m-1)] X^(m) f^(k+1-m).
    Cochain1 r(weight, order);
    auto binom = [](int n, int k) {
        Int b;
        mpz_bin_uiui(b.get_mpz_t(), n, k);
        return Scalar(Rat(b));
    };
    for (int m = 2; m <= order + 1; ++m) {
        int j = order + 1 - m;
        Scalar coef = (m <= order ? binom(order, m) : Scalar(0)) + weight * binom(order, m - 1);
        r.alpha[j] = -(a * coef);
    }
    return r;
}

bool cup_chains(const Cochain1& c1, const Cochain1& c2) {
    return c2.target() == c1.weight || c1.target() == c2.weight;
}

Cochain2 cup(const Cochain1& c1, const Cochain1& c2) {
    bool chain_a = c2.target() == c1.weight;  // c2 first, then c1
    bool chain_b = c1.target() == c2.weight;  // c1 first, then c2
    if (!chain_a && !chain_b)
        throw structure_error("cup product of non-chaining cochains: " +
                              weight_str(c1.weight) + "+" + std::to_string(c1.shift) + " vs " +
                              weight_str(c2.weight) + "+" + std::to_string(c2.shift));
    Scalar source = chain_a ? c2.weight : c1.weight;
    int total_shift = c1.shift + c2.shift;
    JetPoly body(0b011u);
    if (chain_a) {
        // C1(x) C2(y) f - C1(y) C2(x) f
        JetPoly g = c2.apply(kY, JetPoly::density());
        body += c1.apply(kX, g).antisymmetrize(kX, kY);
    }
    if (chain_b) {
        // C2(x) C1(y) f - C2(y) C1(x) f
        JetPoly g = c1.apply(kY, JetPoly::density());
        body += c2.apply(kX, g).antisymmetrize(kX, kY);
    }
    return Cochain2(source, total_shift, body);
}

}  // namespace vectcoh
