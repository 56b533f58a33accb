#include "vectcoh/catalog.hpp"

#include <sstream>

namespace vectcoh {

namespace {
constexpr int kX = 0;
constexpr int kY = 1;

Scalar S(long n, long d = 1) { return Scalar(rat_of(n, d)); }

// Convenience builder: list of (j, coefficient) pairs over the canonical
// basis X^(k+1-j) f^(j).
Cochain1 c1_of(Scalar w, int k, std::initializer_list<std::pair<int, Scalar>> terms) {
    Cochain1 c(std::move(w), k);
    for (const auto& [j, coef] : terms) c.alpha[j] = coef;
    return c;
}

// Antisymmetrized 2-cochain from the "written half" of a display:
// body = half - (X <-> Y).
Cochain2 c2_antisym(Scalar w, int k, std::initializer_list<std::tuple<int, int, int, Scalar>> half) {
    JetPoly p(0b011u);
    for (const auto& [i, j, e, coef] : half) {
        JetMonomial m;
        m.v[kX] = i;
        m.v[kY] = j;
        m.f = e;
        p.add_term(m, coef);
    }
    return Cochain2(std::move(w), k, p.antisymmetrize(kX, kY));
}

Scalar lam() { return Scalar::lambda(); }
}  // namespace

Cochain1 Catalog::c_diag(const Scalar& w) { return c1_of(w, 0, {{0, S(1)}}); }

Cochain1 Catalog::c01() { return c1_of(S(0), 1, {{0, S(1)}}); }

Cochain1 Catalog::c01_tilde() { return c1_of(S(0), 1, {{0, S(1)}, {1, S(1)}}); }

Cochain1 Catalog::c_k2(const Scalar& w) { return c1_of(w, 2, {{0, S(1)}, {1, S(2)}}); }

Cochain1 Catalog::c_k3(const Scalar& w) { return c1_of(w, 3, {{1, S(1)}, {2, S(1)}}); }

Cochain1 Catalog::c_k4(const Scalar& w) {
    return c1_of(w, 4, {{0, -w}, {1, S(1)}, {2, S(-6)}, {3, S(-4)}});
}

Cochain1 Catalog::c05() {
    return c1_of(S(0), 5, {{1, S(2)}, {2, S(-5)}, {3, S(10)}, {4, S(5)}});
}

Cochain1 Catalog::cm41() {
    return c1_of(S(-4), 5, {{0, S(12)}, {1, S(22)}, {2, S(5)}, {3, S(-10)}, {4, S(-5)}});
}

Cochain1 Catalog::c_ai6(int i) {
    return c1_of(Scalar(ConstantsTable::a(i)), 6,
                 {{0, Scalar(ConstantsTable::alpha(i))},
                  {1, -Scalar(ConstantsTable::beta(i))},
                  {2, -Scalar(ConstantsTable::gamma(i))},
                  {3, S(-5)},
                  {4, S(5)},
                  {5, S(2)}});
}

std::vector<std::pair<std::string, Cochain1>> Catalog::cocycles_at(const Scalar& w, int k) {
    std::vector<std::pair<std::string, Cochain1>> out;
    auto name = [&](const char* fam) {
        return std::string(fam) + "[" + weight_str(w) + "," + weight_str(w + Scalar(k)) + "]";
    };
    switch (k) {
        case 0:
            out.emplace_back(name("C"), c_diag(w));
            break;
        case 1:
            if (w == S(0)) {
                out.emplace_back("C[0,1]", c01());
                out.emplace_back("Ctilde[0,1]", c01_tilde());
            }
            break;
        case 2:
            out.emplace_back(name("C"), c_k2(w));
            break;
        case 3:
            out.emplace_back(name("C"), c_k3(w));
            break;
        case 4:
            out.emplace_back(name("C"), c_k4(w));
            break;
        case 5:
            if (w == S(0)) out.emplace_back("C[0,5]", c05());
            if (w == S(-4)) out.emplace_back("C[-4,1]", cm41());
            break;
        case 6:
            for (int i = 1; i <= 2; ++i)
                if (w == Scalar(ConstantsTable::a(i)))
                    out.emplace_back(name("C"), c_ai6(i));
            break;
        default:
            break;
    }
    return out;
}

Cochain2 Catalog::omega01() { return c2_antisym(S(0), 1, {{1, 2, 0, S(1)}}); }

Cochain2 Catalog::omega_k2(const Scalar& w) {
    return c2_antisym(w, 2, {{3, 1, 0, S(1)}, {2, 1, 1, S(2)}});
}

Cochain2 Catalog::omega_k3(const Scalar& w) {
    return c2_antisym(w, 3, {{2, 3, 0, S(1)}, {3, 1, 1, S(1)}});
}

Cochain2 Catalog::omega_k4(const Scalar& w) {
    return c2_antisym(w, 4,
                      {{1, 5, 0, -w}, {1, 4, 1, S(1)}, {1, 3, 2, S(-6)}, {1, 2, 3, S(-4)}});
}

Cochain2 Catalog::omega05() {
    return c2_antisym(S(0), 5,
                      {{5, 2, 0, S(1)}, {4, 3, 0, S(1)}, {4, 2, 1, S(4)}, {3, 2, 2, S(3)}});
}

Cochain2 Catalog::omega05_tilde() {
    return c2_antisym(S(0), 5,
                      {{5, 1, 1, S(2)}, {1, 4, 2, S(5)}, {3, 1, 3, S(10)}, {2, 1, 4, S(5)}});
}

Cochain2 Catalog::omega_m41() {
    return c2_antisym(S(-4), 5, {{4, 2, 1, S(2)}, {3, 2, 2, S(3)}});
}

Cochain2 Catalog::omega_m41_tilde() {
    return c2_antisym(S(-4), 5,
                      {{6, 1, 0, S(12)},
                       {5, 1, 1, S(22)},
                       {4, 1, 2, S(5)},
                       {1, 3, 3, S(10)},
                       {1, 2, 4, S(5)}});
}

Cochain2 Catalog::omega_ai6(int i) {
    return c2_antisym(Scalar(ConstantsTable::a(i)), 6,
                      {{5, 2, 1, S(1)}, {4, 3, 1, S(1)}, {4, 2, 2, S(3)}, {3, 2, 3, S(2)}});
}

Cochain2 Catalog::omega_ai6_tilde(int i) {
    return c2_antisym(Scalar(ConstantsTable::a(i)), 6,
                      {{7, 1, 0, Scalar(ConstantsTable::alpha(i))},
                       {1, 6, 1, Scalar(ConstantsTable::beta(i))},
                       {1, 5, 2, Scalar(ConstantsTable::gamma(i))},
                       {1, 4, 3, S(5)},
                       {3, 1, 4, S(5)},
                       {2, 1, 5, S(2)}});
}

Cochain2 Catalog::omega_k7(const Scalar& w) {
    return cup(c_k4(w + S(3)), c_k3(w));
}

Cochain2 Catalog::omega_k8(const Scalar& w) {
    return cup(c_k4(w + S(4)), c_k4(w));
}

Cochain2 Catalog::omega05_cup() { return cup(c_k3(S(2)), c_k2(S(0))); }
Cochain2 Catalog::omega05_tilde_cup() { return cup(c_diag(S(5)), c05()); }
Cochain2 Catalog::omega_m41_cup() { return cup(c_k2(S(-1)), c_k3(S(-4))); }
Cochain2 Catalog::omega_m41_tilde_cup() { return cup(c_diag(S(1)), cm41()); }
Cochain2 Catalog::omega_ai6_cup(int i) {
    Scalar ai(ConstantsTable::a(i));
    return cup(c_k3(ai + S(3)), c_k3(ai));
}
Cochain2 Catalog::omega_ai6_tilde_cup(int i) {
    Scalar ai(ConstantsTable::a(i));
    return cup(c_diag(ai + S(6)), c_ai6(i));
}
Cochain2 Catalog::omega_k3_cup(const Scalar& w) { return cup(c_k3(w), c_diag(w)); }

std::vector<std::pair<std::string, Cochain2>> Catalog::basis_cocycles_at(const Scalar& w, int k) {
    std::vector<std::pair<std::string, Cochain2>> out;
    auto name = [&](const char* fam) {
        return std::string(fam) + "[" + weight_str(w) + "," + weight_str(w + Scalar(k)) + "]";
    };
    switch (k) {
        case 1:
            if (w == S(0)) out.emplace_back("Omega[0,1]", omega01());
            break;
        case 2:
            out.emplace_back(name("Omega"), omega_k2(w));
            break;
        case 3:
            out.emplace_back(name("Omega"), omega_k3_cup(w));
            break;
        case 4:
            out.emplace_back(name("Omega"), omega_k4(w));
            break;
        case 5:
            if (w == S(0)) {
                out.emplace_back("Omega[0,5]", omega05_cup());
                out.emplace_back("Omegatilde[0,5]", omega05_tilde_cup());
            } else if (w == S(-4)) {
                out.emplace_back("Omega[-4,1]", omega_m41_cup());
                out.emplace_back("Omegatilde[-4,1]", omega_m41_tilde_cup());
            }
            break;
        case 6:
            for (int i = 1; i <= 2; ++i)
                if (w == Scalar(ConstantsTable::a(i))) {
                    out.emplace_back(name("Omega"), omega_ai6_cup(i));
                    out.emplace_back(name("Omegatilde"), omega_ai6_tilde_cup(i));
                }
            break;
        case 7:
            if (w != S(0) && w != S(-6)) out.emplace_back(name("Omega"), omega_k7(w));
            break;
        case 8: {
            Scalar twice = w + w;
            QuadExt b1(rat_of(-7), rat_of(1), 39), b2(rat_of(-7), rat_of(-1), 39);
            if (twice != Scalar(b1) && twice != Scalar(b2))
                out.emplace_back(name("Omega"), omega_k8(w));
            break;
        }
        case 9:
            if (w == S(-8) || w == S(0) || w == S(-4)) {
                out.emplace_back(name("Omega"), omega_k9(w));
            } else {
                for (int i = 1; i <= 2; ++i) {
                    Scalar ai(ConstantsTable::a(i));
                    if (w == ai || w == ai - S(3)) out.emplace_back(name("Omega"), omega_k9(w));
                }
            }
            break;
        case 10:
            for (int i = 1; i <= 2; ++i) {
                Scalar ai(ConstantsTable::a(i));
                if (w == ai || w == ai - S(4)) out.emplace_back(name("Omega"), omega_k10(w));
            }
            break;
        default:
            break;
    }
    return out;
}

Cochain2 Catalog::omega_k9(const Scalar& w) {
    if (w == S(-8)) return cup(cm41(), c_k4(S(-8)));
    if (w == S(0)) return cup(c_k4(S(5)), c05());
    if (w == S(-4)) return cup(c_k4(S(1)), cm41());
    for (int i = 1; i <= 2; ++i) {
        Scalar ai(ConstantsTable::a(i));
        if (w == ai) return cup(c_k3(ai + S(6)), c_ai6(i));
        if (w == ai - S(3)) return cup(c_ai6(i), c_k3(ai - S(3)));
    }
    throw structure_error("no k=9 generator at weight " + weight_str(w));
}

Cochain2 Catalog::omega_k10(const Scalar& w) {
    for (int i = 1; i <= 2; ++i) {
        Scalar ai(ConstantsTable::a(i));
        if (w == ai) return cup(c_k4(ai + S(6)), c_ai6(i));
        if (w == ai - S(4)) return cup(c_ai6(i), c_k4(ai - S(4)));
    }
    throw structure_error("no k=10 generator at weight " + weight_str(w));
}

Cochain1 Catalog::b_k4(const Scalar& w) {
    return c1_of(w, 4, {{0, S(2, 5) * (w - S(1))}, {1, S(-2)}});
}

Cochain1 Catalog::b04_tilde() { return c1_of(S(0), 4, {{0, S(-1, 5)}, {3, S(1)}}); }

Cochain1 Catalog::bm31_tilde() { return c1_of(S(-3), 4, {{0, S(-3, 10)}, {1, S(-1, 2)}}); }

Cochain1 Catalog::b_k5(const Scalar& w) {
    Scalar q = (w + S(2)) * (w + S(4));  // l^2 + 6l + 8
    Scalar inv_q = S(-1) / q;
    Scalar a0 = inv_q * S(7, 30) * (w + S(4));
    Scalar a1 = inv_q * (S(10) * w * w + S(39) * w - S(4)) / (S(10) * w);
    Scalar a2 = inv_q * (S(4) * w * w + S(17) * w + S(4)) / (S(2) * w);
    Scalar a3 = inv_q * (S(3) * w * w + S(11) * w - S(4)) / (S(3) * w);
    return c1_of(w, 5, {{0, a0}, {1, a1}, {2, a2}, {3, a3}});
}

Cochain1 Catalog::b_k5_tilde(const Scalar& w) {
    Scalar inv_q = S(-1) / ((w + S(2)) * (w + S(4)));
    return c1_of(w, 5,
                 {{0, inv_q * S(-7, 30) * w},
                  {1, inv_q * S(21, 10)},
                  {2, inv_q * (w + S(11, 2))},
                  {3, inv_q * (w + S(13, 3))}});
}

Cochain1 Catalog::bm23() {
    return c1_of(S(-2), 5, {{1, S(-1, 12)}, {2, S(-1, 3)}, {3, S(-2, 3)}, {4, S(-7, 12)}});
}

Cochain1 Catalog::bm23_tilde() {
    return c1_of(S(-2), 5, {{1, S(-7, 12)}, {2, S(-5, 3)}, {3, S(-5, 3)}, {4, S(-1)}});
}

Cochain1 Catalog::b05() {
    return c1_of(S(0), 5, {{0, S(-1)}, {2, S(-55)}, {5, S(-20)}});
}

Cochain1 Catalog::b05_tilde() {
    return c1_of(S(0), 5, {{0, S(-1)}, {2, S(-45)}, {4, S(-15)}, {5, S(1, 5)}});
}

Cochain1 Catalog::b05_bar() {
    return c1_of(S(0), 5, {{0, S(3)}, {2, S(135)}, {4, S(45)}});
}

Cochain1 Catalog::bm41_tilde() {
    return c1_of(S(-4), 5,
                 {{1, S(-17, 13)}, {2, S(-30, 13)}, {3, S(-30, 13)}, {4, S(-30, 13)}, {5, S(1, 5)}});
}

Cochain1 Catalog::bm41() {
    return c1_of(S(-4), 5, {{1, S(-17, 13)}, {2, S(-30, 13)}, {3, S(-30, 13)}, {4, S(-30, 13)}});
}

Cochain1 Catalog::bm41_bar() {
    return c1_of(S(-4), 5, {{1, S(36, 13)}, {2, S(495, 52)}, {3, S(345, 26)}, {4, S(495, 52)}});
}

Cochain1 Catalog::b_x5f2(const Scalar& w) { return c1_of(w, 6, {{2, S(1)}}); }

Catalog::Catalog() {
    auto add1 = [&](const std::string& key, std::function<Cochain1()> fn) {
        entries_.push_back({key, "cocycle1", std::move(fn), nullptr});
    };
    auto addw = [&](const std::string& key, std::function<Cochain1()> fn) {
        entries_.push_back({key, "witness1", std::move(fn), nullptr});
    };
    auto add2 = [&](const std::string& key, std::function<Cochain2()> fn) {
        entries_.push_back({key, "cocycle2", nullptr, std::move(fn)});
    };
    add1("C[l,l]", [] { return c_diag(lam()); });
    add1("C[0,1]", [] { return c01(); });
    add1("Ctilde[0,1]", [] { return c01_tilde(); });
    add1("C[l,l+2]", [] { return c_k2(lam()); });
    add1("C[l,l+3]", [] { return c_k3(lam()); });
    add1("C[l,l+4]", [] { return c_k4(lam()); });
    add1("C[0,5]", [] { return c05(); });
    add1("C[-4,1]", [] { return cm41(); });
    add1("C[a1,a1+6]", [] { return c_ai6(1); });
    add1("C[a2,a2+6]", [] { return c_ai6(2); });
    add2("Omega[0,1]", [] { return omega01(); });
    add2("Omega[l,l+2]", [] { return omega_k2(lam()); });
    add2("Omega[l,l+3]", [] { return omega_k3(lam()); });
    add2("Omega[l,l+4]", [] { return omega_k4(lam()); });
    add2("Omega[0,5]", [] { return omega05(); });
    add2("Omegatilde[0,5]", [] { return omega05_tilde(); });
    add2("Omega[-4,1]", [] { return omega_m41(); });
    add2("Omegatilde[-4,1]", [] { return omega_m41_tilde(); });
    add2("Omega[a1,a1+6]", [] { return omega_ai6(1); });
    add2("Omegatilde[a1,a1+6]", [] { return omega_ai6_tilde(1); });
    add2("Omega[a2,a2+6]", [] { return omega_ai6(2); });
    add2("Omegatilde[a2,a2+6]", [] { return omega_ai6_tilde(2); });
    add2("Omega[l,l+7]", [] { return omega_k7(lam()); });
    add2("Omega[l,l+8]", [] { return omega_k8(lam()); });
    add2("Omega[-8,1]", [] { return omega_k9(S(-8)); });
    add2("Omega[0,9]", [] { return omega_k9(S(0)); });
    add2("Omega[-4,5]", [] { return omega_k9(S(-4)); });
    add2("Omega[a1,a1+9]", [] { return omega_k9(Scalar(ConstantsTable::a(1))); });
    add2("Omega[a2,a2+9]", [] { return omega_k9(Scalar(ConstantsTable::a(2))); });
    add2("Omega[a1-3,a1+6]", [] { return omega_k9(Scalar(ConstantsTable::a(1)) - S(3)); });
    add2("Omega[a2-3,a2+6]", [] { return omega_k9(Scalar(ConstantsTable::a(2)) - S(3)); });
    add2("Omega[a1,a1+10]", [] { return omega_k10(Scalar(ConstantsTable::a(1))); });
    add2("Omega[a2,a2+10]", [] { return omega_k10(Scalar(ConstantsTable::a(2))); });
    add2("Omega[a1-4,a1+6]", [] { return omega_k10(Scalar(ConstantsTable::a(1)) - S(4)); });
    add2("Omega[a2-4,a2+6]", [] { return omega_k10(Scalar(ConstantsTable::a(2)) - S(4)); });
    addw("b[l,l+4]", [] { return b_k4(lam()); });
    addw("btilde[0,4]", [] { return b04_tilde(); });
    addw("btilde[-3,1]", [] { return bm31_tilde(); });
    addw("b[l,l+5]", [] { return b_k5(lam()); });
    addw("btilde[l,l+5]", [] { return b_k5_tilde(lam()); });
    addw("b[-2,3]", [] { return bm23(); });
    addw("btilde[-2,3]", [] { return bm23_tilde(); });
    addw("b[0,5]", [] { return b05(); });
    addw("btilde[0,5]", [] { return b05_tilde(); });
    addw("bbar[0,5]", [] { return b05_bar(); });
    addw("btilde[-4,1]", [] { return bm41_tilde(); });
    addw("b[-4,1]", [] { return bm41(); });
    addw("bbar[-4,1]", [] { return bm41_bar(); });
    addw("b[l,l+6;x5f2]", [] { return b_x5f2(lam()); });
}

bool Catalog::has(const std::string& key) const {
    for (const auto& e : entries_)
        if (e.key == key) return true;
    return false;
}

Cochain1 Catalog::cochain1(const std::string& key) const {
    for (const auto& e : entries_)
        if (e.key == key && e.c1) return e.c1();
    throw structure_error("no 1-cochain catalog entry " + key);
}

Cochain2 Catalog::cochain2(const std::string& key) const {
    for (const auto& e : entries_)
        if (e.key == key && e.c2) return e.c2();
    throw structure_error("no 2-cochain catalog entry " + key);
}

std::string serialize(const Cochain1& c) {
    std::ostringstream os;
    os << "C1|w=" << c.weight.str() << "|k=" << c.shift << "|";
    for (size_t j = 0; j < c.alpha.size(); ++j) {
        if (j) os << ";";
        os << c.alpha[j].str();
    }
    return os.str();
}

std::string serialize(const Cochain2& c) {
    std::ostringstream os;
    os << "C2|w=" << c.weight.str() << "|k=" << c.shift << "|";
    bool first = true;
    for (const auto& [m, coef] : c.body.terms()) {
        if (!first) os << ";";
        first = false;
        os << m.v[0] << "," << m.v[1] << "," << m.f << ":" << coef.str();
    }
    return os.str();
}

Cochain1 deserialize_cochain1(const std::string& text) {
    if (text.rfind("C1|w=", 0) != 0) throw parse_error("bad 1-cochain serialization");
    size_t p1 = text.find("|k=", 5);
    if (p1 == std::string::npos) throw parse_error("bad 1-cochain serialization");
    Scalar w = Scalar::parse(text.substr(5, p1 - 5));
    size_t p2 = text.find('|', p1 + 3);
    int k = std::stoi(text.substr(p1 + 3, p2 - p1 - 3));
    Cochain1 c(w, k);
    std::string rest = text.substr(p2 + 1);
    size_t start = 0;
    for (int j = 0; j <= k + 1; ++j) {
        size_t semi = rest.find(';', start);
        std::string piece =
            semi == std::string::npos ? rest.substr(start) : rest.substr(start, semi - start);
        c.alpha[j] = Scalar::parse(piece);
        start = semi == std::string::npos ? rest.size() : semi + 1;
    }
    return c;
}

std::string Catalog::hash() const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](const std::string& s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 1099511628211ull;
        }
    };
    for (const auto& e : entries_) {
        mix(e.key);
        if (e.c1) mix(serialize(e.c1()));
        if (e.c2) mix(serialize(e.c2()));
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace vectcoh
