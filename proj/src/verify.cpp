#include "vectcoh/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace vectcoh {

namespace {

Scalar S(long n, long d = 1) { return Scalar(rat_of(n, d)); }
Scalar lam() { return Scalar::lambda(); }

const char* kDimAssumption =
    "cohomology dimensions of the weighted-density operator modules are taken as external "
    "input; non-coboundary certificates are relative to the order-homogeneous ansatz";

ReportDocument make_report(const std::string& command) {
    ReportDocument rep;
    rep.command = command;
    rep.catalog_hash = Catalog().hash();
    return rep;
}

int worker_count(const VerifyOptions& opt) {
    if (opt.workers > 0) return opt.workers;
    if (const char* env = std::getenv("VECTCOH_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

// Deterministic fan-out: results land by index regardless of completion
// order, so reports do not depend on scheduling.
template <typename Fn>
void parallel_indexed(size_t n, int workers, Fn&& fn) {
    if (workers <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int w = 0; w < workers && w < static_cast<int>(n); ++w) {
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

bool not_coboundary(const Cochain2& om) { return !decompose(om, {}).ok; }

const ConstantsReport& cached_constants() {
    static ConstantsReport cr = recompute_omitted_constants();
    return cr;
}

struct NamedCocycle {
    std::string key;
    Cochain1 c;
    bool generic;  // weight is the formal variable
};

std::vector<NamedCocycle> table1_entries() {
    Scalar l = lam();
    return {
        {"C[l,l]", Catalog::c_diag(l), true},
        {"C[0,1]", Catalog::c01(), false},
        {"Ctilde[0,1]", Catalog::c01_tilde(), false},
        {"C[l,l+2]", Catalog::c_k2(l), true},
        {"C[l,l+3]", Catalog::c_k3(l), true},
        {"C[l,l+4]", Catalog::c_k4(l), true},
        {"C[0,5]", Catalog::c05(), false},
        {"C[-4,1]", Catalog::cm41(), false},
        {"C[a1,a1+6]", Catalog::c_ai6(1), false},
        {"C[a2,a2+6]", Catalog::c_ai6(2), false},
    };
}

// Is c a coboundary of a degree-0 cochain a*d^k (the only source of
// order-homogeneous 1-coboundaries)?
bool is_trivial_1cocycle(const Cochain1& c) {
    Cochain1 gen = coboundary0(c.weight, c.shift, Scalar(1));
    LinearSystem sys;
    sys.labels = {"a"};
    sys.a.assign(c.alpha.size(), std::vector<Scalar>(1, Scalar(0)));
    sys.rhs.assign(c.alpha.size(), Scalar(0));
    for (size_t j = 0; j < c.alpha.size(); ++j) {
        sys.a[j][0] = gen.alpha[j];
        sys.rhs[j] = c.alpha[j];
    }
    return solve_exact(sys).solved();
}

nlohmann::ordered_json tpoly_list(const std::vector<TPoly>& v) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& p : v) a.push_back(p.str());
    return a;
}

}  // namespace

ReportDocument verify_table1(const VerifyOptions& opt) {
    ReportDocument rep = make_report("verify-table1");
    if (opt.assume_dimensions) rep.assume(kDimAssumption);
    auto entries = table1_entries();
    std::vector<CheckRecord> records(entries.size() * 2);
    parallel_indexed(entries.size(), worker_count(opt), [&](size_t i) {
        const auto& e = entries[i];
        bool cocycle = coboundary1(e.c).is_zero();
        records[2 * i] = {"cocycle " + e.key, "cocycle-table/" + e.key,
                          cocycle ? "pass" : "fail",
                          {{"statement", "d C = 0 " + std::string(e.generic
                                             ? "as a rational identity in the weight"
                                             : "at the pinned weight")}}};
        bool nontrivial = !is_trivial_1cocycle(e.c);
        std::string claim = opt.assume_dimensions
                                ? "spans a nonzero cohomology class"
                                : "not a coboundary of the homogeneous ansatz";
        records[2 * i + 1] = {"nontrivial " + e.key, "cocycle-table/" + e.key,
                              nontrivial ? "pass" : "fail", {{"statement", claim}}};
    });
    for (auto& r : records) rep.checks.push_back(std::move(r));

    // specialization sensitivity: the surd-weight family fails off-resonance
    Cochain1 off(lam(), 6, Catalog::c_ai6(1).alpha);
    rep.add("specialization sensitivity C[a1,a1+6]", "cocycle-table/resonance",
            !coboundary1(off).is_zero(),
            {{"statement", "the shift-6 family is a cocycle only at the resonant surd weights"}});

    if (opt.crosscheck) {
        // concrete monomial confirmation at sampled weights
        for (const auto& e : entries) {
            std::vector<QuadExt> weights;
            if (e.generic) {
                weights = oracle_sample_weights();
                weights.resize(2);
            } else {
                weights = {e.c.weight.constant()};
            }
            for (const QuadExt& w : weights) {
                Cochain1 spec = e.generic ? e.c.specialize(w) : e.c;
                bool ok = true;
                for (int a = 0; a <= 9 && ok; ++a)
                    for (int b = 0; b <= 9 && ok; ++b)
                        ok = concrete_coboundary1(spec, w, UPoly::monomial(QuadExt(1), a),
                                                  UPoly::monomial(QuadExt(1), b),
                                                  UPoly::monomial(QuadExt(1), 4))
                                 .is_zero();
                rep.add("concrete d" + e.key + " = 0 at weight " + w.str(),
                        "cocycle-table/crosscheck", ok);
            }
        }
    }
    return rep;
}

ReportDocument verify_2cocycles(const VerifyOptions& opt) {
    ReportDocument rep = make_report("verify-2cocycles");
    if (opt.assume_dimensions) rep.assume(kDimAssumption);
    Scalar l = lam();

    auto block_wanted = [&](int k) {
        return opt.block_filter.empty() ||
               std::count(opt.block_filter.begin(), opt.block_filter.end(), k) > 0;
    };

    // ---- the shift <= 4 displays and their cup identities ----
    if (block_wanted(1)) {
        rep.add("[[C[1,1],C[0,1]]] = Omega[0,1]", "cup-identities/shift1",
                cup(Catalog::c_diag(S(1)), Catalog::c01()) == Catalog::omega01());
        rep.add("-[[C[0,1],C[0,0]]] = Omega[0,1]", "cup-identities/shift1",
                -cup(Catalog::c01(), Catalog::c_diag(S(0))) == Catalog::omega01());
        Cochain2 tc = cup(Catalog::c01_tilde(), Catalog::c_diag(S(0)));
        rep.add("[[Ctilde[0,1],C[0,0]]] = Omega[0,1]", "cup-identities/shift1", false,
                {{"computed", tc.is_zero() ? "0 (identically)" : tc.str()},
                 {"note", "this composition is symmetric, hence vanishes; the chain actually "
                          "entering the obstruction is [[C[1,1],Ctilde[0,1]]]"}});
        rep.add("corrected reading [[C[1,1],Ctilde[0,1]]] = Omega[0,1]", "cup-identities/shift1",
                cup(Catalog::c_diag(S(1)), Catalog::c01_tilde()) == Catalog::omega01());
        rep.add("Omega[0,1] nontrivial at 0, trivial elsewhere", "cup-identities/shift1",
                not_coboundary(Catalog::omega01()) &&
                    decompose(Cochain2(S(1), 1, Catalog::omega01().body), {}).ok);
    }
    if (block_wanted(2)) {
        rep.add("[[C[l,l+2],C[l,l]]] = Omega[l,l+2]", "cup-identities/shift2",
                cup(Catalog::c_k2(l), Catalog::c_diag(l)) == Catalog::omega_k2(l));
        rep.add("-[[C[l+2,l+2],C[l,l+2]]] = Omega[l,l+2]", "cup-identities/shift2",
                -cup(Catalog::c_diag(l + S(2)), Catalog::c_k2(l)) == Catalog::omega_k2(l));
        rep.add("Omega[l,l+2] nontrivial", "cup-identities/shift2",
                not_coboundary(Catalog::omega_k2(l)));
    }
    if (block_wanted(3)) {
        ClassDecomposition d = decompose(Catalog::omega_k3(l), {Catalog::omega_k3_cup(l)});
        rep.add("Omega[l,l+3] display = cup modulo coboundary", "cup-identities/shift3",
                d.ok && !d.coords.empty() && d.coords[0] == S(1),
                {{"note", "the displayed shift-3 formula is not d-closed (see the cocycle "
                          "check); the defining cup is the actual generator"}});
        rep.add("defining cup at shift 3 is a nontrivial cocycle", "cup-identities/shift3",
                coboundary2(Catalog::omega_k3_cup(l)).is_zero() &&
                    not_coboundary(Catalog::omega_k3_cup(l)));
    }
    if (block_wanted(4)) {
        rep.add("[[C[l+4,l+4],C[l,l+4]]] = Omega[l,l+4]", "cup-identities/shift4",
                cup(Catalog::c_diag(l + S(4)), Catalog::c_k4(l)) == Catalog::omega_k4(l));
        ClassDecomposition d =
            decompose(cup(Catalog::c_k4(l), Catalog::c_diag(l)), {Catalog::omega_k4(l)});
        rep.add("[[C[l,l+4],C[l,l]]] = -Omega[l,l+4] + exact term", "cup-identities/shift4",
                d.ok && d.coords[0] == S(-1),
                {{"witness", d.ok ? d.witness.str() : "-"}});
        rep.add("Omega[l,l+4] nontrivial", "cup-identities/shift4",
                not_coboundary(Catalog::omega_k4(l)));
    }

    // ---- shift 5 and 6 displays: cups equal the negated displays ----
    struct Pair5 {
        const char* name;
        Cochain2 display;
        Cochain2 cupped;
    };
    if (block_wanted(5)) {
        std::vector<Pair5> fam5 = {
            {"Omega[0,5]", Catalog::omega05(), Catalog::omega05_cup()},
            {"Omegatilde[0,5]", Catalog::omega05_tilde(), Catalog::omega05_tilde_cup()},
            {"Omega[-4,1]", Catalog::omega_m41(), Catalog::omega_m41_cup()},
            {"Omegatilde[-4,1]", Catalog::omega_m41_tilde(), Catalog::omega_m41_tilde_cup()},
        };
        for (const auto& p : fam5) {
            ClassDecomposition d = decompose(p.cupped, {p.display});
            bool coh = d.ok && !d.coords[0].is_zero();
            rep.add(std::string(p.name) + " display vs defining cup", "cup-identities/shift5", coh,
                    {{"cup = c * display + exact term, c", d.ok ? d.coords[0].str() : "-"}});
            rep.add(std::string(p.name) + " nontrivial", "cup-identities/shift5",
                    not_coboundary(p.display) && not_coboundary(p.cupped));
        }
    }
    if (block_wanted(6)) {
        for (int i = 1; i <= 2; ++i) {
            std::string tag = i == 1 ? "a1" : "a2";
            ClassDecomposition d = decompose(Catalog::omega_ai6_cup(i), {Catalog::omega_ai6(i)});
            rep.add("Omega[" + tag + "," + tag + "+6] display vs cup", "cup-identities/shift6",
                    d.ok && d.coords[0] == S(-1), {{"c", d.ok ? d.coords[0].str() : "-"}});
            ClassDecomposition dt =
                decompose(Catalog::omega_ai6_tilde_cup(i), {Catalog::omega_ai6_tilde(i)});
            rep.add("Omegatilde[" + tag + "," + tag + "+6] display vs cup",
                    "cup-identities/shift6", dt.ok && dt.coords[0] == S(-1),
                    {{"c", dt.ok ? dt.coords[0].str() : "-"}});
            rep.add("shift-6 pair nontrivial at " + tag, "cup-identities/shift6",
                    not_coboundary(Catalog::omega_ai6_cup(i)) &&
                        not_coboundary(Catalog::omega_ai6_tilde_cup(i)));
        }
    }

    // ---- shift 7/8: nontrivial iff off the excluded weights ----
    if (block_wanted(7)) {
        rep.add("Omega[l,l+7] nontrivial generically", "cup-identities/shift7",
                not_coboundary(Catalog::omega_k7(l)));
        rep.add("Omega[1,8] nontrivial", "cup-identities/shift7",
                not_coboundary(Catalog::omega_k7(S(1))));
        rep.add("Omega[0,7] trivial", "cup-identities/shift7",
                decompose(Catalog::omega_k7(S(0)), {}).ok);
        rep.add("Omega[-6,1] trivial", "cup-identities/shift7",
                decompose(Catalog::omega_k7(S(-6)), {}).ok);
    }
    if (block_wanted(8)) {
        rep.add("Omega[l,l+8] nontrivial generically", "cup-identities/shift8",
                not_coboundary(Catalog::omega_k8(l)));
        QuadExt b1(rat_of(-7, 2), rat_of(1, 2), 39);
        QuadExt b2(rat_of(-7, 2), rat_of(-1, 2), 39);
        rep.add("Omega[l,l+8] trivial at 2l = -7 + sqrt(39)", "cup-identities/shift8",
                decompose(Catalog::omega_k8(Scalar(b1)), {}).ok);
        rep.add("Omega[l,l+8] trivial at 2l = -7 - sqrt(39)", "cup-identities/shift8",
                decompose(Catalog::omega_k8(Scalar(b2)), {}).ok);
    }
    if (block_wanted(9)) {
        for (const Scalar& w : {S(-8), S(0), S(-4)})
            rep.add("Omega" + BlockKey{w, 9}.str() + " nontrivial", "cup-identities/shift9",
                    not_coboundary(Catalog::omega_k9(w)));
        for (int i = 1; i <= 2; ++i) {
            Scalar ai(ConstantsTable::a(i));
            rep.add("Omega at (a" + std::to_string(i) + ",+9) nontrivial", "cup-identities/shift9",
                    not_coboundary(Catalog::omega_k9(ai)));
            rep.add("Omega at (a" + std::to_string(i) + "-3,+9) nontrivial",
                    "cup-identities/shift9", not_coboundary(Catalog::omega_k9(ai - S(3))));
        }
    }
    if (block_wanted(10)) {
        for (int i = 1; i <= 2; ++i) {
            Scalar ai(ConstantsTable::a(i));
            rep.add("Omega at (a" + std::to_string(i) + ",+10) nontrivial",
                    "cup-identities/shift10", not_coboundary(Catalog::omega_k10(ai)));
            rep.add("Omega at (a" + std::to_string(i) + "-4,+10) nontrivial",
                    "cup-identities/shift10", not_coboundary(Catalog::omega_k10(ai - S(4))));
        }
    }

    // cocycle property of every displayed 2-cocycle
    std::vector<std::pair<std::string, Cochain2>> all = {
        {"Omega[0,1]", Catalog::omega01()},
        {"Omega[l,l+2]", Catalog::omega_k2(l)},
        {"Omega[l,l+3]", Catalog::omega_k3(l)},
        {"Omega[l,l+4]", Catalog::omega_k4(l)},
        {"Omega[0,5]", Catalog::omega05()},
        {"Omegatilde[0,5]", Catalog::omega05_tilde()},
        {"Omega[-4,1]", Catalog::omega_m41()},
        {"Omegatilde[-4,1]", Catalog::omega_m41_tilde()},
        {"Omega[a1,a1+6]", Catalog::omega_ai6(1)},
        {"Omegatilde[a1,a1+6]", Catalog::omega_ai6_tilde(1)},
        {"Omega[a2,a2+6]", Catalog::omega_ai6(2)},
        {"Omegatilde[a2,a2+6]", Catalog::omega_ai6_tilde(2)},
    };
    for (const auto& [key, om] : all)
        rep.add("cocycle " + key, "cup-identities/cocycle", coboundary2(om).is_zero());
    return rep;
}

ReportDocument verify_constants(const VerifyOptions& opt) {
    ReportDocument rep = make_report("recompute-constants");
    rep.assume(kDimAssumption);
    const ConstantsReport& cr = cached_constants();
    rep.add("reconstruction identities", "omitted-constants", cr.reconstructions_ok);
    rep.add("R,S,T derived with Galois pairing", "omitted-constants/shift6", cr.galois_ok,
            {{"R1", cr.R[1].str()},
             {"S1", cr.S[1].str()},
             {"T1", cr.T[1].str()},
             {"R2", cr.R[2].str()},
             {"S2", cr.S[2].str()},
             {"T2", cr.T[2].str()}});
    rep.add("diagonal chain carries the second class with unit coordinate",
            "omitted-constants/shift6", cr.tilde_structure_ok);
    rep.add("shift-7 class coordinate equals (1-2l)/(2l+13)", "omitted-constants/shift7",
            cr.k7_coord_ok, {{"coordinate", cr.k7_coord.str()}});
    rep.add("derived shift-8 ratios are Galois-paired", "omitted-constants/shift8",
            cr.ratios_conjugate,
            {{"mu/nu at a1", cr.mu_nu[1].str()}, {"eta/theta at a1-2", cr.eta_theta[1].str()}});
    rep.add("tabulated eta/theta and mu/nu reproduce", "omitted-constants/shift8",
            cr.const3_match,
            {{"note", "the recomputed ratios disagree with the tabulated constants; derived "
                      "values are published above and satisfy the asserted conjugacy"}});
    rep.add("resonant shift-6 witnesses proportional to X^(5)f''", "omitted-constants/shift6",
            cr.k6_proportional,
            {{"note", "checked modulo the full homogeneous cocycle kernel"}});
    rep.info("shift-6 witness display readings", "omitted-constants/shift6",
             {{"verdict", cr.k6_prefactor_note}});
    for (const auto& d : cr.decomps) {
        nlohmann::ordered_json coords = nlohmann::ordered_json::array();
        for (size_t i = 0; i < d.dec.coords.size(); ++i)
            coords.push_back(d.basis_keys[i] + ": " + d.dec.coords[i].str());
        rep.info("decomposition " + d.cup_key, "omitted-constants/witness",
                 {{"coords", coords}, {"witness", d.dec.witness.str()}});
    }
    return rep;
}

namespace {

// proportional as conditions: p = c * q for a nonzero scalar c
bool proportional(const TPoly& p, const TPoly& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() == q.is_zero();
    return p.condition_normal_form() == q.condition_normal_form();
}

TPoly tp(const std::string& monomials) {
    // "c1*t[..]*t[..] +- ..." tiny builder used for the table transcriptions;
    // coefficients are rationals
    TPoly out;
    size_t i = 0;
    const std::string& s = monomials;
    while (i < s.size()) {
        int sign = 1;
        while (i < s.size() && (s[i] == ' ' || s[i] == '+')) ++i;
        if (i < s.size() && s[i] == '-') {
            sign = -1;
            ++i;
        }
        while (i < s.size() && s[i] == ' ') ++i;
        if (i >= s.size()) break;
        Rat coef(1);
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t start = i;
            while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
                ++i;
            coef = rat_parse(s.substr(start, i - start));
            if (i < s.size() && s[i] == '*') ++i;
        }
        TMonomial mono;
        while (i < s.size() && (s[i] == 't')) {
            size_t close = s.find(']', i);
            if (close == std::string::npos) throw parse_error("bad monomial string: " + s);
            ParamKey k = ParamKey::parse(s.substr(i, close - i + 1));
            ++mono[k];
            i = close + 1;
            if (i < s.size() && s[i] == '*') ++i;
        }
        out.add(mono, Scalar(sign < 0 ? -coef : coef));
    }
    return out;
}

bool span_equal(const std::vector<TPoly>& a, const std::vector<TPoly>& b) {
    for (const TPoly& p : a)
        if (!ideal_member(p, b)) return false;
    for (const TPoly& p : b)
        if (!ideal_member(p, a)) return false;
    return true;
}

}  // namespace

ReportDocument verify_condition_tables(const VerifyOptions& opt) {
    ReportDocument rep = make_report("verify-conditions");
    rep.assume(kDimAssumption);
    Scalar l = lam();

    // ---- the k = 1, 2, 3 lines: exact ----
    rep.add("k=1 line (weight 0)", "conditions/k123",
            derive_block_conditions(S(0), 1) ==
                std::vector<TPoly>{tp("t[0,0]*t[0,1] - t[0,1]*t[1,1] - ttilde[0,1]*t[1,1]")});
    {
        auto c2 = derive_block_conditions(l, 2);
        rep.add("k=2 line (generic)", "conditions/k123",
                c2.size() == 1 && c2[0].str() == "t[l,l]*t[l,l+2] - t[l,l+2]*t[l+2,l+2]");
        auto c3 = derive_block_conditions(l, 3);
        rep.add("k=3 line (generic)", "conditions/k123",
                c3.size() == 1 && c3[0].str() == "t[l,l]*t[l,l+3] - t[l,l+3]*t[l+3,l+3]");
    }
    // recomputed resonant corrections at k=3 (not in the classical table)
    rep.info("k=3 resonant corrections", "conditions/k123",
             {{"at 0", derive_block_conditions(S(0), 3).front().str()},
              {"at -2", derive_block_conditions(S(-2), 3).front().str()},
              {"note", "recomputed corrections through the (0,1) pair, absent from the "
                       "classical k=3 line; necessity verified by the concrete oracle"}});

    // ---- k = 4, 5, 6: ideal equality per block ----
    {
        auto c4 = derive_block_conditions(l, 4);
        rep.add("k=4 line (generic)", "conditions/k456",
                c4.size() == 1 && c4[0].str() == "t[l,l]*t[l,l+4] - t[l,l+4]*t[l+4,l+4]");
        auto cm3 = derive_block_conditions(S(-3), 4);
        rep.add("k=4 line at -3 (as tabulated)", "conditions/k456",
                cm3.size() == 1 &&
                    proportional(cm3[0], tp("t[-3,1]*t[-3,-3] - t[-3,1]*t[1,1] - "
                                            "1/10*t[-3,0]*ttilde[0,1]")),
                {{"derived", cm3.empty() ? "-" : cm3[0].str()},
                 {"note", "the tabulated (1/10)-term sign contradicts the displayed cup "
                          "coordinates; the derived sign is certified by the concrete "
                          "homomorphism oracle below"}});
        rep.add("k=4 line at -3 (derived sign)", "conditions/k456",
                cm3.size() == 1 &&
                    proportional(cm3[0], tp("t[-3,1]*t[-3,-3] - t[-3,1]*t[1,1] + "
                                            "1/10*t[-3,0]*ttilde[0,1]")));
        auto c04 = derive_block_conditions(S(0), 4);
        rep.add("k=4 line at 0 (as tabulated)", "conditions/k456",
                c04.size() == 1 &&
                    proportional(c04[0],
                                 tp("t[0,4]*t[0,0] - t[0,4]*t[4,4] + 1/10*ttilde[0,1]*t[1,4]")),
                {{"derived", c04.empty() ? "-" : c04[0].str()}});
        rep.add("k=4 line at 0 (derived sign)", "conditions/k456",
                c04.size() == 1 &&
                    proportional(c04[0],
                                 tp("t[0,4]*t[0,0] - t[0,4]*t[4,4] - 1/10*ttilde[0,1]*t[1,4]")));
        {
            // the concrete homomorphism oracle certifies the derived sign:
            // the point solving the derived condition deforms, the point
            // solving the tabulated one fails in block (0,4)
            SymbolSpace sp{4, S(0) + S(4)};
            std::map<ParamKey, QuadExt> derived_pt{
                {ParamKey{S(0), 0, false}, QuadExt(rat_of(1, 10))},
                {ParamKey{S(0), 4, false}, QuadExt(1)},
                {ParamKey{S(0), 1, true}, QuadExt(1)},
                {ParamKey{S(1), 3, false}, QuadExt(1)}};
            std::map<ParamKey, QuadExt> tabulated_pt = derived_pt;
            tabulated_pt[ParamKey{S(0), 0, false}] = QuadExt(rat_of(-1, 10));
            PointCheck pe = check_deformation_at_point(sp, derived_pt, 2, 5);
            PointCheck pp = check_deformation_at_point(sp, tabulated_pt, 2, 5);
            rep.add("necessity oracle certifies the derived k=4 sign", "conditions/k456",
                    pe.pass && !pp.pass && pp.fail_block == "(0,4)");
        }
        auto c05b = derive_block_conditions(S(0), 5);
        std::vector<TPoly> table05 = {
            tp("30*t[0,0]*t[0,5] - 12*t[0,1]*t[1,5] - 12*ttilde[0,1]*t[1,5] + t[0,2]*t[2,5]"),
            tp("t[0,0]*t[0,5] - 2/5*ttilde[0,1]*t[1,5] - t[0,5]*t[5,5]")};
        rep.add("k=5 lines at 0 (ideal equality)", "conditions/k456",
                c05b.size() == 2 && span_equal(c05b, table05));
        auto cm41b = derive_block_conditions(S(-4), 5);
        std::vector<TPoly> tablem41 = {
            tp("30*t[-4,-4]*t[-4,1] - 12*t[-4,0]*t[0,1] - 12*t[-4,0]*ttilde[0,1] + "
               "t[-4,-1]*t[-1,1]"),
            tp("t[-4,1]*t[1,1] + 2/5*t[-4,0]*ttilde[0,1] - t[-4,-4]*t[-4,1]")};
        rep.add("k=5 lines at -4 (ideal equality)", "conditions/k456",
                cm41b.size() == 2 && span_equal(cm41b, tablem41));
        // k=6 at a_i: shape check against the derived R, S, T
        const ConstantsReport& cr = cached_constants();
        for (int i = 1; i <= 2; ++i) {
            Scalar ai(ConstantsTable::a(i));
            auto c6 = derive_block_conditions(ai, 6);
            ParamKey t0{ai, 0, false}, t6p{ai + S(6), 0, false}, tk6{ai, 6, false};
            ParamKey t2{ai, 2, false}, t26{ai + S(2), 4, false};
            ParamKey t3{ai, 3, false}, t36{ai + S(3), 3, false};
            ParamKey t4{ai, 4, false}, t46{ai + S(4), 2, false};
            TPoly line8 = TPoly::var(tk6) * (TPoly::var(t0) - TPoly::var(t6p));
            TPoly line9 = TPoly::var(t3) * TPoly::var(t36) -
                          (TPoly::var(t0) * TPoly::var(tk6)).scaled(cr.R[i]) +
                          (TPoly::var(t2) * TPoly::var(t26)).scaled(cr.S[i]) -
                          (TPoly::var(t4) * TPoly::var(t46)).scaled(cr.T[i]);
            rep.add("k=6 lines at a" + std::to_string(i) + " (ideal equality, derived R,S,T)",
                    "conditions/k456", c6.size() == 2 && span_equal(c6, {line8, line9}));
        }
    }

    // ---- k = 7..10 ----
    {
        auto c7 = derive_block_conditions(l, 7);
        rep.add("k=7 generic line: coefficients (2l+13) and (1-2l) exactly", "conditions/k789",
                c7.size() == 1 &&
                    c7[0].str() ==
                        "(2*l+13)*t[l,l+3]*t[l+3,l+7] + (-2*l+1)*t[l,l+4]*t[l+4,l+7]");
        auto cm2 = derive_block_conditions(S(-2), 7);
        rep.add("k=7 at -2 (proportional)", "conditions/k789",
                cm2.size() == 1 &&
                    proportional(cm2[0],
                                 tp("45*t[-2,0]*t[0,5] - 36*t[-2,1]*t[1,5] - 20*t[-2,2]*t[2,5]")));
        auto cm4 = derive_block_conditions(S(-4), 7);
        rep.add("k=7 at -4 (proportional)", "conditions/k789",
                cm4.size() == 1 &&
                    proportional(cm4[0],
                                 tp("20*t[-4,-1]*t[-1,3] + 36*t[-4,0]*t[0,3] + 45*t[-4,1]*t[1,3]")));
        auto c8 = derive_block_conditions(l, 8);
        rep.add("k=8 generic line", "conditions/k789",
                c8.size() == 1 && c8[0].str() == "t[l,l+4]*t[l+4,l+8]");
        auto c8m7 = derive_block_conditions(S(-7), 8);
        rep.add("k=8 at -7 (proportional)", "conditions/k789",
                c8m7.size() == 1 &&
                    proportional(c8m7[0], tp("60*t[-7,-3]*t[-3,1] + t[-7,-4]*t[-4,1]")));
        auto c80 = derive_block_conditions(S(0), 8);
        rep.add("k=8 at 0 (proportional)", "conditions/k789",
                c80.size() == 1 &&
                    proportional(c80[0], tp("60*t[0,4]*t[4,8] - t[0,5]*t[5,8]")));
        auto c8m4 = derive_block_conditions(S(-4), 8);
        rep.add("k=8 at -4 (proportional)", "conditions/k789",
                c8m4.size() == 1 &&
                    proportional(c8m4[0], tp("4*t[-4,0]*t[0,4] - t[-4,1]*t[1,4]")));
        // a_i-shifted k=8 lines: tabulated constants vs derived ratios
        const ConstantsReport& cr = cached_constants();
        for (int i = 1; i <= 2; ++i) {
            Scalar ai(ConstantsTable::a(i));
            auto cm2a = derive_block_conditions(ai - S(2), 8);
            ParamKey ta{ai - S(2), 2, false}, tb{ai, 6, false};
            ParamKey tc{ai - S(2), 4, false}, td{ai + S(2), 4, false};
            TPoly tabulated = (TPoly::var(ta) * TPoly::var(tb)).scaled(Scalar(ConstantsTable::eta(i))) +
                              (TPoly::var(tc) * TPoly::var(td)).scaled(Scalar(ConstantsTable::theta(i)));
            rep.add("k=8 at a" + std::to_string(i) + "-2 vs tabulated eta/theta",
                    "conditions/k789", cm2a.size() == 1 && proportional(cm2a[0], tabulated),
                    {{"derived", cm2a.empty() ? "-" : cm2a[0].str()},
                     {"note", "tabulated constants do not reproduce; see recompute-constants"}});
            TPoly derived = (TPoly::var(ta) * TPoly::var(tb)).scaled(cr.eta_theta[i]) +
                            TPoly::var(tc) * TPoly::var(td);
            rep.add("k=8 at a" + std::to_string(i) + "-2 vs derived ratio", "conditions/k789",
                    cm2a.size() == 1 && proportional(cm2a[0], derived));
            auto caa = derive_block_conditions(ai, 8);
            ParamKey te{ai, 6, false}, tf{ai + S(6), 2, false};
            ParamKey tg{ai, 4, false}, th{ai + S(4), 4, false};
            TPoly tab2 = (TPoly::var(te) * TPoly::var(tf)).scaled(Scalar(ConstantsTable::mu(i))) +
                         (TPoly::var(tg) * TPoly::var(th)).scaled(Scalar(ConstantsTable::nu(i)));
            rep.add("k=8 at a" + std::to_string(i) + " vs tabulated mu/nu", "conditions/k789",
                    caa.size() == 1 && proportional(caa[0], tab2),
                    {{"derived", caa.empty() ? "-" : caa[0].str()},
                     {"note", "tabulated constants do not reproduce; see recompute-constants"}});
            TPoly derived2 = (TPoly::var(te) * TPoly::var(tf)).scaled(cr.mu_nu[i]) +
                             TPoly::var(tg) * TPoly::var(th);
            rep.add("k=8 at a" + std::to_string(i) + " vs derived ratio", "conditions/k789",
                    caa.size() == 1 && proportional(caa[0], derived2));
        }
        // k = 9, 10 monomial lines
        auto check_mono = [&](const Scalar& w, int k, const std::string& expect,
                              const std::string& label) {
            auto cs = derive_block_conditions(w, k);
            rep.add(label, "conditions/k789", cs.size() == 1 && cs[0].str() == expect);
        };
        check_mono(S(-8), 9, "t[-8,-4]*t[-4,1]", "k=9 at -8");
        check_mono(S(0), 9, "t[0,5]*t[5,9]", "k=9 at 0");
        auto cm45 = derive_block_conditions(S(-4), 9);
        rep.add("k=9 at -4 (proportional)", "conditions/k789",
                cm45.size() == 1 &&
                    proportional(cm45[0], tp("t[-4,0]*t[0,5] - t[-4,1]*t[1,5]")));
        for (int i = 1; i <= 2; ++i) {
            Scalar ai(ConstantsTable::a(i));
            std::string tag = "a" + std::to_string(i);
            check_mono(ai, 9, "t[" + tag + "," + tag + "+6]*t[" + tag + "+6," + tag + "+9]",
                       "k=9 at " + tag);
            check_mono(ai - S(3), 9,
                       "t[" + tag + "-3," + tag + "]*t[" + tag + "," + tag + "+6]",
                       "k=9 at " + tag + "-3");
            check_mono(ai, 10, "t[" + tag + "," + tag + "+6]*t[" + tag + "+6," + tag + "+10]",
                       "k=10 at " + tag);
            check_mono(ai - S(4), 10,
                       "t[" + tag + "-4," + tag + "]*t[" + tag + "," + tag + "+6]",
                       "k=10 at " + tag + "-4 (resolves the truncated final line)");
        }
    }
    return rep;
}

ReportDocument verify_exemptions(const VerifyOptions& opt) {
    ReportDocument rep = make_report("verify-exemptions");
    rep.assume(kDimAssumption);

    auto no_conditions_at = [&](const Scalar& w, int k) {
        return derive_block_conditions(w, k).empty();
    };
    auto block_absent = [&](const Scalar& w, int k) {
        SymbolSpace sp{k, w + S(k)};
        BlockMap2 b2 = obstruction_blocks(build_infinitesimal(sp), 2);
        return b2.find(BlockKey{w, k}) == b2.end();
    };

    // i) k = 0
    rep.add("k=0: no obstruction block at all", "exemptions/i",
            block_absent(lam(), 0) && block_absent(S(0), 0));
    // ii) k = 1 away from 0
    rep.add("k=1 off 0: no obstruction block", "exemptions/ii",
            block_absent(lam(), 1) && block_absent(S(2), 1) && block_absent(S(-1), 1));
    // iii) k = 5 away from 0, -4 (including the singular-witness weight -2)
    rep.add("k=5 off {0,-4}: coboundary, no condition", "exemptions/iii",
            no_conditions_at(lam(), 5) && no_conditions_at(S(1), 5) && no_conditions_at(S(-2), 5));
    // iv) k = 6 away from the surd weights
    rep.add("k=6 off {a1,a2}: coboundary, no condition", "exemptions/iv",
            no_conditions_at(lam(), 6) && no_conditions_at(S(1), 6) && no_conditions_at(S(0), 6));
    // v) k = 7 at 0 and -6
    rep.add("k=7 at 0 and -6: coboundary, no condition", "exemptions/v",
            no_conditions_at(S(0), 7) && no_conditions_at(S(-6), 7));
    // vi) k = 8 at 2l = -7 +- sqrt(39)
    {
        QuadExt b1(rat_of(-7, 2), rat_of(1, 2), 39);
        QuadExt b2(rat_of(-7, 2), rat_of(-1, 2), 39);
        rep.add("k=8 at the sqrt(39) weights: coboundary, no condition", "exemptions/vi",
                no_conditions_at(Scalar(b1), 8) && no_conditions_at(Scalar(b2), 8));
    }
    // vii) k = 9 off the listed weights: no chains at all
    rep.add("k=9 off-list: no obstruction block", "exemptions/vii",
            block_absent(lam(), 9) && block_absent(S(1), 9) && block_absent(S(-2), 9));
    // viii) k = 10 off-list
    rep.add("k=10 off-list: no obstruction block", "exemptions/viii",
            block_absent(lam(), 10) && block_absent(S(0), 10) && block_absent(S(-4), 10));

    // block bound: no chain of spanning cocycles composes to shift >= 11;
    // resonance bookkeeping over the finite family list
    {
        bool none = true;
        struct Fam {
            int k;
            std::vector<Scalar> weights;  // empty = all weights
        };
        std::vector<Fam> fams = {{0, {}},         {1, {S(0)}}, {2, {}}, {3, {}}, {4, {}},
                                 {5, {S(0), S(-4)}},
                                 {6, {Scalar(ConstantsTable::a(1)), Scalar(ConstantsTable::a(2))}}};
        for (const Fam& f1 : fams) {
            for (const Fam& f2 : fams) {
                if (f1.k + f2.k < 11) continue;
                // need mu2 = mu1 + k2 with mu1 in f2-weights, mu2 in f1-weights;
                // both lists are finite here since k1 + k2 >= 11 forces both
                // factors resonance-bound
                for (const Scalar& w2 : f2.weights)
                    for (const Scalar& w1 : f1.weights)
                        if (w2 + S(f2.k) == w1) none = false;
            }
        }
        rep.add("no obstruction blocks beyond shift 10", "exemptions/block-bound", none,
                {{"statement",
                  "chains of spanning cocycles with total shift >= 11 require a resonant "
                  "factor at a weight no family provides; verified by finite enumeration"}});
    }
    return rep;
}

ReportDocument verify_properties(const VerifyOptions& opt) {
    ReportDocument rep = make_report("verify-properties");
    std::mt19937_64 rng(0xacce597ed);
    auto small = [&](long lo, long hi) {
        return static_cast<long>(lo + static_cast<long>(rng() % static_cast<uint64_t>(hi - lo + 1)));
    };
    auto rand_scalar = [&](bool with_l) {
        Scalar s(rat_of(small(-9, 9), small(1, 7)));
        if (with_l && small(0, 2) == 0) s = s * lam() + S(small(-5, 5));
        return s;
    };

    // d o d = 0 on 200 randomized cochains across shifts k <= 8, generic and
    // resonant weights
    {
        bool ok = true;
        std::string witness;
        for (int i = 0; i < 200 && ok; ++i) {
            int k = static_cast<int>(small(0, 8));
            Scalar w;
            bool generic = i % 2 == 0;
            switch (i % 5) {
                case 0: w = lam(); break;
                case 1: w = S(0); break;
                case 2: w = S(-4); break;
                case 3: w = Scalar(ConstantsTable::a(1)); break;
                default: w = S(small(-6, 6)); break;
            }
            Cochain1 b(w, k);
            for (auto& a : b.alpha) a = rand_scalar(generic && w == lam());
            if (!coboundary2(coboundary1(b)).is_zero()) {
                ok = false;
                witness = serialize(b);
            }
        }
        rep.add("d o d = 0 on 200 randomized cochains, shifts <= 8", "properties/dd", ok,
                witness.empty() ? nlohmann::ordered_json{}
                                : nlohmann::ordered_json{{"counterexample", witness}});
    }

    // cups of random cocycles are cocycles; cup with a coboundary is a
    // coboundary
    {
        bool ok = true;
        Scalar l = lam();
        std::vector<Cochain1> pool = {Catalog::c_diag(l),      Catalog::c_k2(l),
                                      Catalog::c_k3(l),        Catalog::c_k4(l),
                                      Catalog::c_diag(l + S(2)), Catalog::c_k2(l + S(2)),
                                      Catalog::c_k3(l + S(3)), Catalog::c_k4(l + S(4))};
        for (int i = 0; i < 60 && ok; ++i) {
            const Cochain1& c1 = pool[small(0, pool.size() - 1)];
            const Cochain1& c2 = pool[small(0, pool.size() - 1)];
            if (!cup_chains(c1, c2)) continue;
            Cochain1 z1 = c1.scaled(S(small(-4, 4))) +
                          coboundary0(c1.weight, c1.shift, S(small(-3, 3)));
            Cochain1 z2 = c2.scaled(S(small(-4, 4))) +
                          coboundary0(c2.weight, c2.shift, S(small(-3, 3)));
            ok = coboundary2(cup(z1, z2)).is_zero();
        }
        rep.add("cup of random cocycles is a cocycle", "properties/cup", ok);
        // cup with a pure coboundary lands in the coboundaries
        bool ok2 = true;
        for (int i = 0; i < 10 && ok2; ++i) {
            Cochain1 db = coboundary0(l, 2, S(small(1, 5)));
            Cochain2 c = cup(Catalog::c_k2(l + S(2)), db);
            ok2 = decompose(c, {}).ok;
        }
        rep.add("cup with a coboundary is a coboundary", "properties/cup", ok2);
    }

    // Jacobi identity on 100 random vector-field triples
    {
        bool ok = true;
        auto rnd_poly = [&] {
            std::vector<QuadExt> c;
            int deg = static_cast<int>(small(0, 4));
            for (int i = 0; i <= deg; ++i) c.push_back(QuadExt(rat_of(small(-9, 9), small(1, 5))));
            return UPoly(std::move(c));
        };
        for (int i = 0; i < 100 && ok; ++i) {
            ConcreteVectorField X{rnd_poly()}, Y{rnd_poly()}, Z{rnd_poly()};
            UPoly j = bracket(X, bracket(Y, Z)).coeffs + bracket(Y, bracket(Z, X)).coeffs +
                      bracket(Z, bracket(X, Y)).coeffs;
            ok = j.is_zero();
        }
        rep.add("Jacobi identity on 100 random triples", "properties/jacobi", ok);
    }
    return rep;
}

ReportDocument verify_oracle_equivalence(const VerifyOptions& opt) {
    ReportDocument rep = make_report("verify-oracle");
    std::vector<QuadExt> samples = {QuadExt(rat_of(7, 3)), QuadExt(rat_of(-11, 5))};

    // table cocycles, concretely, at samples and pinned weights
    for (const auto& e : table1_entries()) {
        std::vector<QuadExt> ws = e.generic ? samples : std::vector<QuadExt>{e.c.weight.constant()};
        for (const QuadExt& w : ws) {
            Cochain1 spec = e.generic ? e.c.specialize(w) : e.c;
            int bound = spec.order() + 2;
            bool ok = true;
            for (int a = 0; a <= bound && ok; ++a)
                for (int b = 0; b <= bound && ok; ++b)
                    for (int f = 0; f <= bound && ok; ++f)
                        ok = concrete_coboundary1(spec, w, UPoly::monomial(QuadExt(1), a),
                                                  UPoly::monomial(QuadExt(1), b),
                                                  UPoly::monomial(QuadExt(1), f))
                                 .is_zero();
            rep.add("concrete cocycle check " + e.key + " at " + w.str(), "oracle/table", ok,
                    {{"bound", bound}});
        }
    }

    // cup identities on monomials: symbolic value vs concrete composition
    {
        Scalar l = lam();
        struct Item {
            std::string name;
            Cochain1 c1, c2;
        };
        std::vector<Item> items = {
            {"[[C[1,1],C[0,1]]]", Catalog::c_diag(S(1)), Catalog::c01()},
            {"[[C[l,l+2],C[l,l]]]", Catalog::c_k2(l), Catalog::c_diag(l)},
            {"[[C[l+2,l+4],C[l,l+2]]]", Catalog::c_k2(l + S(2)), Catalog::c_k2(l)},
            {"[[C[0,5],C[0,0]]]", Catalog::c05(), Catalog::c_diag(S(0))},
            {"[[C[a1+3,a1+6],C[a1,a1+3]]]", Catalog::c_k3(Scalar(ConstantsTable::a(1)) + S(3)),
             Catalog::c_k3(Scalar(ConstantsTable::a(1)))},
        };
        for (const auto& it : items) {
            QuadExt w0 = it.c2.weight.is_constant() ? it.c2.weight.constant() : samples[0];
            // specialize both factors consistently in the formal weight
            Cochain1 c1s = it.c1, c2s = it.c2;
            if (!it.c2.weight.is_constant() || !it.c1.weight.is_constant()) {
                c1s = it.c1.specialize(w0);
                c2s = it.c2.specialize(w0);
            }
            Cochain2 sym = cup(c1s, c2s);
            int bound = std::min(12, sym.shift + 4);
            auto fail = cross_check_equal2(
                sym.body, w0, bound, [&](const UPoly& X, const UPoly& Y, const UPoly& f) {
                    return concrete_cup(c1s, c2s, w0, X, Y, f);
                });
            rep.add("concrete cup check " + it.name, "oracle/cup", !fail.has_value(),
                    {{"bound", bound}});
        }
    }

    // the (0,5) decomposition identity, concretely: cup = 30 Omega - Omegatilde + d(witness)
    {
        std::vector<Cochain2> basis = {Catalog::omega05_cup(), Catalog::omega05_tilde_cup()};
        Cochain2 target = cup(Catalog::c05(), Catalog::c_diag(S(0)));
        ClassDecomposition dec = decompose(target, basis);
        bool ok = dec.ok && dec.coords[0] == S(30) && dec.coords[1] == S(-1);
        QuadExt w0(0);
        if (ok) {
            for (int a = 0; a <= 12 && ok; ++a)
                for (int b = 0; b <= 12 && ok; ++b) {
                    UPoly X = UPoly::monomial(QuadExt(1), a);
                    UPoly Y = UPoly::monomial(QuadExt(1), b);
                    UPoly f = UPoly::monomial(QuadExt(1), 3);
                    UPoly lhs = concrete_cup(Catalog::c05(), Catalog::c_diag(S(0)), w0, X, Y, f);
                    UPoly rhs = eval_jet2(basis[0].body, w0, X, Y, f).scaled(QuadExt(30)) -
                                eval_jet2(basis[1].body, w0, X, Y, f) +
                                concrete_coboundary1(dec.witness, w0, X, Y, f);
                    ok = lhs == rhs;
                }
        }
        rep.add("concrete decomposition identity at (0,5), coordinates (30,-1)", "oracle/witness",
                ok, {{"bound", 12}});
    }
    return rep;
}

ReportDocument verify_shift_invariance(const VerifyOptions& opt) {
    ReportDocument rep = make_report("shift-invariance");
    struct Item {
        int m, n;
    };
    std::vector<Item> items = {{2, 3}, {3, 4}, {3, 3}, {4, 5}};
    std::vector<CheckRecord> recs(items.size());
    parallel_indexed(items.size(), worker_count(opt), [&](size_t i) {
        ShiftInvarianceReport r =
            shift_invariance_check(items[i].m, items[i].n, {rat_of(7, 3), rat_of(-11, 5)});
        recs[i] = {"S^" + std::to_string(items[i].m) + " at shifted weight " +
                       std::to_string(items[i].n),
                   "shift-invariance", r.pass ? "pass" : "fail", {{"detail", r.detail}}};
    });
    for (auto& r : recs) rep.checks.push_back(std::move(r));
    // a single-component space has no conditions at all
    SymbolSpace s0{0, lam()};
    rep.add("S^0 at the formal weight: no conditions", "shift-invariance",
            extract_conditions(obstruction_blocks(build_infinitesimal(s0), 2)).conditions.empty());
    return rep;
}

ReportDocument report_derive_conditions(const SymbolSpace& space, const VerifyOptions& opt) {
    ReportDocument rep = make_report("derive-conditions --space " + space.str());
    rep.assume(kDimAssumption);
    DeformationSeries series = build_infinitesimal(space);
    nlohmann::ordered_json params = nlohmann::ordered_json::array();
    for (const auto& p : space_params(space)) params.push_back(p.str());
    rep.info("parameters", "space", {{"list", params}});
    BlockMap2 b2 = obstruction_blocks(series, 2);
    ConditionExtraction ex = extract_conditions(b2);
    if (!ex.ok) {
        rep.add("extraction", "space", false, {{"diagnostic", ex.diagnostic}});
        return rep;
    }
    for (const BlockReport& br : ex.blocks) {
        nlohmann::ordered_json data;
        nlohmann::ordered_json omega = nlohmann::ordered_json::array();
        for (size_t i = 0; i < br.basis_keys.size(); ++i)
            omega.push_back(br.basis_keys[i] + " : " + br.omega1[i].str());
        data["omega1"] = omega;
        nlohmann::ordered_json wit = nlohmann::ordered_json::array();
        for (const auto& [m, w] : br.witnesses)
            wit.push_back(tmonomial_str(m) + " -> " + serialize(w));
        if (!wit.empty()) data["witnesses"] = wit;
        rep.info("block " + br.block.str(), "blocks", data);
    }
    rep.info("conditions (miniversal ideal generators)", "conditions",
             {{"list", tpoly_list(ex.conditions)}});
    rep.add("every obstruction block decomposed", "conditions", true);
    return rep;
}

ReportDocument report_analyze(const SymbolSpace& space, int order, const VerifyOptions& opt) {
    ReportDocument rep =
        make_report("analyze --space " + space.str() + " --order " + std::to_string(order));
    rep.assume(kDimAssumption);
    AnalysisReport ar = analyze(space, order);
    rep.info("conditions", "order2", {{"list", tpoly_list(ar.order2.conditions)}});
    if (!ar.ok) {
        rep.add("analysis", "order2", false, {{"diagnostic", ar.diagnostic}});
        return rep;
    }
    nlohmann::ordered_json l2;
    for (const auto& [bk, t] : ar.l2.verbatim) l2["closed-form " + bk.str()] = t.str();
    for (const auto& [bk, t] : ar.l2.completion) l2["completion " + bk.str()] = t.str();
    if (!ar.l2.notes.empty()) {
        nlohmann::ordered_json notes = nlohmann::ordered_json::array();
        for (const auto& n : ar.l2.notes) notes.push_back(n);
        l2["notes"] = notes;
    }
    rep.info("second-order term", "L2", l2);
    rep.add("L2 (with completions) solves the second-order equation modulo the ideal", "L2",
            ar.l2.full_solves);
    for (const OrderReport& o : ar.higher) {
        nlohmann::ordered_json data;
        data["rhs zero modulo ideal"] = o.rhs_zero_mod_ideal;
        if (!o.obstruction_polys.empty())
            data["obstruction polynomials"] = tpoly_list(o.obstruction_polys);
        if (!o.new_conditions.empty()) data["new conditions"] = tpoly_list(o.new_conditions);
        nlohmann::ordered_json terms;
        for (const auto& [bk, t] : o.term) terms[bk.str()] = t.str();
        if (!terms.empty()) data["term"] = terms;
        rep.info("order " + std::to_string(o.order), "higher", data);
        rep.add("order " + std::to_string(o.order) + " obstruction resolvable", "higher",
                !o.genuine_obstruction,
                o.genuine_obstruction ? nlohmann::ordered_json{{"diagnostic", o.diagnostic}}
                                      : nlohmann::ordered_json{});
    }
    rep.add("termination detected", "termination", ar.terminated,
            {{"order", ar.termination_order}});
    nlohmann::ordered_json branches = nlohmann::ordered_json::array();
    for (const auto& b : ar.branches.branches) branches.push_back(b.str());
    rep.info("branches", "branches",
             {{"count", ar.branches.branches.size()},
              {"all recognized", ar.branches.all_recognized},
              {"list", branches}});
    return rep;
}

ReportDocument report_check(const SymbolSpace& space, const std::map<ParamKey, QuadExt>& values,
                            int order, int degree_bound, const VerifyOptions& opt) {
    ReportDocument rep = make_report("check --space " + space.str());
    nlohmann::ordered_json assigned;
    for (const auto& [k, v] : values) assigned[k.str()] = v.str();
    rep.info("assignment", "check", {{"values", assigned}});
    PointCheck pc = check_deformation_at_point(space, values, order, degree_bound);
    rep.add("homomorphism defect vanishes through order " + std::to_string(order), "check",
            pc.pass,
            pc.pass ? nlohmann::ordered_json{{"concrete evaluations", pc.concrete_evaluations}}
                    : nlohmann::ordered_json{{"fail order", pc.fail_order},
                                             {"fail block", pc.fail_block},
                                             {"detail", pc.detail}});
    return rep;
}

ReportDocument report_catalog(const std::string& key) {
    ReportDocument rep = make_report(key.empty() ? "catalog" : "catalog --key " + key);
    Catalog cat;
    for (const auto& e : cat.entries()) {
        if (!key.empty() && e.key != key) continue;
        nlohmann::ordered_json data;
        data["kind"] = e.kind;
        if (e.c1) {
            Cochain1 c = e.c1();
            data["value"] = c.str();
            data["serialized"] = serialize(c);
        } else if (e.c2) {
            Cochain2 c = e.c2();
            data["value"] = c.str();
            data["serialized"] = serialize(c);
        }
        rep.info(e.key, "catalog", data);
    }
    if (!key.empty() && rep.checks.empty())
        rep.add("lookup " + key, "catalog", false, {{"diagnostic", "no such catalog entry"}});
    return rep;
}

ReportDocument verify_examples(const VerifyOptions& opt) {
    ReportDocument rep = make_report("verify-examples");
    rep.assume(kDimAssumption);

    // ---- S^2_3 ----
    {
        AnalysisReport ar = analyze(SymbolSpace{2, S(3)}, 3);
        bool conds = ar.order2.conditions ==
                     std::vector<TPoly>{tp("t[1,1]*t[1,3] - t[1,3]*t[3,3]")};
        rep.add("S^2_3: single condition", "examples/S2_3", ar.ok && conds);
        rep.add("S^2_3: two branches, three free parameters each", "examples/S2_3",
                ar.branches.branches.size() == 2 &&
                    ar.branches.branches[0].free_params == 3 &&
                    ar.branches.branches[1].free_params == 3);
        rep.add("S^2_3: second-order term vanishes; terminates at order 1", "examples/S2_3",
                ar.l2.full().empty() && ar.terminated && ar.termination_order == 1);
        // concrete deformation on the equal-diagonal branch
        std::map<ParamKey, QuadExt> pt{{ParamKey{S(1), 0, false}, QuadExt(1)},
                                       {ParamKey{S(2), 0, false}, QuadExt(2)},
                                       {ParamKey{S(3), 0, false}, QuadExt(1)},
                                       {ParamKey{S(1), 2, false}, QuadExt(5)}};
        rep.add("S^2_3: concrete deformation on the diagonal branch", "examples/S2_3",
                check_deformation_at_point(SymbolSpace{2, S(3)}, pt, 3, 6).pass);
        std::map<ParamKey, QuadExt> bad{{ParamKey{S(1), 0, false}, QuadExt(1)},
                                        {ParamKey{S(1), 2, false}, QuadExt(1)}};
        PointCheck pb = check_deformation_at_point(SymbolSpace{2, S(3)}, bad, 2, 5);
        rep.add("S^2_3: violating the condition fails in block (1,3)", "examples/S2_3",
                !pb.pass && pb.fail_block == "(1,3)" && pb.fail_order == 2);
    }

    // ---- S^3_4 ----
    {
        AnalysisReport ar = analyze(SymbolSpace{3, S(4)}, 3);
        std::vector<TPoly> expect = {tp("t[1,1]*t[1,3] - t[1,3]*t[3,3]"),
                                     tp("t[1,1]*t[1,4] - t[1,4]*t[4,4]"),
                                     tp("t[2,2]*t[2,4] - t[2,4]*t[4,4]")};
        rep.add("S^3_4: the three conditions", "examples/S3_4",
                ar.ok && span_equal(ar.order2.conditions, expect) &&
                    ar.order2.conditions.size() == 3);
        rep.add("S^3_4: eight branches, four free parameters", "examples/S3_4",
                ar.branches.branches.size() == 8 &&
                    std::all_of(ar.branches.branches.begin(), ar.branches.branches.end(),
                                [](const Branch& b) { return b.free_params == 4; }));
        rep.add("S^3_4: terminates at order 1 (equivalent to infinitesimal)", "examples/S3_4",
                ar.terminated && ar.termination_order == 1);
    }

    // ---- S^3_3 ----
    {
        AnalysisReport ar = analyze(SymbolSpace{3, S(3)}, 3);
        std::vector<TPoly> classical = {
            tp("t[0,0]*t[0,1] - t[0,1]*t[1,1] - ttilde[0,1]*t[1,1]"),
            tp("t[0,0]*t[0,2] - t[0,2]*t[2,2]"), tp("t[0,0]*t[0,3] - t[0,3]*t[3,3]")};
        std::set<std::string> got;
        for (const auto& c : ar.order2.conditions) got.insert(c.str());
        bool first_two = got.count(classical[0].str()) && got.count(classical[1].str());
        rep.add("S^3_3: classical miniversal generators reproduce as stated", "examples/S3_3",
                first_two && got.count(classical[2].str()),
                {{"derived", tpoly_list(ar.order2.conditions)},
                 {"note",
                  "the recomputation restores the omitted t[1,3] direction, corrects the "
                  "(0,3) generator by +(1/2) ttilde[0,1] t[1,3], and finds third-order "
                  "relations; the classical three-generator list is not reproduced verbatim"}});
        rep.add("S^3_3: classical k=1 and k=2 generators appear exactly", "examples/S3_3",
                first_two);
        bool corrected = got.count("2*t[0,0]*t[0,3] + ttilde[0,1]*t[1,3] - 2*t[0,3]*t[3,3]") &&
                         got.count("t[1,1]*t[1,3] - t[1,3]*t[3,3]");
        rep.add("S^3_3: corrected (0,3) generator and restored t[1,3] relation",
                "examples/S3_3", corrected);
        rep.add("S^3_3: completed analysis finds third-order relations", "examples/S3_3",
                !ar.higher.empty() && !ar.higher[0].new_conditions.empty(),
                {{"order-3 conditions",
                  ar.higher.empty() ? nlohmann::ordered_json{}
                                    : tpoly_list(ar.higher[0].new_conditions)}});
    }

    // ---- S^4_5 through order 4 ----
    {
        AnalysisReport ar = analyze(SymbolSpace{4, S(5)}, 4);
        std::vector<TPoly> cond5 = {
            tp("t[1,1]*t[1,3] - t[1,3]*t[3,3]"), tp("t[2,2]*t[2,4] - t[2,4]*t[4,4]"),
            tp("t[3,3]*t[3,5] - t[3,5]*t[5,5]"), tp("t[1,1]*t[1,4] - t[1,4]*t[4,4]"),
            tp("t[2,2]*t[2,5] - t[2,5]*t[5,5]"), tp("t[1,1]*t[1,5] - t[1,5]*t[5,5]")};
        bool conds = ar.order2.conditions.size() == 6 && span_equal(ar.order2.conditions, cond5);
        rep.add("S^4_5: the six second-order conditions", "examples/S4_5", ar.ok && conds);

        ParamKey t11{S(1), 0, false}, t13{S(1), 2, false}, t35{S(3), 2, false};
        TPoly t13t35 = TPoly::var(t13) * TPoly::var(t35);
        auto it = ar.l2.verbatim.find(BlockKey{S(1), 4});
        bool l2ok = it != ar.l2.verbatim.end() && it->second.alpha[1] == -t13t35 &&
                    it->second.alpha[0].is_zero();
        rep.add("S^4_5: L2 on the (1,5) block equals -t[1,3] t[3,5] X^(4) f'", "examples/S4_5",
                l2ok);
        bool cond6 = false;
        std::string cond6_str = "t[1,1]*t[1,3]*t[3,5] - t[1,3]*t[3,5]*t[5,5]";
        if (!ar.higher.empty())
            for (const TPoly& p : ar.higher[0].obstruction_polys)
                cond6 = cond6 || p.str() == cond6_str;
        rep.add("S^4_5: order-3 obstruction polynomial is the classical third condition",
                "examples/S4_5", cond6,
                {{"note", "already implied by the order-2 ideal (membership verified)"}});
        bool l3ok = false;
        if (!ar.higher.empty()) {
            auto it3 = ar.higher[0].term.find(BlockKey{S(1), 4});
            l3ok = it3 != ar.higher[0].term.end() &&
                   it3->second.alpha[0] == (TPoly::var(t11) * t13t35).scaled(S(1, 5));
            if (l3ok)
                for (size_t j = 1; j < it3->second.alpha.size(); ++j)
                    l3ok = l3ok && it3->second.alpha[j].is_zero();
        }
        rep.add("S^4_5: L3 equals (1/5) t[1,1] t[1,3] t[3,5] X^(5) f", "examples/S4_5", l3ok);
        rep.add("S^4_5: order-4 right-hand side vanishes modulo the ideal", "examples/S4_5",
                ar.higher.size() >= 2 && ar.higher[1].rhs_zero_mod_ideal);
        rep.add("S^4_5: terminates at order 3", "examples/S4_5",
                ar.terminated && ar.termination_order == 3);
        bool seven = false;
        for (const auto& b : ar.branches.branches) seven = seven || b.free_params == 7;
        rep.add("S^4_5: the all-diagonal branch has seven free parameters", "examples/S4_5",
                seven);
    }
    return rep;
}

}  // namespace vectcoh
