// Acceptance suite: runs every acceptance criterion of the verification
// engine at exact tolerance and prints one pass/fail line per criterion.
//
// Three criteria contain legs that reproduce statements of the source
// tables which the recomputation PROVES wrong (a symmetric composition
// that vanishes identically, five mistranscribed witness displays, and
// two tabulated constant pairs that do not reproduce).  Those legs are
// required to fail, with the corrected values published in the reports;
// everything else is required to pass.  Default exit code: 0 when the
// outcome matches that documented expectation exactly, 1 otherwise.
// With --strict, any failing leg gives exit code 1.
#include <cstring>
#include <iostream>
#include <set>

#include "vectcoh/verify.hpp"

using namespace vectcoh;

namespace {

Scalar S(long n, long d = 1) { return Scalar(rat_of(n, d)); }
Scalar lam() { return Scalar::lambda(); }

struct CriterionResult {
    int number;
    std::string title;
    size_t passed = 0, failed = 0;
    std::vector<std::string> unexpected_failures;   // should have passed
    std::vector<std::string> missing_failures;      // documented legs that passed
    std::vector<std::string> documented_failures;   // expected and observed

    bool fully_passed() const { return failed == 0; }
    bool as_documented() const {
        return unexpected_failures.empty() && missing_failures.empty();
    }
};

CriterionResult grade(int number, const std::string& title, const ReportDocument& rep,
                      const std::set<std::string>& documented_fail_ids) {
    CriterionResult r;
    r.number = number;
    r.title = title;
    std::set<std::string> seen_documented;
    for (const auto& c : rep.checks) {
        if (c.status == "info") continue;
        bool doc = documented_fail_ids.count(c.id) > 0;
        if (c.status == "pass") {
            ++r.passed;
            if (doc) r.missing_failures.push_back(c.id);
        } else {
            ++r.failed;
            if (doc) {
                r.documented_failures.push_back(c.id);
                seen_documented.insert(c.id);
            } else {
                r.unexpected_failures.push_back(c.id);
            }
        }
    }
    for (const auto& id : documented_fail_ids)
        if (!seen_documented.count(id) &&
            std::find(r.missing_failures.begin(), r.missing_failures.end(), id) ==
                r.missing_failures.end())
            r.missing_failures.push_back(id + " (check not found)");
    return r;
}

void print_result(const CriterionResult& r) {
    std::cout << "criterion " << r.number << " (" << r.title << "): "
              << (r.fully_passed() ? "PASS" : "FAIL") << " — " << r.passed << " passed, "
              << r.failed << " failed";
    if (!r.documented_failures.empty())
        std::cout << " [" << r.documented_failures.size()
                  << " failing leg(s) are documented source discrepancies]";
    std::cout << "\n";
    for (const auto& id : r.documented_failures)
        std::cout << "    documented: " << id << "\n";
    for (const auto& id : r.unexpected_failures) std::cout << "    UNEXPECTED FAIL: " << id << "\n";
    for (const auto& id : r.missing_failures)
        std::cout << "    EXPECTED-FAIL LEG PASSED (update ledger): " << id << "\n";
}

// Criterion 3 is assembled here: re-derive every witness display of the
// second-order analysis via the solver alone and compare.
ReportDocument criterion3_report() {
    ReportDocument rep;
    rep.command = "acceptance criterion 3";
    rep.catalog_hash = Catalog().hash();
    Scalar l = lam();

    {
        Cochain2 t = cup(Catalog::c_k2(l + S(2)), Catalog::c_k2(l));
        ClassDecomposition d = decompose(t, {});
        rep.add("witness b[l,l+4] re-derived", "criterion3",
                d.ok && d.reconstructs(t, {}) && d.witness_matches_mod_kernel(Catalog::b_k4(l)));
    }
    {
        std::vector<Cochain2> basis = {Catalog::omega05_cup(), Catalog::omega05_tilde_cup()};
        Cochain2 t = cup(Catalog::c05(), Catalog::c_diag(S(0)));
        ClassDecomposition d = decompose(t, basis);
        rep.add("decomposition of [[C[0,5],C[0,0]]]: coordinates (30,-1)", "criterion3",
                d.ok && d.coords[0] == S(30) && d.coords[1] == S(-1) && d.reconstructs(t, basis));
        rep.add("witness bbar[0,5] re-derived", "criterion3",
                d.ok && d.witness_matches_mod_kernel(Catalog::b05_bar()));
    }
    {
        std::vector<Cochain2> b04 = {Catalog::omega_k4(S(0))};
        ClassDecomposition d = decompose(cup(Catalog::c_k3(S(1)), Catalog::c01_tilde()), b04);
        rep.add("coordinate 1/10 of the tilde chain at (0,4)", "criterion3",
                d.ok && d.coords[0] == S(1, 10));
        rep.add("witness btilde[0,4] display matches", "criterion3",
                d.ok && d.witness_matches_mod_kernel(Catalog::b04_tilde()),
                {{"derived", d.ok ? d.witness.str() : "-"}});
        ClassDecomposition dz = decompose(cup(Catalog::c_k3(S(1)), Catalog::c01()), b04);
        rep.add("the plain chain at (0,4) is a pure coboundary", "criterion3",
                dz.ok && dz.coords[0].is_zero());
    }
    {
        std::vector<Cochain2> bm3 = {Catalog::omega_k4(S(-3))};
        ClassDecomposition d = decompose(cup(Catalog::c01_tilde(), Catalog::c_k3(S(-3))), bm3);
        rep.add("coordinate -1/10 of the tilde chain at (-3,1)", "criterion3",
                d.ok && d.coords[0] == S(-1, 10));
        rep.add("witness btilde[-3,1] display matches", "criterion3",
                d.ok && d.witness_matches_mod_kernel(Catalog::bm31_tilde()),
                {{"derived", d.ok ? d.witness.str() : "-"}});
    }
    {
        Cochain2 t = cup(Catalog::c_k3(l + S(2)), Catalog::c_k2(l));
        ClassDecomposition d = decompose(t, {});
        rep.add("witness b[l,l+5] re-derived", "criterion3",
                d.ok && d.witness_matches_mod_kernel(Catalog::b_k5(l)));
        Cochain2 t2 = cup(Catalog::c_k2(l + S(3)), Catalog::c_k3(l));
        ClassDecomposition d2 = decompose(t2, {});
        rep.add("witness btilde[l,l+5] re-derived", "criterion3",
                d2.ok && d2.witness_matches_mod_kernel(Catalog::b_k5_tilde(l)));
    }
    {
        ClassDecomposition d = decompose(cup(Catalog::c_k3(S(0)), Catalog::c_k2(S(-2))), {});
        rep.add("witness b[-2,3] display matches", "criterion3",
                d.ok && d.witness_matches_mod_kernel(Catalog::bm23()),
                {{"derived", d.ok ? d.witness.str() : "-"}});
        ClassDecomposition d2 = decompose(cup(Catalog::c_k2(S(1)), Catalog::c_k3(S(-2))), {});
        rep.add("witness btilde[-2,3] display matches", "criterion3",
                d2.ok && d2.witness_matches_mod_kernel(Catalog::bm23_tilde()),
                {{"derived", d2.ok ? d2.witness.str() : "-"}});
    }
    {
        std::vector<Cochain2> basis = {Catalog::omega05_cup(), Catalog::omega05_tilde_cup()};
        ClassDecomposition d = decompose(cup(Catalog::c_k4(S(1)), Catalog::c01()), basis);
        rep.add("coordinates (-12, 0) of the plain chain at (0,5)", "criterion3",
                d.ok && d.coords[0] == S(-12) && d.coords[1].is_zero());
        rep.add("witness b[0,5] display matches", "criterion3",
                d.ok && d.witness_matches_mod_kernel(Catalog::b05()),
                {{"derived", d.ok ? d.witness.str() : "-"}});
        ClassDecomposition dt = decompose(cup(Catalog::c_k4(S(1)), Catalog::c01_tilde()), basis);
        rep.add("coordinates (-12, 2/5) of the tilde chain at (0,5)", "criterion3",
                dt.ok && dt.coords[0] == S(-12) && dt.coords[1] == S(2, 5));
        rep.add("witness btilde[0,5] re-derived", "criterion3",
                dt.ok && dt.witness_matches_mod_kernel(Catalog::b05_tilde()));
    }
    {
        std::vector<Cochain2> basis = {Catalog::omega_m41_cup(), Catalog::omega_m41_tilde_cup()};
        ClassDecomposition d1 = decompose(cup(Catalog::cm41(), Catalog::c_diag(S(-4))), basis);
        rep.add("decomposition at (-4,1): coordinates (30,-1) and bbar[-4,1]", "criterion3",
                d1.ok && d1.coords[0] == S(30) && d1.coords[1] == S(-1) &&
                    d1.witness_matches_mod_kernel(Catalog::bm41_bar()));
        ClassDecomposition d3 = decompose(cup(Catalog::c01(), Catalog::c_k4(S(-4))), basis);
        rep.add("witness b[-4,1] re-derived", "criterion3",
                d3.ok && d3.coords[0] == S(-12) && d3.coords[1].is_zero() &&
                    d3.witness_matches_mod_kernel(Catalog::bm41()));
        ClassDecomposition d4 = decompose(cup(Catalog::c01_tilde(), Catalog::c_k4(S(-4))), basis);
        rep.add("witness btilde[-4,1] re-derived", "criterion3",
                d4.ok && d4.coords[0] == S(-12) && d4.coords[1] == S(2, 5) &&
                    d4.witness_matches_mod_kernel(Catalog::bm41_tilde()));
    }
    {
        ConstantsReport cr = recompute_omitted_constants();
        rep.add("shift-6 witness displays match under some reading", "criterion3",
                cr.k6_prefactor_note.find("no reading matches") == std::string::npos,
                {{"verdict", cr.k6_prefactor_note}});
        rep.add("resonant shift-6 witnesses proportional to X^(5)f''", "criterion3",
                cr.k6_proportional);
        rep.add("derived decompositions reconstruct exactly", "criterion3",
                cr.reconstructions_ok);
    }
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    bool strict = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--strict") == 0) strict = true;

    VerifyOptions opt;
    std::vector<CriterionResult> results;

    results.push_back(grade(1, "cocycle table", verify_table1(opt), {}));

    results.push_back(grade(2, "cup-product identities", verify_2cocycles(opt),
                            {"[[Ctilde[0,1],C[0,0]]] = Omega[0,1]",
                             "Omega[l,l+3] display = cup modulo coboundary",
                             "cocycle Omega[l,l+3]"}));

    results.push_back(grade(
        3, "coboundary witnesses re-derived", criterion3_report(),
        {"witness btilde[0,4] display matches", "witness btilde[-3,1] display matches",
         "witness b[-2,3] display matches", "witness btilde[-2,3] display matches",
         "witness b[0,5] display matches", "shift-6 witness displays match under some reading",
         "resonant shift-6 witnesses proportional to X^(5)f''"}));

    results.push_back(grade(4, "integrability condition tables", verify_condition_tables(opt),
                            {"k=8 at a1-2 vs tabulated eta/theta",
                             "k=8 at a2-2 vs tabulated eta/theta",
                             "k=8 at a1 vs tabulated mu/nu", "k=8 at a2 vs tabulated mu/nu",
                             "k=4 line at -3 (as tabulated)", "k=4 line at 0 (as tabulated)"}));

    results.push_back(grade(5, "exemption clauses and block bound", verify_exemptions(opt), {}));

    results.push_back(grade(6, "worked example spaces", verify_examples(opt),
                            {"S^3_3: classical miniversal generators reproduce as stated"}));

    results.push_back(grade(7, "oracle equivalence", verify_oracle_equivalence(opt), {}));

    results.push_back(grade(8, "property suites", verify_properties(opt), {}));

    results.push_back(grade(9, "shift invariance", verify_shift_invariance(opt), {}));

    bool all_documented = true, all_pass = true;
    for (const auto& r : results) {
        print_result(r);
        all_documented = all_documented && r.as_documented();
        all_pass = all_pass && r.fully_passed();
    }
    size_t full = 0;
    for (const auto& r : results)
        if (r.fully_passed()) ++full;
    std::cout << "acceptance: " << full << "/" << results.size()
              << " criteria fully pass; the remaining legs carry documented source "
                 "discrepancies with corrected values published\n";
    std::cout << "behavior matches documentation: " << (all_documented ? "yes" : "NO") << "\n";
    if (strict) return all_pass ? 0 : 1;
    return all_documented ? 0 : 1;
}
