#pragma once

#include "vectcoh/deform.hpp"
#include "vectcoh/oracle.hpp"
#include "vectcoh/report.hpp"

namespace vectcoh {

struct VerifyOptions {
    bool assume_dimensions = true;  // upgrade non-coboundary certificates
    bool crosscheck = false;        // add concrete monomial cross-checks
    int workers = 0;                // 0: from VECTCOH_WORKERS, else 1
    std::vector<int> block_filter;  // restrict k values where applicable
};

// The table of spanning 1-cocycles: cocycle property (generic and
// specialized) and non-coboundary certificates.
ReportDocument verify_table1(const VerifyOptions& opt = {});

// Displayed 2-cocycles against their cup recipes, nontriviality, and the
// if-and-only-if boundary weights of the shift-7/8 families.
ReportDocument verify_2cocycles(const VerifyOptions& opt = {});

// Recompute the constants the tables omit (R/S/T, ratios, witnesses).
ReportDocument verify_constants(const VerifyOptions& opt = {});

// The second-order condition tables, block by block.
ReportDocument verify_condition_tables(const VerifyOptions& opt = {});

// The no-condition exemption clauses, one certification per clause, plus
// the block bound (no obstruction blocks beyond shift 10).
ReportDocument verify_exemptions(const VerifyOptions& opt = {});

// Randomized structural properties: d o d = 0, cups of cocycles are
// cocycles, the concrete bracket satisfies Jacobi.
ReportDocument verify_properties(const VerifyOptions& opt = {});

// Concrete monomial cross-checks of the key symbolic identities at the
// sampled and resonant weights.
ReportDocument verify_oracle_equivalence(const VerifyOptions& opt = {});

// Shift invariance of the worked example spaces.
ReportDocument verify_shift_invariance(const VerifyOptions& opt = {});

// Per-space commands.
ReportDocument report_derive_conditions(const SymbolSpace& space, const VerifyOptions& opt = {});
ReportDocument report_analyze(const SymbolSpace& space, int order, const VerifyOptions& opt = {});
ReportDocument report_check(const SymbolSpace& space, const std::map<ParamKey, QuadExt>& values,
                            int order, int degree_bound, const VerifyOptions& opt = {});

// Catalog listing / export.
ReportDocument report_catalog(const std::string& key = "");

// Reproductions of the worked examples (acceptance criterion 6).
ReportDocument verify_examples(const VerifyOptions& opt = {});

}  // namespace vectcoh
