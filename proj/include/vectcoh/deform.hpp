#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vectcoh/solver.hpp"
#include "vectcoh/tpoly.hpp"

namespace vectcoh {

// Symbol space S^n_delta = direct sum of F_{delta-j}, j = 0..n.
struct SymbolSpace {
    int n = 0;
    Scalar delta;

    std::vector<Scalar> component_weights() const;  // ascending: delta-n .. delta
    std::string str() const;
    static SymbolSpace parse(const std::string& text);  // "n=4,delta=5"
};

struct BlockKey {
    Scalar lo;
    int shift = 0;

    Scalar hi() const { return lo + Scalar(shift); }
    std::string str() const { return "(" + weight_str(lo) + "," + weight_str(hi()) + ")"; }
    bool operator<(const BlockKey& o) const {
        if (shift != o.shift) return shift < o.shift;
        return lo < o.lo;
    }
    bool operator==(const BlockKey& o) const { return shift == o.shift && lo == o.lo; }
};

// 1-cochain with polynomial-in-t coefficients, canonical basis as Cochain1.
struct TCochain1 {
    Scalar weight;
    int shift = 0;
    std::vector<TPoly> alpha;  // size shift + 2

    TCochain1() = default;
    TCochain1(Scalar w, int k) : weight(std::move(w)), shift(k), alpha(k + 2) {}
    bool is_zero() const;
    void add(const TMonomial& m, const Cochain1& c);
    Cochain1 coefficient(const TMonomial& m) const;
    std::vector<TMonomial> monomials() const;
    // substitute concrete parameter values
    Cochain1 at_point(const std::map<ParamKey, QuadExt>& values) const;
    std::string str() const;
};

// 2-cochain with polynomial-in-t coefficients, stored per jet monomial.
struct TCochain2 {
    Scalar weight;
    int shift = 0;
    bool have_block = false;  // weight/shift adopted from the first addition
    std::map<JetMonomial, TPoly, JetMonomialDescending> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const TMonomial& m, const Cochain2& c);
    void add_jet(const JetMonomial& jm, const TPoly& p);
    std::vector<TMonomial> monomials() const;
    Cochain2 coefficient(const TMonomial& m) const;
    // drop every jet coefficient lying in the ideal
    TCochain2 reduced(const std::vector<TPoly>& gens) const;
    bool zero_mod(const std::vector<TPoly>& gens) const;
};

using BlockMap1 = std::map<BlockKey, TCochain1>;
using BlockMap2 = std::map<BlockKey, TCochain2>;

struct DeformationSeries {
    SymbolSpace space;
    std::map<int, BlockMap1> orders;
};

// Admissible deformation parameters of the space, ascending.
std::vector<ParamKey> space_params(const SymbolSpace& space);
// The spanning cocycle attached to a parameter.
Cochain1 param_cocycle(const ParamKey& key);

// Order-1 term: sum of t C over all admissible blocks.
DeformationSeries build_infinitesimal(const SymbolSpace& space);

// B^(m): the order-m coefficient of [L_X, L_Y], i.e. (1/2) sum_{i+j=m}
// [[L^(i), L^(j)]], organized per block.  The Maurer-Cartan right-hand side
// is its negative.
BlockMap2 obstruction_blocks(const DeformationSeries& series, int m);
BlockMap2 maurer_cartan_rhs(const DeformationSeries& series, int m);

// ---- order-2 analysis ----

struct BlockReport {
    BlockKey block;
    std::vector<std::string> basis_keys;
    std::vector<TPoly> omega1;                 // class coordinates of B^(2)
    std::map<TMonomial, Cochain1> witnesses;   // per-chain residual witnesses
    bool ok = true;
    std::string diagnostic;
};

struct ConditionExtraction {
    std::vector<BlockReport> blocks;
    std::vector<TPoly> conditions;  // normalized, deduplicated, nonzero
    bool ok = true;
    std::string diagnostic;
};

ConditionExtraction extract_conditions(const BlockMap2& b2);

// ---- the chosen second-order term ----

struct SecondOrder {
    BlockMap1 verbatim;     // the classical closed-form assembly
    BlockMap1 completion;   // solver-derived terms the closed form omits
    // per-block verification of d(L2_full) = (1/2) B^(2) modulo the ideal
    bool full_solves = false;
    std::vector<std::string> notes;

    BlockMap1 full() const;
};

SecondOrder build_second_order(const SymbolSpace& space, const ConditionExtraction& order2,
                               const BlockMap2& b2);

// ---- higher orders ----

struct OrderReport {
    int order = 0;
    // normalized obstruction polynomials before ideal reduction (class
    // coordinates and undecomposable residuals)
    std::vector<TPoly> obstruction_polys;
    std::vector<TPoly> new_conditions;  // the ones not already implied
    BlockMap1 term;                     // chosen L^(order)
    bool rhs_zero_mod_ideal = false;
    bool genuine_obstruction = false;
    std::string diagnostic;
};

struct Branch {
    std::vector<TPoly> chosen;    // factors set to zero
    std::vector<TPoly> residual;  // carried non-factorable constraints
    int free_params = -1;         // -1 when not a linear variety
    std::string str() const;
};

struct BranchEnumeration {
    std::vector<Branch> branches;
    bool all_recognized = true;
    std::vector<TPoly> flagged;  // conditions outside the recognized shapes
};

BranchEnumeration enumerate_component_solutions(const std::vector<TPoly>& conditions,
                                                const std::vector<ParamKey>& params);

struct AnalysisReport {
    SymbolSpace space;
    std::vector<ParamKey> params;
    ConditionExtraction order2;
    SecondOrder l2;
    std::vector<OrderReport> higher;
    bool terminated = false;
    int termination_order = 0;
    BranchEnumeration branches;
    bool ok = true;
    std::string diagnostic;
};

// The full pipeline through `max_order` (>= 2), including termination
// detection and branch enumeration.
AnalysisReport analyze(const SymbolSpace& space, int max_order);

// ---- concrete verification ----

struct PointCheck {
    bool pass = false;
    int orders_checked = 0;
    int fail_order = 0;
    std::string fail_block;
    std::string detail;
    long concrete_evaluations = 0;
};

// Build the true Maurer-Cartan solutions at a concrete parameter point and
// verify the homomorphism defect vanishes through `max_order`, both as a
// jet identity per block and on concrete monomials up to `degree_bound`
// (auto-chosen when negative).
PointCheck check_deformation_at_point(const SymbolSpace& space,
                                      const std::map<ParamKey, QuadExt>& assignment,
                                      int max_order, int degree_bound = -1);

// ---- shift invariance ----

struct ShiftInvarianceReport {
    bool pass = false;
    std::string detail;
};

// Conditions of S^m_{l+n} at the generic formal shift (plus sampled
// non-resonant rational shifts) match those of S^m_n after relabeling,
// restricted to the parameters both spaces share.
ShiftInvarianceReport shift_invariance_check(int m, int n, const std::vector<Rat>& samples);

// Conditions of the single block (w, k), derived inside S^k_{w+k}.
std::vector<TPoly> derive_block_conditions(const Scalar& w, int k);

}  // namespace vectcoh
