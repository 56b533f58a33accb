#pragma once

#include <array>
#include <string>
#include <vector>

#include "vectcoh/catalog.hpp"
#include "vectcoh/roots.hpp"

namespace vectcoh {

// Dense linear system A x = rhs over the scalar field, with labeled unknowns.
struct LinearSystem {
    std::vector<std::vector<Scalar>> a;
    std::vector<Scalar> rhs;
    std::vector<std::string> labels;

    size_t rows() const { return a.size(); }
    size_t cols() const { return labels.size(); }
};

struct SolveResult {
    enum class Kind { Unique, Parametric, Inconsistent };
    Kind kind = Kind::Inconsistent;
    // particular solution with every free unknown set to zero
    std::vector<Scalar> particular;
    // kernel basis, one vector per free unknown, that unknown set to one
    std::vector<std::vector<Scalar>> kernel;
    std::vector<int> free_cols;
    std::vector<int> pivot_cols;
    // numerators of the pivots encountered, for singularity analysis
    std::vector<UPoly> pivot_polys;

    bool solved() const { return kind != Kind::Inconsistent; }
};

// Gauss-Jordan elimination over Q(sqrt(d))(l), columns processed left to
// right, pivot = first row with a nonzero entry.  Inconsistency is a
// returned value, never an error.
SolveResult solve_exact(const LinearSystem& sys);

// Decision data for "target = sum_i coords_i basis_i + d(witness)" over the
// order-homogeneous witness ansatz at the target's (weight, shift) block.
struct ClassDecomposition {
    bool ok = false;                 // decomposition exists
    bool basis_degenerate = false;   // a basis class lay in the span of the rest
    std::vector<Scalar> coords;      // one per basis element
    Cochain1 witness;                // free components zeroed: kernel-free pick
    std::vector<Cochain1> witness_kernel;  // Z^1 directions of the ansatz
    std::vector<UPoly> pivot_polys;
    std::vector<QuadExt> singular_weights;  // candidate degeneration points

    // reconstruct: sum coords_i basis_i + coboundary1(witness) == target
    bool reconstructs(const Cochain2& target, const std::vector<Cochain2>& basis) const;
    // does c lie in witness + span(witness_kernel)?
    bool witness_matches_mod_kernel(const Cochain1& c) const;
};

// Solve  target = sum c_i basis_i + d b  with b the canonical homogeneous
// ansatz sum_j alpha_j X^(k+1-j) f^(j).  With an empty basis this is the
// pure coboundary-membership test; failure certifies "not a coboundary of
// the homogeneous ansatz".
ClassDecomposition decompose(const Cochain2& target, const std::vector<Cochain2>& basis);

// Columns of b |-> coboundary1(b) over the canonical ansatz at (weight, shift).
std::vector<Cochain2> coboundary_columns(const Scalar& weight, int shift);

// Candidate weights where a generic-weight decomposition can change: roots
// of the pivot numerators and of all denominators in sight.  Factors beyond
// the supported fields are ignored (reported by the callers as residuals).
std::vector<QuadExt> singular_candidates(const std::vector<UPoly>& pivot_polys);

// ---- recomputation of the constants the tables leave out ----

struct DerivedDecomposition {
    std::string cup_key;
    std::vector<std::string> basis_keys;
    ClassDecomposition dec;
};

struct ConstantsReport {
    // R_i, S_i, T_i of the shift-6 resonant blocks, index 1 and 2, normalized
    //   [[C_{ai+3,ai+6},C_{ai,ai+3}]]-coordinate = 1,
    // so that the extracted condition reads
    //   t3-chain - R_i t0-chain + S_i t2-chain - T_i t4-chain = 0.
    std::array<Scalar, 3> R{}, S{}, T{};
    bool galois_ok = false;            // index-2 values are conjugates of index-1
    bool tilde_structure_ok = false;   // Omegatilde enters only the diagonal chain, coord +-1
    // class coordinate of [[C_{l+4,l+7}, C_{l,l+4}]] in Omega_{l,l+7}
    Scalar k7_coord;
    bool k7_coord_ok = false;          // equals (1-2l)/(2l+13)
    // derived ratios of the two resonant k=8 chains; engine consistency is
    // Galois pairing of the derived values; tabulated agreement is separate
    std::array<Scalar, 3> eta_theta{}, mu_nu{};
    bool ratios_conjugate = false;     // index-2 derived = conj(index-1 derived)
    bool const3_match = false;         // derived ratios equal the tabulated eta/theta, mu/nu
    // classical claim: resonant k=6 witnesses are proportional to X^(5) f'' mod Z^1
    bool k6_proportional = false;
    // which reading of the shift-6 witness display matches the derived one
    std::string k6_prefactor_note;
    // every decomposition performed (derived witnesses included)
    std::vector<DerivedDecomposition> decomps;
    bool reconstructions_ok = false;

    // internal consistency of the recomputation (agreement with the
    // tabulated values is reported but judged separately)
    bool engine_ok() const {
        return galois_ok && tilde_structure_ok && k7_coord_ok && ratios_conjugate &&
               reconstructions_ok;
    }
};

ConstantsReport recompute_omitted_constants();

}  // namespace vectcoh
