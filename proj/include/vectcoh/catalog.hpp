#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "vectcoh/cochain.hpp"

namespace vectcoh {

// Indexed constructors for every named map of the verification problem:
// the nine 1-cocycle families, the displayed nontrivial 2-cocycles, and the
// coboundary-witness maps appearing in the integrability analysis.  Generic
// families take the weight as an argument; keys follow the addressing
// scheme "C[l,l+4]", "Ctilde[0,1]", "Omega[0,5]", "b[l,l+5]".
class Catalog {
public:
    Catalog();

    // ---- 1-cocycles (Table of cocycles spanning H^1) ----
    static Cochain1 c_diag(const Scalar& w);            // C[w,w]   : X' f
    static Cochain1 c01();                              // C[0,1]   : X'' f
    static Cochain1 c01_tilde();                        // Ctilde[0,1] : (X' f)'
    static Cochain1 c_k2(const Scalar& w);              // C[w,w+2]
    static Cochain1 c_k3(const Scalar& w);              // C[w,w+3]
    static Cochain1 c_k4(const Scalar& w);              // C[w,w+4]
    static Cochain1 c05();                              // C[0,5]
    static Cochain1 cm41();                             // C[-4,1]
    static Cochain1 c_ai6(int i);                       // C[ai,ai+6]

    // All spanning 1-cocycles of H^1 at the block (w, k); the pair for
    // (0, 1) is {C[0,1], Ctilde[0,1]}.
    static std::vector<std::pair<std::string, Cochain1>> cocycles_at(const Scalar& w, int k);
    static bool resonant(const Scalar& w, int k) { return !cocycles_at(w, k).empty(); }

    // ---- displayed 2-cocycles ----
    static Cochain2 omega01();
    static Cochain2 omega_k2(const Scalar& w);
    static Cochain2 omega_k3(const Scalar& w);
    static Cochain2 omega_k4(const Scalar& w);
    static Cochain2 omega05();
    static Cochain2 omega05_tilde();
    static Cochain2 omega_m41();
    static Cochain2 omega_m41_tilde();
    static Cochain2 omega_ai6(int i);
    static Cochain2 omega_ai6_tilde(int i);

    // Cup-product recipes for the k = 7..10 generators.
    static Cochain2 omega_k7(const Scalar& w);   // [[C[w+3,w+7], C[w,w+3]]]
    static Cochain2 omega_k8(const Scalar& w);   // [[C[w+4,w+8], C[w,w+4]]]
    static Cochain2 omega_k9(const Scalar& w);   // the resonant k=9 recipes
    static Cochain2 omega_k10(const Scalar& w);  // the resonant k=10 recipes

    // Defining-cup orientations of the resonant generators.  The printed
    // formulas above equal the negatives of these for the shift-5 and
    // shift-6 families; every tabulated class coordinate and condition is
    // consistent in the cup orientation, which is therefore the engine's
    // canonical basis.
    static Cochain2 omega05_cup();         // [[C[2,5],   C[0,2]]]
    static Cochain2 omega05_tilde_cup();   // [[C[5,5],   C[0,5]]]
    static Cochain2 omega_m41_cup();       // [[C[-1,1],  C[-4,-1]]]
    static Cochain2 omega_m41_tilde_cup(); // [[C[1,1],   C[-4,1]]]
    static Cochain2 omega_ai6_cup(int i);        // [[C[ai+3,ai+6], C[ai,ai+3]]]
    static Cochain2 omega_ai6_tilde_cup(int i);  // [[C[ai+6,ai+6], C[ai,ai+6]]]
    static Cochain2 omega_k3_cup(const Scalar& w);  // [[C[w,w+3], C[w,w]]]

    // Canonical cohomology basis of the (w, k) block, cup-oriented, with
    // empty result where the block's H^2 either vanishes or admits no cup
    // generator (k=7 at 0/-6 and k=8 at (-7 +- sqrt(39))/2 degenerate).
    static std::vector<std::pair<std::string, Cochain2>> basis_cocycles_at(const Scalar& w, int k);

    // ---- witness maps (transcribed displays) ----
    static Cochain1 b_k4(const Scalar& w);       // b[l,l+4]
    static Cochain1 b04_tilde();                 // btilde[0,4]
    static Cochain1 bm31_tilde();                // btilde[-3,1]
    static Cochain1 b_k5(const Scalar& w);       // b[l,l+5], poles at 0,-2,-4
    static Cochain1 b_k5_tilde(const Scalar& w); // btilde[l,l+5]
    static Cochain1 bm23();                      // b[-2,3]
    static Cochain1 bm23_tilde();                // btilde[-2,3]
    static Cochain1 b05();                       // b[0,5]
    static Cochain1 b05_tilde();                 // btilde[0,5]
    static Cochain1 b05_bar();                   // bbar[0,5]
    static Cochain1 bm41_tilde();                // btilde[-4,1]
    static Cochain1 bm41();                      // b[-4,1]
    static Cochain1 bm41_bar();                  // bbar[-4,1]
    static Cochain1 b_x5f2(const Scalar& w);     // b(X)f = X^(5) f'' at shift 6

    // ---- addressing, serialization, hashing ----
    struct Entry {
        std::string key;
        std::string kind;  // "cocycle1", "cocycle2", "witness1"
        std::function<Cochain1()> c1;
        std::function<Cochain2()> c2;
    };
    const std::vector<Entry>& entries() const { return entries_; }
    bool has(const std::string& key) const;
    Cochain1 cochain1(const std::string& key) const;
    Cochain2 cochain2(const std::string& key) const;

    // Stable FNV-1a hash of the canonical serialization of all entries.
    std::string hash() const;

private:
    std::vector<Entry> entries_;
};

// Canonical term-list serializations used by the catalog hash, the JSON
// export, and the golden reports.
std::string serialize(const Cochain1& c);
std::string serialize(const Cochain2& c);
Cochain1 deserialize_cochain1(const std::string& text);

}  // namespace vectcoh
