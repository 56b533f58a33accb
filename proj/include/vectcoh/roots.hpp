#pragma once

#include <vector>

#include "vectcoh/upoly.hpp"

namespace vectcoh {

// Roots of p expressible in Q or in a supported quadratic extension,
// together with the monic product of the irreducible factors whose roots
// live elsewhere.  Roots are distinct (multiplicity dropped) and sorted.
struct RootSplit {
    std::vector<QuadExt> roots;
    UPoly residual;  // monic; constant 1 when p splits completely
};

// Requires p nonzero of degree <= 4; throws unsupported_degree_error above
// that.  Handles rational coefficients fully; for genuinely quadratic-surd
// coefficients only degree <= 2 is resolved, the rest is reported residual.
RootSplit roots_in_quadext(const UPoly& p);

// Integer helpers shared with the solver's singularity analysis.
Int squarefree_part(const Int& n);     // n != 0; sign preserved on the part
bool rat_is_square(const Rat& q, Rat& root);

}  // namespace vectcoh
