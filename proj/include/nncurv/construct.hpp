#pragma once

#include <cstdint>

#include "nncurv/decomposition.hpp"

namespace nncurv {

struct ConstructOutcome {
    bool applicable = false;
    Mat x, y;
};

// Direct witness construction for chains carrying an involution whose fixed
// set is k: pick a torus inside s, regauge the root frames against the k/s
// splitting, and solve for a torus shift H and scale eta making
// X = X_alpha + H and Y = X_beta + eta Y_{alpha-beta} commute.
// Returns applicable=false when [m,m] lies in h; throws ConstructionError when
// the recipe cannot be completed on a chain it should handle.
ConstructOutcome fullrankConstruct(const Chain& chain, const Decomposition& dec,
                                   std::uint64_t seed = 0);

}  // namespace nncurv
