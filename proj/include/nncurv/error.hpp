#pragma once

#include <stdexcept>

namespace nncurv {

// Structural computation could not complete (degenerate probe, misaligned
// root plane, failed case analysis). Distinct from bad user input.
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace nncurv
