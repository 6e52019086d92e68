#pragma once

#include <cstdint>

#include "nncurv/decomposition.hpp"

namespace nncurv {

struct SearchBudget {
    std::size_t restarts = 200;
    std::size_t iterations = 2000;
    std::size_t threads = 1;
    double tolAccept = 1e-8;
    double thetaMin = 1e-4;
};

struct SearchResult {
    bool found = false;
    Mat x, y;              // unit vectors in p when found
    double residual = 0.0;
    double mBracket = 0.0;
    double minPenalized = 0.0;  // best final-stage objective across restarts
    std::size_t restartIndex = 0;
};

// Penalized minimization of the commutator norm subject to a unit m-bracket,
// multi-restart with escalating penalty weight, endpoints polished by a
// damped least-squares pass and re-verified. Deterministic for a fixed seed;
// the restart partition across threads does not affect the result.
SearchResult searchCounterexample(const Decomposition& dec,
                                  const SearchBudget& budget,
                                  std::uint64_t seed = 0);

struct EstimateResult {
    double value = 0.0;
    bool divergent = false;
};

// Best observed ratio of the m-bracket norm to the commutator norm over unit
// pairs, by multi-restart ascent. A lower bound for the criterion constant;
// capped at 1e6 with the divergent flag for chains failing the criterion.
EstimateResult estimateConstant(const Decomposition& dec, std::size_t restarts,
                                std::size_t iterations, std::uint64_t seed = 0);

}  // namespace nncurv
