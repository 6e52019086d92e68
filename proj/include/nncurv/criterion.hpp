#pragma once

#include <string>

#include "nncurv/decomposition.hpp"

namespace nncurv {

struct PairCheck {
    bool structuralOk = false;  // both vectors lie in p and are nonzero
    bool accepted = false;
    double residual = 0.0;      // commutator norm after unit normalization
    double mBracketNorm = 0.0;  // m-part of the bracket of the m-parts
    std::string reason;
    Mat xUnit, yUnit;
};

// Checks that a normalized pair commutes in g while its m-parts fail to
// commute inside m. Structural rejection (not in p) is kept distinct from
// numeric rejection.
PairCheck verifyPair(const Decomposition& dec, const Mat& x, const Mat& y,
                     double tolAccept = 1e-8, double thetaMin = 1e-4,
                     double tolStruct = 1e-9);

}  // namespace nncurv
