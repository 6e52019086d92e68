#pragma once

#include "nncurv/chains.hpp"
#include "nncurv/subspace.hpp"

namespace nncurv {

// Orthogonal splitting g = h + m + s with m = k - h and s = g - k.
// p = m + s is the tangent space the criterion quantifies over.
struct Decomposition {
    Field field = Field::Real;
    std::size_t ambient = 0;
    Basis h, m, s;
    Basis p;         // m then s, in that order
    Basis gAdapted;  // h then m then s

    Mat projH(const Mat& x) const { return project(x, h); }
    Mat projM(const Mat& x) const { return project(x, m); }
    Mat projS(const Mat& x) const { return project(x, s); }
    Mat projP(const Mat& x) const { return project(x, p); }
};

Decomposition decompose(const Chain& chain);

// [m,m] inside h, checked over all basis pairs.
bool isSymmetricPair(const Basis& k, const Basis& h, double tol = 1e-9);

// Fiber-scaled inner product on p; the vertical part m is scaled by 1/(1-t).
double metricGt(const Decomposition& dec, double t, const Mat& x, const Mat& y);

}  // namespace nncurv
