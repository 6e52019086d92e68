#pragma once

#include <cstdint>
#include <random>

#include "nncurv/subspace.hpp"

namespace nncurv {

// Orthonormal bases for the standard compact matrix algebras, skew-Hermitian
// over the indicated scalars.
Basis soBasis(std::size_t n);
Basis suBasis(std::size_t n);
Basis uBasis(std::size_t n);
Basis spBasis(std::size_t n);
// Stabilizer of a fixed generic 3-form on R^7 inside so(7); dimension 14.
Basis g2Basis();

// Worst bracket residual off the span, over all basis pairs.
double closureResidual(const Basis& onb);
bool isAbelian(const Basis& onb, double tol = 1e-8);

// { X in span(ambient) : [X, e] = 0 for all e in elems }.
Basis centralizerIn(const Basis& ambient, const std::vector<Mat>& elems,
                    double relTol = 1e-8);
// Associative commutant { X : X j = j X } within span(ambient).
Basis commutantIn(const Basis& ambient, const Mat& j, double relTol = 1e-8);
Basis centerOf(const Basis& onb);

Mat randomCombo(const Basis& onb, std::mt19937_64& rng);

// Centralizer in alg of a generic element of probeSpace. Non-abelian results
// trigger a fresh probe; five degenerate probes in a row is an error.
Basis maximalTorusIn(const Basis& probeSpace, const Basis& alg,
                     std::uint64_t seed = 0);
std::size_t rankOf(const Basis& alg, std::uint64_t seed = 0);

// Minimal ideals of the derived (center-free) part, each orthonormal. Grown
// by ad-closure from single seeds, so the input basis need not be adapted.
std::vector<Basis> splitIdeals(const Basis& alg, double tol = 1e-8);

}  // namespace nncurv
