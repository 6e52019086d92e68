#pragma once

#include <optional>
#include <utility>

#include "nncurv/algebra.hpp"

namespace nncurv {

// One positive root: values against the torus basis plus an orthonormal frame
// of its plane, satisfying [H, x] = a(H) y and [H, y] = -a(H) x.
struct RootFrame {
    Eigen::VectorXd alpha;
    Mat x, y;
};

struct RootSystem {
    Basis torus;  // orthonormal
    std::vector<RootFrame> pos;

    // Worst deviation of the frames from the defining relations.
    double frameResidual() const;
    // sum_i alpha_i t_i; equals [x, y] for the frame carrying alpha.
    Mat dualVector(const Eigen::VectorXd& alpha) const;
};

// Splits the orthogonal complement of the torus in alg into invariant planes
// and gauge-fixes a frame in each. The torus must be maximal in alg.
// Deterministic for a fixed seed.
RootSystem rootDecomposition(const Basis& alg, const Basis& torus,
                             std::uint64_t seed = 0);

// Index and sign of the positive root matching +-alpha, if present.
std::optional<std::pair<std::size_t, int>> findRoot(const RootSystem& rs,
                                                    const Eigen::VectorXd& alpha,
                                                    double tol = 1e-6);

// Rotate each frame so x lands in span(kb) and y in span(sb). Valid when the
// two spans are the eigenspaces of an involutive isometry fixing the torus
// inside sb; misaligned planes are an error.
void involutionRegauge(RootSystem& rs, const Basis& kb, const Basis& sb,
                       double tol = 1e-6);

// Structure constant for (alpha_i, eps * alpha_j) read off [x_i, x_j].
struct PairConstant {
    bool present = false;
    std::size_t target = 0;  // positive root carrying |alpha_i + eps alpha_j|
    int sign = 0;            // +1 when that sum is itself positive
    double re = 0.0, im = 0.0;
};

PairConstant pairConstant(const RootSystem& rs, std::size_t i, std::size_t j,
                          int eps);

// Isomorphism type of the rank-2 subsystem cut out by the plane of two
// positive roots, decided by how many positive roots the plane contains.
enum class Rank2Type { Reducible, A2, B2, G2 };

const char* rank2Name(Rank2Type t);

Rank2Type rank2SpanType(const RootSystem& rs, std::size_t i, std::size_t j);

}  // namespace nncurv
