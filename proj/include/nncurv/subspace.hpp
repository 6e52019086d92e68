#pragma once

#include <vector>

#include <Eigen/Dense>

#include "nncurv/matrix.hpp"

namespace nncurv {

using Basis = std::vector<Mat>;

// Modified Gram-Schmidt with one re-orthogonalization pass. Vectors whose
// residual drops below tol * original norm are discarded, so the result is an
// orthonormal basis of the span.
Basis orthonormalize(const Basis& gens, double tol = 1e-10);

// Orthogonal projection onto span of an orthonormal basis.
Mat project(const Mat& x, const Basis& onb);

std::vector<double> coords(const Mat& x, const Basis& onb);

Mat combine(const Basis& onb, const std::vector<double>& c);

// Distance from x to the span, relative to ||x|| when relative is set.
double spanResidual(const Mat& x, const Basis& onb, bool relative = true);

bool spanContains(const Basis& onb, const Mat& x, double tol);

// Orthonormal basis of the orthogonal complement of sub inside span(whole).
// Both arguments must already be orthonormal and sub must lie in span(whole).
Basis complementWithin(const Basis& whole, const Basis& sub, double tol = 1e-10);

// Flattening: a matrix over H of size n becomes a real vector of length 4n^2.
Eigen::VectorXd flatten(const Mat& m);
Mat unflatten(const Eigen::VectorXd& v, std::size_t n);

// Columns are the flattened basis elements.
Eigen::MatrixXd basisMatrix(const Basis& b);

// Orthonormal kernel of a linear map, columns of the returned matrix span
// { v : Av = 0 } with singular values below tol * sigma_max treated as zero.
Eigen::MatrixXd nullSpace(const Eigen::MatrixXd& a, double relTol = 1e-8);

}  // namespace nncurv
