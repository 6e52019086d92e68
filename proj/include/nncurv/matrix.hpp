#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nncurv/quaternion.hpp"

namespace nncurv {

enum class Field { Real, Complex, Quaternion };

const char* fieldName(Field f);

// Dense n x n matrix with quaternion entries. Real and complex matrices use
// the obvious sub-scalars; the field tag records which model an algebra lives
// in but the arithmetic never branches on it.
class Mat {
  public:
    Mat() = default;
    explicit Mat(std::size_t n) : n_(n), a_(n * n) {}

    std::size_t dim() const { return n_; }

    Quat& at(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
    const Quat& at(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat operator*(double s) const;
    Mat operator*(const Quat& q) const;  // right scalar multiple
    Mat& operator+=(const Mat& o);
    Mat& axpy(double s, const Mat& o);   // *this += s * o

    Mat matmul(const Mat& o) const;
    Mat conjTranspose() const;

    // Frobenius pairing Re tr(A^H B); the componentwise dot of entries.
    double inner(const Mat& o) const;
    double norm() const;
    double maxAbs() const;

    bool isSkewHermitian(double tol) const;
    // Entries confined to the ground field (Complex: y=z=0, Real: x=y=z=0).
    bool respectsField(Field f, double tol) const;

    std::string str(double clip = 1e-12) const;

  private:
    std::size_t n_ = 0;
    std::vector<Quat> a_;
};

Mat bracket(const Mat& a, const Mat& b);

// E(i,j) = e_ij - e_ji, the skew generator; zero when i == j.
Mat skewE(std::size_t n, std::size_t i, std::size_t j);
// F(i,j) = e_ij + e_ji (i != j) or e_ii.
Mat symF(std::size_t n, std::size_t i, std::size_t j);
// q * e_ii on the diagonal.
Mat diagUnit(std::size_t n, std::size_t i, const Quat& q);
// q placed at (i,j); general building block.
Mat unitAt(std::size_t n, std::size_t i, std::size_t j, const Quat& q);

}  // namespace nncurv
