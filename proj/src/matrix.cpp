#include "nncurv/matrix.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace nncurv {

const char* fieldName(Field f) {
    switch (f) {
        case Field::Real: return "R";
        case Field::Complex: return "C";
        case Field::Quaternion: return "H";
    }
    return "?";
}

Mat Mat::operator+(const Mat& o) const {
    Mat r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    Mat r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Mat Mat::operator-() const {
    Mat r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

Mat Mat::operator*(double s) const {
    Mat r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

Mat Mat::operator*(const Quat& q) const {
    Mat r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * q;
    return r;
}

Mat& Mat::operator+=(const Mat& o) {
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Mat& Mat::axpy(double s, const Mat& o) {
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i] * s;
    return *this;
}

Mat Mat::matmul(const Mat& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matmul: size mismatch");
    Mat r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const Quat& aik = a_[i * n_ + k];
            if (aik.normSq() == 0.0) continue;
            for (std::size_t j = 0; j < n_; ++j)
                r.a_[i * n_ + j] += aik * o.a_[k * n_ + j];
        }
    return r;
}

Mat Mat::conjTranspose() const {
    Mat r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            r.a_[j * n_ + i] = a_[i * n_ + j].conj();
    return r;
}

double Mat::inner(const Mat& o) const {
    double s = 0.0;
    for (std::size_t i = 0; i < a_.size(); ++i) s += a_[i].dot(o.a_[i]);
    return s;
}

double Mat::norm() const { return std::sqrt(inner(*this)); }

double Mat::maxAbs() const {
    double m = 0.0;
    for (const Quat& q : a_) m = std::max(m, std::sqrt(q.normSq()));
    return m;
}

bool Mat::isSkewHermitian(double tol) const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j) {
            Quat d = a_[i * n_ + j] + a_[j * n_ + i].conj();
            if (std::sqrt(d.normSq()) > tol) return false;
        }
    return true;
}

bool Mat::respectsField(Field f, double tol) const {
    if (f == Field::Quaternion) return true;
    for (const Quat& q : a_) {
        double off = (f == Field::Real) ? std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z)
                                        : std::sqrt(q.y * q.y + q.z * q.z);
        if (off > tol) return false;
    }
    return true;
}

std::string Mat::str(double clip) const {
    std::string out;
    char buf[128];
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            const Quat& q = a_[i * n_ + j];
            auto c = [&](double v) { return std::fabs(v) < clip ? 0.0 : v; };
            std::snprintf(buf, sizeof buf, "(%.3g,%.3g,%.3g,%.3g) ",
                          c(q.w), c(q.x), c(q.y), c(q.z));
            out += buf;
        }
        out += '\n';
    }
    return out;
}

Mat bracket(const Mat& a, const Mat& b) {
    return a.matmul(b) - b.matmul(a);
}

Mat skewE(std::size_t n, std::size_t i, std::size_t j) {
    Mat m(n);
    if (i != j) {
        m.at(i, j) = Quat(1);
        m.at(j, i) = Quat(-1);
    }
    return m;
}

Mat symF(std::size_t n, std::size_t i, std::size_t j) {
    Mat m(n);
    m.at(i, j) = Quat(1);
    if (i != j) m.at(j, i) = Quat(1);
    return m;
}

Mat diagUnit(std::size_t n, std::size_t i, const Quat& q) {
    Mat m(n);
    m.at(i, i) = q;
    return m;
}

Mat unitAt(std::size_t n, std::size_t i, std::size_t j, const Quat& q) {
    Mat m(n);
    m.at(i, j) = q;
    return m;
}

}  // namespace nncurv
