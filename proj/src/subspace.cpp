#include "nncurv/subspace.hpp"

#include <stdexcept>

namespace nncurv {

Basis orthonormalize(const Basis& gens, double tol) {
    Basis out;
    for (const Mat& g : gens) {
        double orig = g.norm();
        if (orig == 0.0) continue;
        Mat v = g;
        for (int pass = 0; pass < 2; ++pass)
            for (const Mat& b : out) v.axpy(-v.inner(b), b);
        double r = v.norm();
        if (r > tol * orig) out.push_back(v * (1.0 / r));
    }
    return out;
}

Mat project(const Mat& x, const Basis& onb) {
    Mat r(x.dim());
    for (const Mat& b : onb) r.axpy(x.inner(b), b);
    return r;
}

std::vector<double> coords(const Mat& x, const Basis& onb) {
    std::vector<double> c(onb.size());
    for (std::size_t i = 0; i < onb.size(); ++i) c[i] = x.inner(onb[i]);
    return c;
}

Mat combine(const Basis& onb, const std::vector<double>& c) {
    if (onb.empty()) throw std::invalid_argument("combine: empty basis");
    Mat r(onb[0].dim());
    for (std::size_t i = 0; i < onb.size(); ++i) r.axpy(c[i], onb[i]);
    return r;
}

double spanResidual(const Mat& x, const Basis& onb, bool relative) {
    Mat d = x - project(x, onb);
    double r = d.norm();
    if (relative) {
        double nx = x.norm();
        if (nx > 0.0) r /= nx;
    }
    return r;
}

bool spanContains(const Basis& onb, const Mat& x, double tol) {
    return spanResidual(x, onb) <= tol;
}

Basis complementWithin(const Basis& whole, const Basis& sub, double tol) {
    Basis out;
    for (const Mat& w : whole) {
        Mat v = w;
        for (int pass = 0; pass < 2; ++pass) {
            for (const Mat& b : sub) v.axpy(-v.inner(b), b);
            for (const Mat& b : out) v.axpy(-v.inner(b), b);
        }
        double r = v.norm();
        if (r > tol) out.push_back(v * (1.0 / r));
    }
    if (out.size() + sub.size() != whole.size())
        throw std::runtime_error("complementWithin: dimension mismatch");
    return out;
}

Eigen::VectorXd flatten(const Mat& m) {
    std::size_t n = m.dim();
    Eigen::VectorXd v(4 * n * n);
    std::size_t p = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Quat& q = m.at(i, j);
            v[p++] = q.w;
            v[p++] = q.x;
            v[p++] = q.y;
            v[p++] = q.z;
        }
    return v;
}

Mat unflatten(const Eigen::VectorXd& v, std::size_t n) {
    Mat m(n);
    std::size_t p = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m.at(i, j) = Quat(v[p], v[p + 1], v[p + 2], v[p + 3]);
            p += 4;
        }
    return m;
}

Eigen::MatrixXd basisMatrix(const Basis& b) {
    if (b.empty()) return {};
    std::size_t n = b[0].dim();
    Eigen::MatrixXd m(4 * n * n, b.size());
    for (std::size_t i = 0; i < b.size(); ++i) m.col(i) = flatten(b[i]);
    return m;
}

Eigen::MatrixXd nullSpace(const Eigen::MatrixXd& a, double relTol) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double cutoff = sv.size() ? sv[0] * relTol : 0.0;
    long rank = 0;
    for (long i = 0; i < sv.size(); ++i)
        if (sv[i] > cutoff) ++rank;
    return svd.matrixV().rightCols(svd.matrixV().cols() - rank);
}

}  // namespace nncurv
