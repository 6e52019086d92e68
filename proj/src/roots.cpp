#include "nncurv/roots.hpp"

#include <algorithm>
#include <cmath>

#include "nncurv/error.hpp"

namespace nncurv {

double RootSystem::frameResidual() const {
    double worst = 0.0;
    for (const RootFrame& r : pos)
        for (std::size_t i = 0; i < torus.size(); ++i) {
            worst = std::max(worst, (bracket(torus[i], r.x) - r.y * r.alpha[i]).norm());
            worst = std::max(worst, (bracket(torus[i], r.y) + r.x * r.alpha[i]).norm());
        }
    return worst;
}

Mat RootSystem::dualVector(const Eigen::VectorXd& alpha) const {
    Mat h(torus.front().dim());
    for (std::size_t i = 0; i < torus.size(); ++i) h.axpy(alpha[i], torus[i]);
    return h;
}

namespace {

// ad_H as a matrix over an orthonormal basis of an invariant subspace.
Eigen::MatrixXd adOn(const Mat& h, const Basis& onb) {
    long d = static_cast<long>(onb.size());
    Eigen::MatrixXd a(d, d);
    for (long j = 0; j < d; ++j) {
        Mat br = bracket(h, onb[j]);
        for (long i = 0; i < d; ++i) a(i, j) = onb[i].inner(br);
    }
    return a;
}

std::vector<std::vector<long>> clusterAscending(const Eigen::VectorXd& theta) {
    std::vector<std::vector<long>> cl;
    for (long i = 0; i < theta.size(); ++i) {
        if (!cl.empty() &&
            theta[i] - theta[cl.back().back()] < 1e-7 * std::max(theta[i], 1e-3))
            cl.back().push_back(i);
        else
            cl.push_back({i});
    }
    return cl;
}

// Split a torus-invariant subspace into invariant planes using fresh probe
// elements; coincident frequencies recurse with a new probe.
void splitPlanes(const Basis& sub, const Basis& t, std::mt19937_64& rng,
                 int depth, std::vector<std::pair<Mat, Mat>>& planes) {
    if (sub.size() % 2 != 0)
        throw ConstructionError("rootDecomposition: odd invariant block");
    if (sub.size() == 2) {
        planes.emplace_back(sub[0], sub[1]);
        return;
    }
    if (depth >= 5) throw ConstructionError("rootDecomposition: degenerate probes");

    Mat h = randomCombo(t, rng);
    Eigen::MatrixXd a = adOn(h, sub);
    a = 0.5 * (a - a.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.transpose() * a);
    Eigen::VectorXd theta = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const Eigen::MatrixXd& v = es.eigenvectors();

    for (const auto& cl : clusterAscending(theta)) {
        Basis block;
        for (long c : cl) {
            Mat m(sub.front().dim());
            for (std::size_t i = 0; i < sub.size(); ++i) m.axpy(v(i, c), sub[i]);
            block.push_back(m);
        }
        splitPlanes(block, t, rng, depth + 1, planes);
    }
}

}  // namespace

RootSystem rootDecomposition(const Basis& alg, const Basis& torus,
                             std::uint64_t seed) {
    RootSystem rs;
    rs.torus = orthonormalize(torus);
    Basis g = orthonormalize(alg);
    Basis w = complementWithin(g, rs.torus);
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 99);

    Mat h0 = randomCombo(rs.torus, rng);
    Eigen::MatrixXd a = adOn(h0, w);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.transpose() * a);
    Eigen::VectorXd theta = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    if (theta.size() && theta[0] < 1e-6 * std::max(theta[theta.size() - 1], 1e-300))
        throw ConstructionError("rootDecomposition: torus not maximal");
    const Eigen::MatrixXd& v = es.eigenvectors();

    std::vector<std::pair<Mat, Mat>> planes;
    for (const auto& cl : clusterAscending(theta)) {
        Basis block;
        for (long c : cl) {
            Mat m(w.front().dim());
            for (std::size_t i = 0; i < w.size(); ++i) m.axpy(v(i, c), w[i]);
            block.push_back(m);
        }
        splitPlanes(block, rs.torus, rng, 1, planes);
    }

    Eigen::VectorXd pick(rs.torus.size());
    for (long i = 0; i < pick.size(); ++i) pick[i] = std::pow(M_PI, -double(i));

    for (auto& [u, uv] : planes) {
        (void)uv;
        Mat x = u * (1.0 / u.norm());
        Mat ybr = bracket(h0, x);
        double th = ybr.norm();
        if (th <= 0.0) throw ConstructionError("rootDecomposition: flat plane");
        Mat y = ybr * (1.0 / th);
        Eigen::VectorXd alpha(rs.torus.size());
        for (std::size_t i = 0; i < rs.torus.size(); ++i)
            alpha[i] = bracket(rs.torus[i], x).inner(y);
        if (alpha.dot(pick) < 0) {
            y = -y;
            alpha = -alpha;
        }
        // gauge: earliest ambient coordinate with rotation-invariant support
        // goes entirely to x, positively
        Eigen::VectorXd xf = flatten(x), yf = flatten(y);
        Eigen::VectorXd r = (xf.array().square() + yf.array().square()).sqrt();
        double thr = 1e-3 * r.maxCoeff();
        long i0 = 0;
        while (i0 < r.size() && r[i0] <= thr) ++i0;
        double t = std::atan2(yf[i0], xf[i0]);
        Mat xn = x * std::cos(t) + y * std::sin(t);
        Mat yn = x * (-std::sin(t)) + y * std::cos(t);
        rs.pos.push_back({alpha, xn, yn});
    }

    auto key = [](const Eigen::VectorXd& a) {
        std::vector<long long> k(a.size());
        for (long i = 0; i < a.size(); ++i) k[i] = llround(a[i] * 1e6);
        return k;
    };
    std::sort(rs.pos.begin(), rs.pos.end(), [&](const RootFrame& l, const RootFrame& r) {
        return key(l.alpha) < key(r.alpha);
    });
    return rs;
}

std::optional<std::pair<std::size_t, int>> findRoot(const RootSystem& rs,
                                                    const Eigen::VectorXd& alpha,
                                                    double tol) {
    for (std::size_t i = 0; i < rs.pos.size(); ++i) {
        if ((rs.pos[i].alpha - alpha).norm() < tol) return {{i, +1}};
        if ((rs.pos[i].alpha + alpha).norm() < tol) return {{i, -1}};
    }
    return std::nullopt;
}

void involutionRegauge(RootSystem& rs, const Basis& kb, const Basis& sb,
                       double tol) {
    for (RootFrame& r : rs.pos) {
        Mat sx = r.x - project(r.x, kb);
        Mat sy = r.y - project(r.y, kb);
        double nx = sx.norm(), ny = sy.norm();
        if (std::max(nx, ny) < 1e-9)
            throw ConstructionError("involutionRegauge: plane inside fixed part");
        Mat us = (nx >= ny ? sx : sy) * (1.0 / std::max(nx, ny));
        double rx = sx.inner(us), ry = sy.inner(us);
        double t = std::atan2(-rx, ry);
        Mat xn = r.x * std::cos(t) + r.y * std::sin(t);
        Mat yn = r.x * (-std::sin(t)) + r.y * std::cos(t);
        Eigen::VectorXd xf = flatten(xn);
        double thr = 1e-3 * xf.cwiseAbs().maxCoeff();
        long i0 = 0;
        while (i0 < xf.size() && std::fabs(xf[i0]) <= thr) ++i0;
        if (xf[i0] < 0) {
            xn = -xn;
            yn = -yn;
        }
        if (spanResidual(xn, kb, false) > tol || spanResidual(yn, sb, false) > tol)
            throw ConstructionError("involutionRegauge: plane not split by involution");
        r.x = xn;
        r.y = yn;
    }
}

PairConstant pairConstant(const RootSystem& rs, std::size_t i, std::size_t j,
                          int eps) {
    PairConstant pc;
    Eigen::VectorXd tgt = rs.pos[i].alpha + double(eps) * rs.pos[j].alpha;
    auto m = findRoot(rs, tgt);
    if (!m) return pc;
    pc.present = true;
    pc.target = m->first;
    pc.sign = m->second;
    Mat br = bracket(rs.pos[i].x, rs.pos[j].x);
    pc.re = 2.0 * br.inner(rs.pos[pc.target].x);
    pc.im = 2.0 * pc.sign * br.inner(rs.pos[pc.target].y);
    return pc;
}

const char* rank2Name(Rank2Type t) {
    switch (t) {
        case Rank2Type::Reducible: return "REDUCIBLE";
        case Rank2Type::A2: return "A2";
        case Rank2Type::B2: return "B2";
        case Rank2Type::G2: return "G2";
    }
    return "?";
}

Rank2Type rank2SpanType(const RootSystem& rs, std::size_t i, std::size_t j) {
    Eigen::MatrixXd plane(rs.pos[i].alpha.size(), 2);
    plane.col(0) = rs.pos[i].alpha;
    plane.col(1) = rs.pos[j].alpha;
    if (plane.jacobiSvd().singularValues().minCoeff() < 1e-9)
        throw ConstructionError("rank2SpanType: roots are parallel");
    auto solver = plane.colPivHouseholderQr();
    std::size_t count = 0;
    for (const RootFrame& f : rs.pos) {
        Eigen::VectorXd c = solver.solve(f.alpha);
        if ((plane * c - f.alpha).norm() < 1e-6) ++count;
    }
    switch (count) {
        case 2: return Rank2Type::Reducible;
        case 3: return Rank2Type::A2;
        case 4: return Rank2Type::B2;
        case 6: return Rank2Type::G2;
        default: throw ConstructionError("rank2SpanType: unrecognized plane");
    }
}

}  // namespace nncurv
