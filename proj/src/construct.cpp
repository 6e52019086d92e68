#include "nncurv/construct.hpp"

#include <cmath>

#include "nncurv/error.hpp"
#include "nncurv/roots.hpp"

namespace nncurv {

namespace {

bool isA2(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    double c = a.dot(b) / (a.norm() * b.norm());
    double r = a.norm() / b.norm();
    return std::fabs(std::fabs(c) - 0.5) < 1e-6 && std::fabs(r - 1.0) < 1e-6;
}

struct CaseResult {
    bool ok = false;
    Mat x, y;
};

// Attempts one (lambda, mu, nu) configuration. nu carries lambda + pm*mu.
CaseResult tryCase(const RootSystem& rs, const Basis& m, std::size_t lam,
                   std::size_t mu, std::size_t nu, int pm) {
    CaseResult none;
    const Eigen::VectorXd& al = rs.pos[lam].alpha;
    const Eigen::VectorXd& am = rs.pos[mu].alpha;
    auto len = [&](std::size_t i) { return rs.pos[i].alpha.norm(); };
    std::size_t A, B;
    if (isA2(al, am)) {
        if (pm < 0) {
            A = lam;
            B = mu;
        } else {
            A = nu;
            B = mu;
        }
    } else {
        bool ortho = std::fabs(al.dot(am)) < 1e-6;
        std::size_t longer = len(lam) > len(mu) ? lam : mu;
        if (pm > 0) {
            A = nu;
            B = ortho ? mu : longer;
        } else {
            A = ortho ? lam : longer;
            B = nu;
        }
    }
    const Eigen::VectorXd aA = rs.pos[A].alpha, aB = rs.pos[B].alpha;
    Eigen::VectorXd gam = aA - aB;
    std::size_t G = rs.pos.size();
    for (std::size_t i = 0; i < rs.pos.size(); ++i)
        if ((rs.pos[i].alpha - gam).norm() < 1e-6) G = i;
    if (G == rs.pos.size()) return none;  // difference must be a positive root
    if (findRoot(rs, aA + aB)) return none;
    if (findRoot(rs, 2.0 * aA - aB)) return none;

    const Mat &XA = rs.pos[A].x, &XB = rs.pos[B].x, &YB = rs.pos[B].y;
    const Mat &XG = rs.pos[G].x, &YG = rs.pos[G].y;
    Mat br = bracket(XA, XB);
    double Na = 2.0 * br.inner(XG);
    double Nb = 2.0 * br.inner(YG);
    Mat br2 = bracket(XA, YG);
    double Npa = -2.0 * br2.inner(YB);
    double Npb = 2.0 * br2.inner(XB);
    // the involution gauge forces both constants real
    if (std::fabs(Nb) > 1e-6 || std::fabs(Npb) > 1e-6) return none;
    if (std::fabs(Na) < 1e-8 || std::fabs(Npa) < 1e-8) return none;

    // beta(H)*gamma(H) must equal q; parametrize H by the dual 2-plane
    double q = Na * Npa / 4.0;
    Mat aBeta = rs.dualVector(aB);
    Mat aGam = rs.dualVector(gam);
    Eigen::Matrix2d gram;
    gram << aBeta.inner(aBeta), aBeta.inner(aGam), aGam.inner(aBeta),
        aGam.inner(aGam);
    Eigen::Matrix2d inv = gram.inverse();
    Mat cBeta = aBeta * inv(0, 0) + aGam * inv(1, 0);
    Mat cGam = aBeta * inv(0, 1) + aGam * inv(1, 1);
    double Aq = cBeta.inner(cBeta), Cq = cGam.inner(cGam);
    if (Aq <= 0.0 || Cq <= 0.0) throw ConstructionError("degenerate dual plane");
    double tstar = std::pow(q * q * Cq / Aq, 0.25);
    if (!(tstar > 0.0)) throw ConstructionError("torus shift collapsed");
    double u = tstar, w = q / tstar;
    Mat H = cBeta * u + cGam * w;
    double eta = Na / (2.0 * w);
    CaseResult r;
    r.ok = true;
    r.x = XA + H;
    r.y = XB + YG * eta;
    // sanity on the recipe itself; the caller re-verifies independently
    if (bracket(r.x, r.y).norm() > 1e-6) return none;
    Mat mb = project(bracket(project(r.x, m), project(r.y, m)), m);
    if (mb.norm() < 1e-4) return none;
    return r;
}

}  // namespace

ConstructOutcome fullrankConstruct(const Chain& chain, const Decomposition& dec,
                                   std::uint64_t seed) {
    ConstructOutcome out;
    if (!chain.sigma) return out;
    if (isSymmetricPair(chain.k, chain.h)) return out;
    Basis torus;
    if (!chain.pinnedTorus.empty()) {
        torus = orthonormalize(chain.pinnedTorus);
        for (const Mat& v : torus)
            if (spanResidual(v, dec.s) > 1e-8)
                throw ConstructionError("pinned torus leaves s");
    } else {
        torus = maximalTorusIn(dec.s, chain.g, seed);
    }
    RootSystem rs = rootDecomposition(chain.g, torus, seed);
    involutionRegauge(rs, chain.k, dec.s);

    std::vector<std::size_t> rm;
    for (std::size_t i = 0; i < rs.pos.size(); ++i) {
        double rh = spanResidual(rs.pos[i].x, dec.h, false);
        double rmm = spanResidual(rs.pos[i].x, dec.m, false);
        if (rh < 1e-7) continue;  // acts inside h, useless for a witness
        if (rmm < 1e-7)
            rm.push_back(i);
        else
            throw ConstructionError("regauged root neither in h nor in m");
    }

    for (std::size_t a = 0; a < rm.size(); ++a)
        for (std::size_t b = a + 1; b < rm.size(); ++b)
            for (auto [lam, mu] : {std::pair{rm[a], rm[b]}, std::pair{rm[b], rm[a]}}) {
                Mat br = bracket(rs.pos[lam].x, rs.pos[mu].x);
                if (project(br, dec.m).norm() < 1e-6) continue;
                for (int pm : {+1, -1}) {
                    PairConstant pc = pairConstant(rs, lam, mu, pm);
                    if (!pc.present || std::fabs(pc.re) + std::fabs(pc.im) < 1e-7)
                        continue;
                    if (pc.sign < 0) continue;
                    if (spanResidual(rs.pos[pc.target].x, dec.m, false) > 1e-7)
                        continue;
                    CaseResult res = tryCase(rs, dec.m, lam, mu, pc.target, pm);
                    if (res.ok) {
                        out.applicable = true;
                        out.x = res.x;
                        out.y = res.y;
                        return out;
                    }
                }
            }
    throw ConstructionError("no viable root pair for the direct construction");
}

}  // namespace nncurv
