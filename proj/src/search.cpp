#include "nncurv/search.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <thread>

#include "nncurv/criterion.hpp"

namespace nncurv {

namespace {

// Bracket as a trilinear table over the adapted bases: entry (i,j,k) is the
// k-th adapted-g coordinate of [p_i, p_j]. Projections onto h, m, s become
// coordinate selections.
struct StructureTensor {
    std::size_t d = 0;       // dim p
    std::size_t D = 0;       // dim g
    std::size_t mCount = 0;  // leading m-coordinates of p
    std::size_t hCount = 0;  // leading h-coordinates of adapted g
    std::vector<double> tab;

    double at(std::size_t i, std::size_t j, std::size_t k) const {
        return tab[(i * d + j) * D + k];
    }

    static StructureTensor build(const Decomposition& dec) {
        StructureTensor t;
        t.d = dec.p.size();
        t.D = dec.gAdapted.size();
        t.mCount = dec.m.size();
        t.hCount = dec.h.size();
        t.tab.assign(t.d * t.d * t.D, 0.0);
        for (std::size_t i = 0; i < t.d; ++i)
            for (std::size_t j = i + 1; j < t.d; ++j) {
                std::vector<double> c = coords(bracket(dec.p[i], dec.p[j]), dec.gAdapted);
                for (std::size_t k = 0; k < t.D; ++k) {
                    t.tab[(i * t.d + j) * t.D + k] = c[k];
                    t.tab[(j * t.d + i) * t.D + k] = -c[k];
                }
            }
        return t;
    }

    // z_k = sum_ij x_i y_j S_ijk
    void bracketCoords(const std::vector<double>& x, const std::vector<double>& y,
                       std::vector<double>& z) const {
        z.assign(D, 0.0);
        for (std::size_t i = 0; i < d; ++i) {
            if (x[i] == 0.0) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (j == i || y[j] == 0.0) continue;
                double c = x[i] * y[j];
                const double* row = &tab[(i * d + j) * D];
                for (std::size_t k = 0; k < D; ++k) z[k] += c * row[k];
            }
        }
    }

    // m-part of the bracket of the m-parts, in adapted coordinates
    void mBracketCoords(const std::vector<double>& x, const std::vector<double>& y,
                        std::vector<double>& zm) const {
        zm.assign(mCount, 0.0);
        for (std::size_t i = 0; i < mCount; ++i) {
            if (x[i] == 0.0) continue;
            for (std::size_t j = 0; j < mCount; ++j) {
                if (j == i || y[j] == 0.0) continue;
                double c = x[i] * y[j];
                const double* row = &tab[(i * d + j) * D + hCount];
                for (std::size_t k = 0; k < mCount; ++k) zm[k] += c * row[k];
            }
        }
    }

    // g[i] += w * sum_k z_k * d z_k / d x_i restricted as requested
    void accumGradX(const std::vector<double>& y, const std::vector<double>& z,
                    double w, std::size_t jLimit, std::size_t kOff,
                    std::size_t kCount, std::vector<double>& g,
                    std::size_t iLimit) const {
        for (std::size_t i = 0; i < iLimit; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < jLimit; ++j) {
                if (j == i || y[j] == 0.0) continue;
                const double* row = &tab[(i * d + j) * D + kOff];
                double dot = 0.0;
                for (std::size_t k = 0; k < kCount; ++k) dot += z[k] * row[k];
                acc += y[j] * dot;
            }
            g[i] += w * acc;
        }
    }

    void accumGradY(const std::vector<double>& x, const std::vector<double>& z,
                    double w, std::size_t iLimit, std::size_t kOff,
                    std::size_t kCount, std::vector<double>& g,
                    std::size_t jLimit) const {
        for (std::size_t j = 0; j < jLimit; ++j) {
            double acc = 0.0;
            for (std::size_t i = 0; i < iLimit; ++i) {
                if (i == j || x[i] == 0.0) continue;
                const double* row = &tab[(i * d + j) * D + kOff];
                double dot = 0.0;
                for (std::size_t k = 0; k < kCount; ++k) dot += z[k] * row[k];
                acc += x[i] * dot;
            }
            g[j] += w * acc;
        }
    }
};

double sqNorm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}

void normalizeVec(std::vector<double>& v) {
    double n = std::sqrt(sqNorm(v));
    if (n > 0.0)
        for (double& x : v) x /= n;
}

// removes the radial component, keeping steps tangent to the unit sphere
void tangentize(std::vector<double>& g, const std::vector<double>& x) {
    double dot = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) dot += g[i] * x[i];
    for (std::size_t i = 0; i < g.size(); ++i) g[i] -= dot * x[i];
}

struct Objective {
    const StructureTensor& st;
    double mu;
    std::vector<double> z, zm;

    double eval(const std::vector<double>& x, const std::vector<double>& y) {
        st.bracketCoords(x, y, z);
        st.mBracketCoords(x, y, zm);
        double c = sqNorm(zm) - 1.0;
        return sqNorm(z) + mu * c * c;
    }

    void grad(const std::vector<double>& x, const std::vector<double>& y,
              std::vector<double>& gx, std::vector<double>& gy) {
        st.bracketCoords(x, y, z);
        st.mBracketCoords(x, y, zm);
        double c = sqNorm(zm) - 1.0;
        gx.assign(st.d, 0.0);
        gy.assign(st.d, 0.0);
        st.accumGradX(y, z, 2.0, st.d, 0, st.D, gx, st.d);
        st.accumGradY(x, z, 2.0, st.d, 0, st.D, gy, st.d);
        st.accumGradX(y, zm, 4.0 * mu * c, st.mCount, st.hCount, st.mCount, gx,
                      st.mCount);
        st.accumGradY(x, zm, 4.0 * mu * c, st.mCount, st.hCount, st.mCount, gy,
                      st.mCount);
    }
};

struct RestartOutcome {
    bool accepted = false;
    double residual = 0.0;
    double mBracket = 0.0;
    double finalPenalized = 0.0;
    std::vector<double> x, y;
};

void lmPolish(const StructureTensor& st, std::vector<double>& x,
              std::vector<double>& y) {
    const std::size_t d = st.d;
    const std::size_t nr = st.D + 1;
    Eigen::VectorXd r(nr);
    Eigen::MatrixXd jac(nr, 2 * d);
    std::vector<double> z, zm;
    double lambda = 1e-3;

    auto residual = [&](const std::vector<double>& xv, const std::vector<double>& yv,
                        Eigen::VectorXd& out) {
        st.bracketCoords(xv, yv, z);
        st.mBracketCoords(xv, yv, zm);
        for (std::size_t k = 0; k < st.D; ++k) out[k] = z[k];
        // pins the overall scale; the relative x/y scale is a gauge direction
        // the damping leaves alone
        out[st.D] = sqNorm(zm) - 1.0;
    };

    residual(x, y, r);
    for (int iter = 0; iter < 60; ++iter) {
        if (r.squaredNorm() < 1e-28) break;
        st.bracketCoords(x, y, z);
        st.mBracketCoords(x, y, zm);
        jac.setZero();
        for (std::size_t k = 0; k < st.D; ++k)
            for (std::size_t i = 0; i < d; ++i) {
                double dx = 0.0, dy = 0.0;
                for (std::size_t j = 0; j < d; ++j) {
                    if (j != i) dx += y[j] * st.at(i, j, k);
                    if (j != i) dy += x[j] * st.at(j, i, k);
                }
                jac(k, i) = dx;
                jac(k, d + i) = dy;
            }
        for (std::size_t i = 0; i < st.mCount; ++i) {
            double dx = 0.0, dy = 0.0;
            for (std::size_t k = 0; k < st.mCount; ++k)
                for (std::size_t j = 0; j < st.mCount; ++j) {
                    if (j == i) continue;
                    dx += 2.0 * zm[k] * y[j] * st.at(i, j, st.hCount + k);
                    dy += 2.0 * zm[k] * x[j] * st.at(j, i, st.hCount + k);
                }
            jac(st.D, i) = dx;
            jac(st.D, d + i) = dy;
        }
        Eigen::MatrixXd jtj = jac.transpose() * jac;
        Eigen::VectorXd jtr = jac.transpose() * r;
        bool stepped = false;
        for (int tries = 0; tries < 10; ++tries) {
            Eigen::MatrixXd a = jtj;
            for (std::size_t i = 0; i < 2 * d; ++i) a(i, i) += lambda;
            Eigen::VectorXd delta = a.ldlt().solve(-jtr);
            std::vector<double> xn = x, yn = y;
            for (std::size_t i = 0; i < d; ++i) {
                xn[i] += delta[i];
                yn[i] += delta[d + i];
            }
            Eigen::VectorXd rn(nr);
            residual(xn, yn, rn);
            if (rn.squaredNorm() < r.squaredNorm()) {
                x = xn;
                y = yn;
                r = rn;
                lambda = std::max(lambda / 3.0, 1e-12);
                stepped = true;
                break;
            }
            lambda *= 5.0;
        }
        if (!stepped) break;
    }
}

RestartOutcome runRestart(const Decomposition& dec, const StructureTensor& st,
                          std::size_t iterations, std::uint64_t seed,
                          std::size_t restart, double tolAccept, double thetaMin) {
    RestartOutcome out;
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + restart * 2654435761ULL + 7);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const std::size_t d = st.d;
    std::vector<double> x(d), y(d);
    for (double& v : x) v = gauss(rng);
    for (double& v : y) v = gauss(rng);
    normalizeVec(x);
    normalizeVec(y);

    Objective obj{st, 10.0, {}, {}};
    std::vector<double> gx, gy, xc(d), yc(d);
    double lr = 0.05;
    double f = obj.eval(x, y);
    const std::size_t s1 = (iterations * 2) / 5, s2 = (iterations * 7) / 10;
    for (std::size_t it = 0; it < iterations; ++it) {
        double mu = it < s1 ? 10.0 : (it < s2 ? 1e3 : 1e5);
        if (mu != obj.mu) {
            obj.mu = mu;
            f = obj.eval(x, y);
            lr = 0.05;
        }
        obj.grad(x, y, gx, gy);
        // scale left free: the penalty term fixes it, spheres only seed the draw
        for (std::size_t i = 0; i < d; ++i) {
            xc[i] = x[i] - lr * gx[i];
            yc[i] = y[i] - lr * gy[i];
        }
        double fc = obj.eval(xc, yc);
        if (fc < f) {
            x = xc;
            y = yc;
            f = fc;
            lr = std::min(lr * 1.25, 1.0);
        } else {
            lr *= 0.5;
            if (lr < 1e-12) lr = 1e-12;
        }
    }
    obj.mu = 1e5;
    out.finalPenalized = obj.eval(x, y);

    st.mBracketCoords(x, y, obj.zm);
    double mb = std::sqrt(sqNorm(obj.zm));
    if (std::fabs(mb - 1.0) < 0.01) {
        // bring the constraint to exactly 1 before the least-squares polish
        double s = 1.0 / std::sqrt(mb);
        for (double& v : x) v *= s;
        for (double& v : y) v *= s;
        lmPolish(st, x, y);
        Mat xm = combine(dec.p, x), ym = combine(dec.p, y);
        PairCheck check = verifyPair(dec, xm, ym, tolAccept, thetaMin);
        if (check.accepted) {
            out.accepted = true;
            out.residual = check.residual;
            out.mBracket = check.mBracketNorm;
            out.x = coords(check.xUnit, dec.p);
            out.y = coords(check.yUnit, dec.p);
        }
    }
    return out;
}

bool bracketClosesIntoH(const Decomposition& dec) {
    for (std::size_t i = 0; i < dec.m.size(); ++i)
        for (std::size_t j = i + 1; j < dec.m.size(); ++j)
            if (dec.projM(bracket(dec.m[i], dec.m[j])).norm() > 1e-9) return false;
    return true;
}

}  // namespace

SearchResult searchCounterexample(const Decomposition& dec, const SearchBudget& budget,
                                  std::uint64_t seed) {
    SearchResult result;
    result.x = Mat(dec.ambient);
    result.y = Mat(dec.ambient);
    if (bracketClosesIntoH(dec)) {
        // the constraint set is empty; nothing to search
        result.minPenalized = 1e5;
        return result;
    }
    StructureTensor st = StructureTensor::build(dec);
    std::vector<RestartOutcome> outcomes(budget.restarts);
    std::size_t threads = std::max<std::size_t>(1, budget.threads);
    threads = std::min(threads, std::max<std::size_t>(1, budget.restarts));
    auto worker = [&](std::size_t tid) {
        for (std::size_t r = tid; r < budget.restarts; r += threads)
            outcomes[r] = runRestart(dec, st, budget.iterations, seed, r,
                                     budget.tolAccept, budget.thetaMin);
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (std::thread& th : pool) th.join();
    }

    double minPen = 1e300;
    std::size_t best = budget.restarts;
    for (std::size_t r = 0; r < budget.restarts; ++r) {
        minPen = std::min(minPen, outcomes[r].finalPenalized);
        if (!outcomes[r].accepted) continue;
        if (best == budget.restarts || outcomes[r].residual < outcomes[best].residual)
            best = r;
    }
    result.minPenalized = budget.restarts ? minPen : 1e5;
    if (best != budget.restarts) {
        result.found = true;
        result.restartIndex = best;
        result.residual = outcomes[best].residual;
        result.mBracket = outcomes[best].mBracket;
        result.x = combine(dec.p, outcomes[best].x);
        result.y = combine(dec.p, outcomes[best].y);
    }
    return result;
}

EstimateResult estimateConstant(const Decomposition& dec, std::size_t restarts,
                                std::size_t iterations, std::uint64_t seed) {
    EstimateResult result;
    StructureTensor st = StructureTensor::build(dec);
    const std::size_t d = st.d;
    std::vector<double> z, zm, gx(d), gy(d), ax(d), ay(d), bx(d), by(d), xc(d), yc(d);

    auto ratio = [&](const std::vector<double>& x, const std::vector<double>& y) {
        st.bracketCoords(x, y, z);
        st.mBracketCoords(x, y, zm);
        double num = std::sqrt(sqNorm(zm));
        double den = std::max(std::sqrt(sqNorm(z)), 1e-12);
        return num / den;
    };
    auto smooth = [&](const std::vector<double>& x, const std::vector<double>& y) {
        st.bracketCoords(x, y, z);
        st.mBracketCoords(x, y, zm);
        return sqNorm(zm) / (sqNorm(z) + 1e-12);
    };

    for (std::size_t r = 0; r < restarts; ++r) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + r * 0x5851f42d4c957f2dULL +
                            11);
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::vector<double> x(d), y(d);
        for (double& v : x) v = gauss(rng);
        for (double& v : y) v = gauss(rng);
        normalizeVec(x);
        normalizeVec(y);
        double lr = 0.05;
        double f = smooth(x, y);
        for (std::size_t it = 0; it < iterations; ++it) {
            st.bracketCoords(x, y, z);
            st.mBracketCoords(x, y, zm);
            double a = sqNorm(zm), b = sqNorm(z) + 1e-12;
            ax.assign(d, 0.0);
            ay.assign(d, 0.0);
            bx.assign(d, 0.0);
            by.assign(d, 0.0);
            st.accumGradX(y, zm, 2.0, st.mCount, st.hCount, st.mCount, ax, st.mCount);
            st.accumGradY(x, zm, 2.0, st.mCount, st.hCount, st.mCount, ay, st.mCount);
            st.accumGradX(y, z, 2.0, st.d, 0, st.D, bx, st.d);
            st.accumGradY(x, z, 2.0, st.d, 0, st.D, by, st.d);
            for (std::size_t i = 0; i < d; ++i) {
                gx[i] = (ax[i] * b - a * bx[i]) / (b * b);
                gy[i] = (ay[i] * b - a * by[i]) / (b * b);
            }
            tangentize(gx, x);
            tangentize(gy, y);
            for (std::size_t i = 0; i < d; ++i) {
                xc[i] = x[i] + lr * gx[i];
                yc[i] = y[i] + lr * gy[i];
            }
            normalizeVec(xc);
            normalizeVec(yc);
            double fc = smooth(xc, yc);
            if (fc > f) {
                x = xc;
                y = yc;
                f = fc;
                lr = std::min(lr * 1.25, 1.0);
            } else {
                lr *= 0.5;
                if (lr < 1e-12) break;
            }
            if (ratio(x, y) > 1e6) break;
        }
        double best = ratio(x, y);
        // the smooth ascent stalls once ‖z‖ reaches the regularizer scale; a
        // least-squares refinement settles whether the ratio truly blows up
        std::vector<double> xp = x, yp = y;
        lmPolish(st, xp, yp);
        best = std::max(best, ratio(xp, yp));
        if (best > 1e6) {
            result.divergent = true;
            best = 1e6;
        }
        result.value = std::max(result.value, best);
    }
    return result;
}

}  // namespace nncurv
