#include "nncurv/algebra.hpp"

#include <algorithm>
#include <array>

#include "nncurv/error.hpp"

namespace nncurv {

Basis soBasis(std::size_t n) {
    Basis b;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            b.push_back(skewE(n, i, j) * (1.0 / std::sqrt(2.0)));
    return b;
}

Basis suBasis(std::size_t n) {
    Basis gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            gens.push_back(skewE(n, i, j));
            gens.push_back(symF(n, i, j) * Quat::i());
        }
    for (std::size_t k = 0; k + 1 < n; ++k) {
        Mat d(n);
        d.at(k, k) = Quat::i();
        d.at(k + 1, k + 1) = -Quat::i();
        gens.push_back(d);
    }
    return orthonormalize(gens);
}

Basis uBasis(std::size_t n) {
    Basis gens = suBasis(n);
    Mat id(n);
    for (std::size_t k = 0; k < n; ++k) id.at(k, k) = Quat::i();
    gens.push_back(id);
    return orthonormalize(gens);
}

Basis spBasis(std::size_t n) {
    Basis gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) gens.push_back(skewE(n, i, j));
    for (const Quat& q : {Quat::i(), Quat::j(), Quat::k()})
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) gens.push_back(symF(n, i, j) * q);
    return orthonormalize(gens);
}

namespace {

int permSign3(const std::array<int, 3>& p) {
    int s = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

}  // namespace

Basis g2Basis() {
    // Alternating 3-form with stabilizer of compact exceptional type.
    struct Term { int a, b, c; double s; };
    const Term terms[] = {{0, 1, 6, 1}, {2, 3, 6, 1}, {4, 5, 6, 1}, {0, 2, 4, 1},
                          {0, 3, 5, -1}, {1, 2, 5, -1}, {1, 3, 4, -1}};
    static double phi[7][7][7];
    for (auto& p : phi)
        for (auto& q : p)
            for (double& v : q) v = 0.0;
    for (const Term& t : terms) {
        const int base[3] = {t.a, t.b, t.c};
        std::array<int, 3> perm = {0, 1, 2};
        do {
            phi[base[perm[0]]][base[perm[1]]][base[perm[2]]] = t.s * permSign3(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    Basis raw;  // unnormalized E generators; only the span matters here
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = i + 1; j < 7; ++j) raw.push_back(skewE(7, i, j));

    Eigen::MatrixXd con(35, 21);
    int row = 0;
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b)
            for (int c = b + 1; c < 7; ++c) {
                for (std::size_t col = 0; col < raw.size(); ++col) {
                    const Mat& B = raw[col];
                    double v = 0.0;
                    for (int r = 0; r < 7; ++r) {
                        v += B.at(r, a).w * phi[r][b][c];
                        v += B.at(r, b).w * phi[a][r][c];
                        v += B.at(r, c).w * phi[a][b][r];
                    }
                    con(row, col) = v;
                }
                ++row;
            }

    Eigen::MatrixXd ker = nullSpace(con, 1e-9);
    Basis out;
    for (long c = 0; c < ker.cols(); ++c) {
        Mat m(7);
        for (std::size_t i = 0; i < raw.size(); ++i) m.axpy(ker(i, c), raw[i]);
        out.push_back(m);
    }
    out = orthonormalize(out);
    if (out.size() != 14) throw ConstructionError("g2Basis: stabilizer dimension off");
    return out;
}

double closureResidual(const Basis& onb) {
    double worst = 0.0;
    for (std::size_t i = 0; i < onb.size(); ++i)
        for (std::size_t j = i + 1; j < onb.size(); ++j) {
            Mat br = bracket(onb[i], onb[j]);
            worst = std::max(worst, spanResidual(br, onb, false));
        }
    return worst;
}

bool isAbelian(const Basis& onb, double tol) {
    for (std::size_t i = 0; i < onb.size(); ++i)
        for (std::size_t j = i + 1; j < onb.size(); ++j)
            if (bracket(onb[i], onb[j]).norm() > tol) return false;
    return true;
}

Basis centralizerIn(const Basis& ambient, const std::vector<Mat>& elems,
                    double relTol) {
    if (ambient.empty()) return {};
    std::size_t n = ambient[0].dim();
    std::size_t amb = 4 * n * n;
    Eigen::MatrixXd lin(amb * elems.size(), ambient.size());
    for (std::size_t e = 0; e < elems.size(); ++e)
        for (std::size_t i = 0; i < ambient.size(); ++i)
            lin.block(e * amb, i, amb, 1) = flatten(bracket(ambient[i], elems[e]));
    Eigen::MatrixXd ker = nullSpace(lin, relTol);
    Basis out;
    for (long c = 0; c < ker.cols(); ++c) {
        Mat m(n);
        for (std::size_t i = 0; i < ambient.size(); ++i) m.axpy(ker(i, c), ambient[i]);
        out.push_back(m);
    }
    return orthonormalize(out);
}

Basis commutantIn(const Basis& ambient, const Mat& j, double relTol) {
    if (ambient.empty()) return {};
    std::size_t n = ambient[0].dim();
    std::size_t amb = 4 * n * n;
    Eigen::MatrixXd lin(amb, ambient.size());
    for (std::size_t i = 0; i < ambient.size(); ++i)
        lin.col(i) = flatten(ambient[i].matmul(j) - j.matmul(ambient[i]));
    Eigen::MatrixXd ker = nullSpace(lin, relTol);
    Basis out;
    for (long c = 0; c < ker.cols(); ++c) {
        Mat m(n);
        for (std::size_t i = 0; i < ambient.size(); ++i) m.axpy(ker(i, c), ambient[i]);
        out.push_back(m);
    }
    return orthonormalize(out);
}

Basis centerOf(const Basis& onb) {
    return centralizerIn(onb, onb);
}

Mat randomCombo(const Basis& onb, std::mt19937_64& rng) {
    if (onb.empty()) throw ConstructionError("randomCombo: empty basis");
    std::normal_distribution<double> nd(0.0, 1.0);
    Mat m(onb[0].dim());
    for (const Mat& b : onb) m.axpy(nd(rng), b);
    return m;
}

Basis maximalTorusIn(const Basis& probeSpace, const Basis& alg,
                     std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
    for (int trial = 0; trial < 5; ++trial) {
        Mat probe = randomCombo(probeSpace, rng);
        Basis c = centralizerIn(alg, {probe});
        if (isAbelian(c)) return c;
    }
    throw ConstructionError("maximalTorusIn: degenerate probes");
}

std::size_t rankOf(const Basis& alg, std::uint64_t seed) {
    if (alg.empty()) return 0;
    return maximalTorusIn(alg, alg, seed).size();
}

std::vector<Basis> splitIdeals(const Basis& alg, double tol) {
    Basis z = centerOf(alg);
    Basis ss = z.empty() ? orthonormalize(alg) : complementWithin(orthonormalize(alg), z);
    std::vector<Basis> ideals;
    Basis remaining = ss;
    while (!remaining.empty()) {
        Basis ideal = {remaining.front()};
        bool grew = true;
        while (grew) {
            grew = false;
            for (const Mat& b : ss) {
                for (std::size_t i = 0; i < ideal.size(); ++i) {
                    Mat w = bracket(b, ideal[i]);
                    Mat res = w - project(w, ideal);
                    double r = res.norm();
                    if (r > tol) {
                        ideal.push_back(res * (1.0 / r));
                        grew = true;
                    }
                }
            }
        }
        ideal = orthonormalize(ideal);
        ideals.push_back(ideal);
        remaining = complementWithin(remaining, ideal);
    }
    return ideals;
}

}  // namespace nncurv
