#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "nncurv/chains.hpp"
#include "nncurv/decomposition.hpp"
#include "nncurv/error.hpp"
#include "nncurv/roots.hpp"
#include "nncurv/subspace.hpp"

using namespace nncurv;

namespace {

RootSystem decomposed(const Basis& raw, std::uint64_t seed = 1) {
    Basis alg = orthonormalize(raw);
    Basis torus = maximalTorusIn(alg, alg, seed);
    return rootDecomposition(alg, torus, seed);
}

double lengthSpread(const RootSystem& rs) {
    double lo = 1e300, hi = 0.0;
    for (const RootFrame& f : rs.pos) {
        lo = std::min(lo, f.alpha.norm());
        hi = std::max(hi, f.alpha.norm());
    }
    return hi / lo;
}

}  // namespace

TEST_CASE("positive root counts") {
    CHECK(decomposed(suBasis(3)).pos.size() == 3);
    CHECK(decomposed(soBasis(5)).pos.size() == 4);
    CHECK(decomposed(suBasis(4)).pos.size() == 6);
    CHECK(decomposed(g2Basis()).pos.size() == 6);
}

TEST_CASE("root length classes") {
    CHECK(lengthSpread(decomposed(suBasis(3))) == doctest::Approx(1.0));
    CHECK(lengthSpread(decomposed(soBasis(5))) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(lengthSpread(decomposed(g2Basis())) ==
          doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
}

TEST_CASE("frames satisfy the defining relations") {
    for (const Basis& raw : {suBasis(3), soBasis(5)}) {
        RootSystem rs = decomposed(raw);
        CHECK(rs.frameResidual() < 1e-8);
        for (const RootFrame& f : rs.pos) {
            CHECK(f.x.norm() == doctest::Approx(1.0).epsilon(1e-10));
            CHECK(f.y.norm() == doctest::Approx(1.0).epsilon(1e-10));
            // [x, y] recovers the dual vector of the root
            CHECK((bracket(f.x, f.y) - rs.dualVector(f.alpha)).norm() < 1e-8);
        }
    }
}

TEST_CASE("decomposition is deterministic in the seed") {
    RootSystem a = decomposed(suBasis(4), 9);
    RootSystem b = decomposed(suBasis(4), 9);
    REQUIRE(a.pos.size() == b.pos.size());
    for (std::size_t i = 0; i < a.pos.size(); ++i) {
        CHECK((a.pos[i].alpha - b.pos[i].alpha).norm() == 0.0);
        CHECK((a.pos[i].x - b.pos[i].x).norm() == 0.0);
    }
}

TEST_CASE("root lookup by value and by negation") {
    RootSystem rs = decomposed(soBasis(5));
    for (std::size_t i = 0; i < rs.pos.size(); ++i) {
        auto hit = findRoot(rs, rs.pos[i].alpha);
        REQUIRE(hit.has_value());
        CHECK(hit->first == i);
        CHECK(hit->second == 1);
        auto neg = findRoot(rs, -rs.pos[i].alpha);
        REQUIRE(neg.has_value());
        CHECK(neg->first == i);
        CHECK(neg->second == -1);
    }
    Eigen::VectorXd junk = rs.pos[0].alpha * 0.37;
    CHECK_FALSE(findRoot(rs, junk).has_value());
}

TEST_CASE("pair constants vanish exactly off the root lattice") {
    RootSystem rs = decomposed(suBasis(3));
    for (std::size_t i = 0; i < rs.pos.size(); ++i)
        for (std::size_t j = 0; j < rs.pos.size(); ++j) {
            if (i == j) continue;
            for (int eps : {1, -1}) {
                Eigen::VectorXd sum = rs.pos[i].alpha + eps * rs.pos[j].alpha;
                PairConstant pc = pairConstant(rs, i, j, eps);
                CHECK(pc.present == findRoot(rs, sum).has_value());
                if (pc.present)
                    CHECK(std::fabs(pc.re) + std::fabs(pc.im) > 1e-7);
            }
        }
}

TEST_CASE("rank-2 span types across the catalog algebras") {
    auto types = [](const Basis& raw) {
        RootSystem rs = decomposed(raw);
        std::set<Rank2Type> seen;
        for (std::size_t i = 0; i < rs.pos.size(); ++i)
            for (std::size_t j = i + 1; j < rs.pos.size(); ++j)
                seen.insert(rank2SpanType(rs, i, j));
        return seen;
    };

    std::set<Rank2Type> su3 = types(suBasis(3));
    CHECK(su3 == std::set<Rank2Type>{Rank2Type::A2});

    std::set<Rank2Type> so5 = types(soBasis(5));
    CHECK(so5 == std::set<Rank2Type>{Rank2Type::B2});

    std::set<Rank2Type> g2 = types(g2Basis());
    CHECK(g2 == std::set<Rank2Type>{Rank2Type::G2});

    std::set<Rank2Type> su4 = types(suBasis(4));
    CHECK(su4.count(Rank2Type::A2));
    CHECK(su4.count(Rank2Type::Reducible));
    CHECK_FALSE(su4.count(Rank2Type::B2));
}

TEST_CASE("parallel roots have no rank-2 plane") {
    RootSystem rs = decomposed(suBasis(3));
    CHECK_THROWS_AS(rank2SpanType(rs, 0, 0), ConstructionError);
}

TEST_CASE("involution regauge aligns frames with the eigenspaces") {
    Chain chain = buildChain("C3.3-1-min");
    REQUIRE(chain.sigma.has_value());
    Decomposition dec = decompose(chain);
    Basis torus = orthonormalize(chain.pinnedTorus);
    RootSystem rs = rootDecomposition(chain.g, torus, 3);
    involutionRegauge(rs, chain.k, dec.s);
    for (const RootFrame& f : rs.pos) {
        CHECK(spanResidual(f.x, chain.k) < 1e-6);
        CHECK(spanResidual(f.y, dec.s) < 1e-6);
        CHECK(f.x.norm() == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(f.y.norm() == doctest::Approx(1.0).epsilon(1e-8));
    }
}
