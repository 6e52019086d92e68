#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "nncurv/chains.hpp"
#include "nncurv/criterion.hpp"
#include "nncurv/decomposition.hpp"
#include "nncurv/subspace.hpp"

using namespace nncurv;

TEST_CASE("catalog inventory") {
    CHECK(catalogIds().size() == 25);
    CHECK(listCatalog().size() == 25);
    CHECK_THROWS_AS(buildChain("no-such-chain"), std::invalid_argument);
}

TEST_CASE("every catalog chain is structurally sound") {
    for (const std::string& id : catalogIds()) {
        CAPTURE(id);
        Chain c = buildChain(id);
        CHECK(c.id == id);
        CHECK(closureResidual(c.g) < 1e-8);
        CHECK(closureResidual(c.k) < 1e-8);
        if (!c.h.empty()) CHECK(closureResidual(c.h) < 1e-8);
        CHECK(c.h.size() < c.k.size());
        CHECK(c.k.size() < c.g.size());
        for (const Mat& v : c.k) CHECK(spanResidual(v, c.g) < 1e-8);
        for (const Mat& v : c.h) CHECK(spanResidual(v, c.k) < 1e-8);
        for (const Mat& v : c.g) {
            CHECK(v.isSkewHermitian(1e-9));
            CHECK(v.respectsField(c.field, 1e-9));
        }
    }
}

TEST_CASE("dimension freeze for representative chains") {
    Chain a = buildChain("L4.1-1");
    CHECK(a.g.size() == 15);
    CHECK(a.k.size() == 9);
    CHECK(a.h.size() == 3);
    Decomposition da = decompose(a);
    CHECK(da.m.size() == 6);
    CHECK(da.s.size() == 6);

    Chain b = buildChain("T5.1-n2");
    CHECK(b.g.size() == 10);
    CHECK(b.k.size() == 6);
    CHECK(b.h.size() == 3);
    Decomposition db = decompose(b);
    CHECK(db.m.size() == 3);
    CHECK(db.s.size() == 4);

    CHECK(buildChain("L4.1-6").g.size() == 14);
    CHECK(buildChain("T6.5-g2-so4-su2").k.size() == 6);
}

TEST_CASE("decomposition blocks are invariant under the right actions") {
    Decomposition dec = decompose(buildChain("L4.1-2"));
    for (const Mat& h : dec.h)
        for (const Mat& m : dec.m)
            CHECK(spanResidual(bracket(h, m), dec.m) < 1e-8);
    for (const Mat& m : dec.m)
        for (const Mat& s : dec.s)
            CHECK(spanResidual(bracket(m, s), dec.s) < 1e-8);
}

TEST_CASE("recorded witness pairs verify with frozen margins") {
    for (const char* id :
         {"L4.1-1", "L4.1-2", "L4.1-3", "L4.1-5a", "L4.1-5b", "T6.5-sp2"}) {
        CAPTURE(id);
        Chain c = buildChain(id);
        REQUIRE(c.knownPair.has_value());
        Decomposition dec = decompose(c);
        PairCheck pc = verifyPair(dec, c.knownPair->first, c.knownPair->second);
        CHECK(pc.structuralOk);
        CHECK(pc.accepted);
        CHECK(pc.residual < 1e-12);
        CHECK(pc.mBracketNorm > 1e-3);
    }
}

TEST_CASE("first chain's pair has the exact expected margin") {
    Chain c = buildChain("L4.1-1");
    Decomposition dec = decompose(c);
    PairCheck pc = verifyPair(dec, c.knownPair->first, c.knownPair->second);
    CHECK(pc.residual == doctest::Approx(0.0));
    CHECK(pc.mBracketNorm ==
          doctest::Approx(std::sqrt(2.0) / 4.0).epsilon(1e-12));
}

TEST_CASE("quaternionic chain pair margins") {
    Chain c = buildChain("T6.5-sp2");
    Decomposition dec = decompose(c);
    const Mat& x = c.knownPair->first;
    const Mat& y = c.knownPair->second;
    CHECK(bracket(x, y).norm() < 1e-13);
    Mat mb = bracket(dec.projM(x), dec.projM(y));
    CHECK(mb.norm() == doctest::Approx(4.0).epsilon(1e-12));
    PairCheck pc = verifyPair(dec, x, y);
    CHECK(pc.mBracketNorm ==
          doctest::Approx(4.0 / (x.norm() * y.norm())).epsilon(1e-10));
}

TEST_CASE("symplectic chain m-bracket loses norm to the h-projection") {
    Chain c = buildChain("L4.1-5a");
    Decomposition dec = decompose(c);
    Mat xm = dec.projM(c.knownPair->first);
    Mat ym = dec.projM(c.knownPair->second);
    Mat full = bracket(xm, ym);
    CHECK(full.norm() == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(dec.projM(full).norm() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("involution chains carry consistent sigma data") {
    for (const char* id :
         {"C3.3-1-min", "C3.3-2-min", "C3.3-3-min", "C3.3-4-min", "L4.1-4"}) {
        CAPTURE(id);
        Chain c = buildChain(id);
        REQUIRE(c.sigma.has_value());
        Decomposition dec = decompose(c);
        for (const Mat& v : c.k)
            CHECK((c.sigma->apply(v) - v).norm() < 1e-8);
        for (const Mat& v : dec.s)
            CHECK((c.sigma->apply(v) + v).norm() < 1e-8);
        REQUIRE_FALSE(c.pinnedTorus.empty());
        for (const Mat& v : c.pinnedTorus)
            CHECK(spanResidual(v, dec.s) < 1e-7);
    }
}

TEST_CASE("expected tags match the catalog layout") {
    CHECK(buildChain("L4.1-3").expected == ExpectedTag::Fails);
    CHECK(buildChain("T5.1-n3").expected == ExpectedTag::HoldsProved);
    CHECK(buildChain("CONJ-sp-n3").expected == ExpectedTag::HoldsConjectured);
    CHECK(buildChain("SYM-so4-so5-so6").expected == ExpectedTag::SymmetricPair);
    CHECK(buildChain("C4.5-holds-mixed").expected == ExpectedTag::HoldsProved);
}

TEST_CASE("embedding helpers") {
    Mat j = interleavedJ(6);
    Mat jj = j.matmul(j);
    for (int d = 0; d < 6; ++d) CHECK(jj.at(d, d) == Quat(-1));
    CHECK(j.isSkewHermitian(1e-14));

    Mat small = skewE(2, 0, 1);
    Mat big = embedAt(small, 5, {1, 3});
    CHECK(big.at(1, 3) == Quat(1));
    CHECK(big.at(3, 1) == Quat(-1));
    CHECK(big.norm() == doctest::Approx(small.norm()));
}

TEST_CASE("fiber-scaled metric") {
    Decomposition dec = decompose(buildChain("T5.1-n2"));
    Mat vm = dec.m[0];
    Mat vs = dec.s[0];
    CHECK(metricGt(dec, 0.0, vm, vm) == doctest::Approx(1.0));
    CHECK(metricGt(dec, 0.5, vm, vm) == doctest::Approx(2.0));
    CHECK(metricGt(dec, 0.5, vs, vs) == doctest::Approx(1.0));
    CHECK(metricGt(dec, 0.5, vm, vs) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(metricGt(dec, -1.0, vm, vm) == doctest::Approx(0.5));
    CHECK_THROWS_AS(metricGt(dec, 1.0, vm, vm), std::domain_error);
}
