#include "doctest.h"

#include "nncurv/algebra.hpp"
#include "nncurv/chains.hpp"
#include "nncurv/subspace.hpp"

using namespace nncurv;

TEST_CASE("classical basis dimensions") {
    CHECK(soBasis(5).size() == 10);
    CHECK(soBasis(7).size() == 21);
    CHECK(suBasis(3).size() == 8);
    CHECK(suBasis(4).size() == 15);
    CHECK(uBasis(3).size() == 9);
    CHECK(spBasis(2).size() == 10);
    CHECK(spBasis(3).size() == 21);
    CHECK(g2Basis().size() == 14);
}

TEST_CASE("bases close under the bracket") {
    for (const Basis& raw :
         {soBasis(5), suBasis(3), uBasis(2), spBasis(2), g2Basis()}) {
        Basis onb = orthonormalize(raw);
        CHECK(closureResidual(onb) < 1e-8);
    }
}

TEST_CASE("ranks of the catalog ambient algebras") {
    CHECK(rankOf(orthonormalize(suBasis(3))) == 2);
    CHECK(rankOf(orthonormalize(suBasis(4))) == 3);
    CHECK(rankOf(orthonormalize(soBasis(7))) == 3);
    CHECK(rankOf(orthonormalize(spBasis(3))) == 3);
    CHECK(rankOf(orthonormalize(g2Basis())) == 2);
}

TEST_CASE("maximal torus in so(5) is two dimensional and abelian") {
    Basis alg = orthonormalize(soBasis(5));
    Basis t = maximalTorusIn(alg, alg, 1);
    CHECK(t.size() == 2);
    CHECK(isAbelian(t));
}

TEST_CASE("center detection") {
    CHECK(centerOf(orthonormalize(suBasis(3))).empty());
    Basis cu = centerOf(orthonormalize(uBasis(3)));
    REQUIRE(cu.size() == 1);
    // the center of u(n) is the imaginary scalar line
    Mat scalar(3);
    for (int d = 0; d < 3; ++d) scalar.at(d, d) = Quat::i();
    CHECK(spanResidual(scalar, cu) < 1e-10);
}

TEST_CASE("commutant of the rotation structure inside so(4)") {
    Basis so4 = orthonormalize(soBasis(4));
    Mat j = interleavedJ(4);
    Basis u2 = commutantIn(so4, j);
    CHECK(u2.size() == 4);
    for (const Mat& v : u2)
        CHECK(bracket(v, j).norm() < 1e-10);
}

TEST_CASE("centralizer of a torus inside su(3)") {
    Basis su3 = orthonormalize(suBasis(3));
    Mat t(3);
    t.at(0, 0) = Quat::i();
    t.at(1, 1) = Quat::i() * -1.0;
    Basis c = centralizerIn(su3, {t});
    // distinct diagonal eigenvalues leave only the torus itself
    CHECK(c.size() == 2);
}

TEST_CASE("ideal split sees through a product in pure position") {
    Basis a = embedAllAt(orthonormalize(suBasis(2)), 4, {0, 1});
    Basis b = embedAllAt(orthonormalize(suBasis(2)), 4, {2, 3});
    Basis prod = a;
    prod.insert(prod.end(), b.begin(), b.end());
    std::vector<Basis> ideals = splitIdeals(prod);
    REQUIRE(ideals.size() == 2);
    CHECK(ideals[0].size() == 3);
    CHECK(ideals[1].size() == 3);
    CHECK(splitIdeals(orthonormalize(suBasis(3))).size() == 1);
}
