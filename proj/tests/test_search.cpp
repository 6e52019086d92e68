#include "doctest.h"

#include <cmath>

#include "nncurv/chains.hpp"
#include "nncurv/decomposition.hpp"
#include "nncurv/search.hpp"

using namespace nncurv;

TEST_CASE("search finds a witness on a small failing chain") {
    Decomposition dec = decompose(buildChain("C3.3-1-min"));
    SearchBudget b;
    b.restarts = 40;
    b.iterations = 1500;
    SearchResult r = searchCounterexample(dec, b, 0);
    REQUIRE(r.found);
    CHECK(r.residual < 1e-8);
    CHECK(r.mBracket > 1e-4);
    CHECK(r.restartIndex < b.restarts);
}

TEST_CASE("search result is independent of the thread count") {
    Decomposition dec = decompose(buildChain("C3.3-1-min"));
    SearchBudget one;
    one.restarts = 24;
    one.iterations = 1000;
    one.threads = 1;
    SearchBudget four = one;
    four.threads = 4;
    SearchResult a = searchCounterexample(dec, one, 3);
    SearchResult b = searchCounterexample(dec, four, 3);
    CHECK(a.found == b.found);
    CHECK(a.restartIndex == b.restartIndex);
    CHECK(a.residual == b.residual);
    CHECK(a.minPenalized == b.minPenalized);
}

TEST_CASE("symmetric chains short-circuit to none") {
    Decomposition dec = decompose(buildChain("SYM-so3-so4-so5"));
    SearchBudget b;
    b.restarts = 5;
    b.iterations = 100;
    SearchResult r = searchCounterexample(dec, b, 0);
    CHECK_FALSE(r.found);
    CHECK(r.minPenalized == doctest::Approx(1e5));
}

TEST_CASE("holding chains keep the penalized objective away from zero") {
    Decomposition dec = decompose(buildChain("T5.1-n2"));
    SearchBudget b;
    b.restarts = 30;
    b.iterations = 1200;
    SearchResult r = searchCounterexample(dec, b, 0);
    CHECK_FALSE(r.found);
    CHECK(r.minPenalized > 1e-4);
}

TEST_CASE("constant estimate matches the proved per-block bound") {
    Decomposition dec = decompose(buildChain("T5.1-n2"));
    EstimateResult e = estimateConstant(dec, 30, 400, 0);
    CHECK_FALSE(e.divergent);
    CHECK(e.value <= std::sqrt(2.0) + 1e-3);
    CHECK(e.value > 1.0);
}

TEST_CASE("constant estimate diverges on a failing chain") {
    Decomposition dec = decompose(buildChain("L4.1-1"));
    EstimateResult e = estimateConstant(dec, 20, 300, 0);
    CHECK(e.divergent);
    CHECK(e.value == doctest::Approx(1e6));
}

TEST_CASE("constant estimate is zero on a symmetric chain") {
    Decomposition dec = decompose(buildChain("SYM-u2-so4-so5"));
    EstimateResult e = estimateConstant(dec, 5, 100, 0);
    CHECK(e.value == doctest::Approx(0.0));
}

TEST_CASE("estimates are deterministic in the seed") {
    Decomposition dec = decompose(buildChain("CONJ-sp-n2"));
    EstimateResult a = estimateConstant(dec, 10, 300, 7);
    EstimateResult b = estimateConstant(dec, 10, 300, 7);
    CHECK(a.value == b.value);
    CHECK(a.divergent == b.divergent);
}
