#include "doctest.h"

#include <cstdio>
#include <regex>
#include <stdexcept>

#include "nncurv/algebra.hpp"
#include "nncurv/certificate.hpp"
#include "nncurv/chains.hpp"
#include "nncurv/criterion.hpp"
#include "nncurv/decomposition.hpp"
#include "nncurv/error.hpp"
#include "nncurv/search.hpp"
#include "nncurv/subspace.hpp"

using namespace nncurv;

namespace {

Certificate sampleCert(const char* id = "L4.1-1") {
    Chain c = buildChain(id);
    Decomposition dec = decompose(c);
    PairCheck pc = verifyPair(dec, c.knownPair->first, c.knownPair->second);
    return makeCertificate(dec, c.id, pc, 42, "PAPER", "catalog vectors");
}

// u(3) inside so(6), with a torus of disjoint rotations below it, realized in
// a fixed ambient size so the same subspaces sit inside so(6) and so(7).
Chain transferChain(bool fullOrthogonal) {
    Chain c;
    c.id = fullOrthogonal ? "TEST-super" : "TEST-sub";
    c.summary = "t3 < u(3) < so";
    c.field = Field::Real;
    c.ambient = 7;
    std::vector<std::size_t> six = {0, 1, 2, 3, 4, 5};
    c.g = fullOrthogonal
              ? orthonormalize(soBasis(7))
              : orthonormalize(embedAllAt(soBasis(6), 7, six));
    Basis so6 = orthonormalize(embedAllAt(soBasis(6), 7, six));
    Mat j = embedAt(interleavedJ(6), 7, six);
    c.k = orthonormalize(commutantIn(so6, j));
    c.h = orthonormalize(
        {embedAt(skewE(2, 0, 1), 7, {0, 1}), embedAt(skewE(2, 0, 1), 7, {2, 3}),
         embedAt(skewE(2, 0, 1), 7, {4, 5})});
    c.expected = ExpectedTag::Fails;
    return c;
}

}  // namespace

TEST_CASE("serialize and parse round-trip") {
    Certificate c = sampleCert();
    Certificate back = parseCertificate(serializeCertificate(c));
    CHECK(back == c);
    CHECK(c.schemaVersion == 1);
    CHECK(std::regex_match(
        c.createdAt, std::regex(R"(\d{4}-\d{2}-\d{2}T\d{2}:\d{2}:\d{2}Z)")));
}

TEST_CASE("file round-trip") {
    Certificate c = sampleCert("L4.1-2");
    const char* path = "/tmp/nncurv_test_cert.json";
    writeCertificateFile(c, path);
    CHECK(readCertificateFile(path) == c);
    std::remove(path);
}

TEST_CASE("digest separates chains and pins the basis") {
    Decomposition a = decompose(buildChain("L4.1-1"));
    Decomposition b = decompose(buildChain("L4.1-2"));
    CHECK(pBasisDigest(a) == pBasisDigest(a));
    CHECK(pBasisDigest(a) != pBasisDigest(b));
    CHECK(pBasisDigest(a).size() == 16);
    CHECK(sampleCert().basisDigest == pBasisDigest(a));
}

TEST_CASE("certificate vectors reproduce the verified pair") {
    Chain c = buildChain("L4.1-1");
    Decomposition dec = decompose(c);
    Certificate cert = sampleCert();
    Mat x = certVector(dec, cert.xCoeffs);
    Mat y = certVector(dec, cert.yCoeffs);
    PairCheck pc = verifyPair(dec, x, y, cert.tolAccept, cert.thetaMin);
    CHECK(pc.accepted);
    CHECK(pc.residual == doctest::Approx(cert.residual).epsilon(1e-12));
    CHECK(pc.mBracketNorm ==
          doctest::Approx(cert.mBracketNorm).epsilon(1e-12));
}

TEST_CASE("parsing rejects malformed input") {
    CHECK_THROWS_AS(parseCertificate("{not json"), std::runtime_error);
    CHECK_THROWS_AS(parseCertificate("{}"), std::runtime_error);
    Certificate c = sampleCert();
    std::string text = serializeCertificate(c);
    text.replace(text.find("chain_id"), 8, "chain_yd");
    CHECK_THROWS_AS(parseCertificate(text), std::runtime_error);
}

TEST_CASE("rejected pairs cannot become certificates") {
    Chain c = buildChain("L4.1-1");
    Decomposition dec = decompose(c);
    PairCheck pc = verifyPair(dec, dec.p[0], dec.p[0]);
    REQUIRE_FALSE(pc.accepted);
    CHECK_THROWS_AS(makeCertificate(dec, c.id, pc, 0, "SEARCHED"),
                    std::invalid_argument);
}

TEST_CASE("coefficient count must match the tangent dimension") {
    Decomposition dec = decompose(buildChain("L4.1-1"));
    CHECK_THROWS_AS(certVector(dec, {1.0, 2.0}), std::runtime_error);
}

TEST_CASE("transfer carries a witness into a larger ambient algebra") {
    Decomposition sub = decompose(transferChain(false));
    Decomposition super = decompose(transferChain(true));

    SearchBudget b;
    b.restarts = 80;
    b.iterations = 1500;
    SearchResult r = searchCounterexample(sub, b, 0);
    REQUIRE(r.found);
    PairCheck pc = verifyPair(sub, r.x, r.y);
    REQUIRE(pc.accepted);
    Certificate cert = makeCertificate(sub, "TEST-sub", pc, 0, "SEARCHED");

    Certificate moved = transferCertificate(sub, super, "TEST-super", cert);
    CHECK(moved.origin == "TRANSFERRED");
    CHECK(moved.chainId == "TEST-super");
    CHECK(moved.basisDigest == pBasisDigest(super));
    CHECK(moved.residual == doctest::Approx(cert.residual).epsilon(1e-12));
    CHECK(moved.mBracketNorm ==
          doctest::Approx(cert.mBracketNorm).epsilon(1e-12));

    PairCheck again = verifyPair(super, certVector(super, moved.xCoeffs),
                                 certVector(super, moved.yCoeffs));
    CHECK(again.accepted);
}

TEST_CASE("transfer onto the same chain is the identity in substance") {
    Decomposition dec = decompose(buildChain("L4.1-2"));
    Certificate cert = sampleCert("L4.1-2");
    Certificate same = transferCertificate(dec, dec, "L4.1-2", cert);
    CHECK(same.residual == doctest::Approx(cert.residual));
    CHECK(same.basisDigest == cert.basisDigest);
    CHECK(same.origin == "TRANSFERRED");
}

TEST_CASE("transfer refuses a shrinking ambient") {
    Decomposition sub = decompose(transferChain(false));
    Decomposition super = decompose(transferChain(true));
    SearchBudget b;
    b.restarts = 80;
    b.iterations = 1500;
    SearchResult r = searchCounterexample(super, b, 0);
    REQUIRE(r.found);
    PairCheck pc = verifyPair(super, r.x, r.y);
    REQUIRE(pc.accepted);
    Certificate cert = makeCertificate(super, "TEST-super", pc, 0, "SEARCHED");
    CHECK_THROWS_AS(transferCertificate(super, sub, "TEST-sub", cert),
                    ConstructionError);
}
