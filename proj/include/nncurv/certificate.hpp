#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nncurv/criterion.hpp"

namespace nncurv {

// Machine-checkable witness for a criterion failure: a commuting unit pair in
// p whose m-parts have a nonvanishing bracket component in m.
struct Certificate {
    int schemaVersion = 1;
    std::string chainId;
    std::string basisDigest;
    std::vector<double> xCoeffs, yCoeffs;  // coordinates in the chain's p-basis
    double residual = 0.0;
    double mBracketNorm = 0.0;
    double tolAccept = 1e-8;
    double thetaMin = 1e-4;
    std::uint64_t seed = 0;
    std::string origin = "SEARCHED";  // PAPER | CONSTRUCTED | SEARCHED | TRANSFERRED
    std::string createdAt;
    std::string frameGauge;

    bool operator==(const Certificate&) const = default;
};

// FNV-1a over the shortest-round-trip decimal serialization of the p-basis.
// Certificates refuse to verify against a chain with a different digest.
std::string pBasisDigest(const Decomposition& dec);

std::string serializeCertificate(const Certificate& c);
Certificate parseCertificate(const std::string& text);  // throws std::runtime_error

void writeCertificateFile(const Certificate& c, const std::string& path);
Certificate readCertificateFile(const std::string& path);

Certificate makeCertificate(const Decomposition& dec, const std::string& chainId,
                            const PairCheck& check, std::uint64_t seed,
                            const std::string& origin,
                            const std::string& frameGauge = "");

Mat certVector(const Decomposition& dec, const std::vector<double>& coeffs);

// Re-expresses a verified pair in a larger chain whose p and m contain the
// originals; the witness property carries over unchanged.
Certificate transferCertificate(const Decomposition& sub, const Decomposition& super,
                                const std::string& superChainId,
                                const Certificate& cert);

}  // namespace nncurv
