#include "nncurv/certificate.hpp"

#include <charconv>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "nncurv/error.hpp"

namespace nncurv {

namespace {

using ordered_json = nlohmann::ordered_json;

void appendShortest(std::string& out, double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
}

std::string nowUtcIso() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

std::string pBasisDigest(const Decomposition& dec) {
    std::string canon = "p/" + std::to_string(dec.p.size()) + "/" +
                        std::to_string(dec.ambient) + "/";
    for (const Mat& b : dec.p) {
        for (std::size_t r = 0; r < b.dim(); ++r)
            for (std::size_t c = 0; c < b.dim(); ++c) {
                const Quat& q = b.at(r, c);
                for (double comp : {q.w, q.x, q.y, q.z}) {
                    appendShortest(canon, comp);
                    canon.push_back(',');
                }
            }
        canon.push_back(';');
    }
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char ch : canon) {
        hash ^= ch;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

std::string serializeCertificate(const Certificate& c) {
    ordered_json j;
    j["schema_version"] = c.schemaVersion;
    j["chain_id"] = c.chainId;
    j["basis_digest"] = c.basisDigest;
    j["X_coeffs"] = c.xCoeffs;
    j["Y_coeffs"] = c.yCoeffs;
    j["residual_commutator"] = c.residual;
    j["m_bracket_norm"] = c.mBracketNorm;
    j["tolerances"] = ordered_json{{"tol_accept", c.tolAccept}, {"theta_min", c.thetaMin}};
    j["seed"] = c.seed;
    j["origin"] = c.origin;
    j["created_at"] = c.createdAt;
    j["frame_gauge"] = c.frameGauge;
    return j.dump(2) + "\n";
}

Certificate parseCertificate(const std::string& text) {
    try {
        ordered_json j = ordered_json::parse(text);
        Certificate c;
        c.schemaVersion = j.at("schema_version").get<int>();
        c.chainId = j.at("chain_id").get<std::string>();
        c.basisDigest = j.at("basis_digest").get<std::string>();
        c.xCoeffs = j.at("X_coeffs").get<std::vector<double>>();
        c.yCoeffs = j.at("Y_coeffs").get<std::vector<double>>();
        c.residual = j.at("residual_commutator").get<double>();
        c.mBracketNorm = j.at("m_bracket_norm").get<double>();
        c.tolAccept = j.at("tolerances").at("tol_accept").get<double>();
        c.thetaMin = j.at("tolerances").at("theta_min").get<double>();
        c.seed = j.at("seed").get<std::uint64_t>();
        c.origin = j.at("origin").get<std::string>();
        c.createdAt = j.at("created_at").get<std::string>();
        c.frameGauge = j.value("frame_gauge", std::string{});
        return c;
    } catch (const ordered_json::exception& e) {
        throw std::runtime_error(std::string{"certificate parse: "} + e.what());
    }
}

void writeCertificateFile(const Certificate& c, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << serializeCertificate(c);
    if (!out.good()) throw std::runtime_error("write failed: " + path);
}

Certificate readCertificateFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parseCertificate(buf.str());
}

Certificate makeCertificate(const Decomposition& dec, const std::string& chainId,
                            const PairCheck& check, std::uint64_t seed,
                            const std::string& origin, const std::string& frameGauge) {
    if (!check.accepted) throw std::invalid_argument("pair was not accepted");
    Certificate c;
    c.chainId = chainId;
    c.basisDigest = pBasisDigest(dec);
    c.xCoeffs = coords(check.xUnit, dec.p);
    c.yCoeffs = coords(check.yUnit, dec.p);
    c.residual = check.residual;
    c.mBracketNorm = check.mBracketNorm;
    c.seed = seed;
    c.origin = origin;
    c.createdAt = nowUtcIso();
    c.frameGauge = frameGauge;
    return c;
}

Mat certVector(const Decomposition& dec, const std::vector<double>& coeffs) {
    if (coeffs.size() != dec.p.size())
        throw std::runtime_error("coefficient count does not match the p-basis");
    return combine(dec.p, coeffs);
}

Certificate transferCertificate(const Decomposition& sub, const Decomposition& super,
                                const std::string& superChainId,
                                const Certificate& cert) {
    for (const Mat& v : sub.p)
        if (spanResidual(v, super.p) > 1e-8)
            throw ConstructionError("transfer: p not contained in the target p");
    for (const Mat& v : sub.m)
        if (spanResidual(v, super.m) > 1e-8)
            throw ConstructionError("transfer: m not contained in the target m");
    Mat x = certVector(sub, cert.xCoeffs);
    Mat y = certVector(sub, cert.yCoeffs);
    PairCheck check = verifyPair(super, x, y, cert.tolAccept, cert.thetaMin);
    if (!check.accepted)
        throw ConstructionError("transfer: pair fails on the target chain (" +
                               check.reason + ")");
    Certificate out = makeCertificate(super, superChainId, check, cert.seed,
                                      "TRANSFERRED", cert.frameGauge);
    out.tolAccept = cert.tolAccept;
    out.thetaMin = cert.thetaMin;
    return out;
}

}  // namespace nncurv
