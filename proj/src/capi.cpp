#include "nncurv.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>

#include "json.hpp"
#include "nncurv/classify.hpp"
#include "nncurv/error.hpp"
#include "nncurv/report.hpp"

using nlohmann::ordered_json;

struct nncurv_chain {
    nncurv::Chain chain;
};

namespace {

char* dupString(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void setOut(char** slot, const std::string& s) {
    if (slot) *slot = dupString(s);
}

nncurv::SearchBudget budgetFromOptions(const ordered_json& opts) {
    nncurv::SearchBudget b;
    b.restarts = opts.value("restarts", b.restarts);
    b.iterations = opts.value("iterations", b.iterations);
    b.threads = opts.value("threads", b.threads);
    b.tolAccept = opts.value("tol_accept", b.tolAccept);
    b.thetaMin = opts.value("theta_min", b.thetaMin);
    return b;
}

ordered_json parseOptions(const char* options_json) {
    if (!options_json || !*options_json) return ordered_json::object();
    return ordered_json::parse(options_json);
}

ordered_json verdictJson(const nncurv::Verdict& v) {
    ordered_json j;
    j["tag"] = nncurv::verdictName(v.tag);
    j["taxonomy_case"] = v.taxonomyCase;
    j["notes"] = v.notes;
    if (v.certificate) {
        j["residual"] = v.certificate->residual;
        j["m_bracket_norm"] = v.certificate->mBracketNorm;
        j["origin"] = v.certificate->origin;
    }
    if (v.tag == nncurv::VerdictTag::NoCounterexampleFound) {
        j["c_estimate"] = v.cEstimate;
        j["c_divergent"] = v.cDivergent;
        j["min_penalized"] = v.minPenalized;
    }
    j["budget_used"] = v.budgetUsed;
    return j;
}

}  // namespace

extern "C" {

const char* nncurv_version(void) { return "1.0.0"; }

void nncurv_string_free(char* s) { std::free(s); }

char* nncurv_catalog_list_json(void) {
    try {
        ordered_json rows = ordered_json::array();
        for (const nncurv::CatalogRow& r : nncurv::listCatalog()) {
            ordered_json j;
            j["id"] = r.id;
            j["expected"] = r.expected;
            j["summary"] = r.summary;
            rows.push_back(j);
        }
        return dupString(rows.dump(2) + "\n");
    } catch (const std::exception&) {
        return nullptr;
    }
}

nncurv_chain* nncurv_chain_build(const char* id, char** err) {
    if (!id) {
        setOut(err, "missing chain id");
        return nullptr;
    }
    try {
        auto* handle = new nncurv_chain{nncurv::buildChain(id)};
        return handle;
    } catch (const std::exception& e) {
        setOut(err, e.what());
        return nullptr;
    }
}

void nncurv_chain_free(nncurv_chain* chain) { delete chain; }

char* nncurv_chain_info_json(const nncurv_chain* chain) {
    if (!chain) return nullptr;
    try {
        const nncurv::Chain& c = chain->chain;
        ordered_json j;
        j["id"] = c.id;
        j["summary"] = c.summary;
        j["expected"] = nncurv::expectedName(c.expected);
        j["field"] = nncurv::fieldName(c.field);
        j["ambient"] = c.ambient;
        j["dims"] = {{"g", c.g.size()}, {"k", c.k.size()}, {"h", c.h.size()}};
        j["has_involution"] = c.sigma.has_value();
        j["has_recorded_pair"] = c.knownPair.has_value();
        return dupString(j.dump(2) + "\n");
    } catch (const std::exception&) {
        return nullptr;
    }
}

int nncurv_analyze(const nncurv_chain* chain, const char* options_json,
                   char** verdict_json, char** certificate_json, char** err) {
    if (verdict_json) *verdict_json = nullptr;
    if (certificate_json) *certificate_json = nullptr;
    if (!chain) {
        setOut(err, "null chain");
        return 1;
    }
    try {
        ordered_json opts = parseOptions(options_json);
        nncurv::SearchBudget budget = budgetFromOptions(opts);
        std::uint64_t seed = opts.value("seed", std::uint64_t{0});
        nncurv::Verdict v = nncurv::classifyChain(chain->chain, budget, seed);
        setOut(verdict_json, verdictJson(v).dump(2) + "\n");
        if (v.certificate)
            setOut(certificate_json, nncurv::serializeCertificate(*v.certificate));
        return v.tag == nncurv::VerdictTag::NoCounterexampleFound ? 3 : 0;
    } catch (const nncurv::ConstructionError& e) {
        setOut(err, e.what());
        return 4;
    } catch (const std::exception& e) {
        setOut(err, e.what());
        return 1;
    }
}

int nncurv_verify_certificate_json(const char* certificate_json,
                                   char** report_json, char** err) {
    if (report_json) *report_json = nullptr;
    if (!certificate_json) {
        setOut(err, "null certificate");
        return 1;
    }
    nncurv::Certificate cert;
    try {
        cert = nncurv::parseCertificate(certificate_json);
    } catch (const std::exception& e) {
        setOut(err, std::string("malformed certificate: ") + e.what());
        return 1;
    }
    try {
        nncurv::Chain chain = nncurv::buildChain(cert.chainId);
        nncurv::Decomposition dec = nncurv::decompose(chain);
        ordered_json j;
        std::string digest = nncurv::pBasisDigest(dec);
        bool digestOk = digest == cert.basisDigest;
        j["digest_ok"] = digestOk;
        if (!digestOk) {
            j["accepted"] = false;
            j["reason"] = "basis digest mismatch";
            setOut(report_json, j.dump(2) + "\n");
            return 2;
        }
        nncurv::Mat x = nncurv::certVector(dec, cert.xCoeffs);
        nncurv::Mat y = nncurv::certVector(dec, cert.yCoeffs);
        nncurv::PairCheck check =
            nncurv::verifyPair(dec, x, y, cert.tolAccept, cert.thetaMin);
        j["accepted"] = check.accepted;
        j["reason"] = check.reason;
        j["residual"] = check.residual;
        j["m_bracket_norm"] = check.mBracketNorm;
        setOut(report_json, j.dump(2) + "\n");
        return check.accepted ? 0 : 2;
    } catch (const std::exception& e) {
        setOut(err, e.what());
        return 1;
    }
}

int nncurv_report_catalog(const char* options_json, char** report, char** err) {
    if (report) *report = nullptr;
    try {
        ordered_json opts = parseOptions(options_json);
        nncurv::SearchBudget budget;
        budget.restarts = opts.value("restarts", std::size_t{60});
        budget.iterations = opts.value("iterations", std::size_t{1500});
        budget.threads = opts.value("threads", budget.threads);
        std::uint64_t seed = opts.value("seed", std::uint64_t{0});
        std::string format = opts.value("format", std::string("md"));
        nncurv::Report rep = nncurv::runCatalogSuite(budget, seed);
        setOut(report, format == "json" ? nncurv::reportJson(rep)
                                        : nncurv::reportMarkdown(rep));
        return rep.allConsistent ? 0 : 2;
    } catch (const std::exception& e) {
        setOut(err, e.what());
        return 1;
    }
}

}  // extern "C"
