#pragma once

#include <string>
#include <vector>

#include "nncurv/classify.hpp"

namespace nncurv {

struct ReportRow {
    std::string chainId;
    std::string expected;
    std::string computed;
    int taxonomyCase = 0;
    std::string metricKind;  // "residual", "C_estimate", or "-"
    double metric = 0.0;
    double wallSec = 0.0;
    std::string notes;
    bool consistent = false;
};

struct Report {
    std::vector<ReportRow> rows;
    bool allConsistent = true;
};

bool consistentVerdict(ExpectedTag expected, VerdictTag computed);

// Runs every catalog chain through the decision pipeline with a per-chain
// budget and compares against the recorded expectation tags.
Report runCatalogSuite(const SearchBudget& perChain, std::uint64_t seed = 0);

std::string reportMarkdown(const Report& r);
std::string reportJson(const Report& r);

}  // namespace nncurv
