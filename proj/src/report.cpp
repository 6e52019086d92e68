#include "nncurv/report.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace nncurv {

bool consistentVerdict(ExpectedTag expected, VerdictTag computed) {
    switch (expected) {
        case ExpectedTag::SymmetricPair:
            return computed == VerdictTag::SymmetricPair;
        case ExpectedTag::Fails:
            return computed == VerdictTag::CounterexampleFound;
        case ExpectedTag::HoldsProved:
        case ExpectedTag::HoldsConjectured:
            return computed == VerdictTag::HoldsByClassification ||
                   computed == VerdictTag::NoCounterexampleFound;
    }
    return false;
}

Report runCatalogSuite(const SearchBudget& perChain, std::uint64_t seed) {
    Report report;
    for (const std::string& id : catalogIds()) {
        auto t0 = std::chrono::steady_clock::now();
        Chain chain = buildChain(id);
        Verdict v = classifyChain(chain, perChain, seed);
        auto t1 = std::chrono::steady_clock::now();
        ReportRow row;
        row.chainId = id;
        row.expected = expectedName(chain.expected);
        row.computed = verdictName(v.tag);
        row.taxonomyCase = v.taxonomyCase;
        if (v.certificate) {
            row.metricKind = "residual";
            row.metric = v.certificate->residual;
        } else if (v.tag == VerdictTag::NoCounterexampleFound) {
            row.metricKind = "C_estimate";
            row.metric = v.cEstimate;
        } else {
            row.metricKind = "-";
        }
        row.wallSec = std::chrono::duration<double>(t1 - t0).count();
        row.notes = v.notes;
        row.consistent = consistentVerdict(chain.expected, v.tag);
        report.allConsistent = report.allConsistent && row.consistent;
        report.rows.push_back(row);
    }
    return report;
}

std::string reportMarkdown(const Report& r) {
    std::ostringstream out;
    out << "| chain | expected | computed | case | metric | wall (s) | ok |\n";
    out << "|---|---|---|---|---|---|---|\n";
    char buf[64];
    for (const ReportRow& row : r.rows) {
        out << "| " << row.chainId << " | " << row.expected << " | " << row.computed
            << " | " << (row.taxonomyCase ? std::to_string(row.taxonomyCase) : "-")
            << " | ";
        if (row.metricKind == "-") {
            out << "-";
        } else {
            std::snprintf(buf, sizeof buf, "%s=%.3g", row.metricKind.c_str(),
                          row.metric);
            out << buf;
        }
        std::snprintf(buf, sizeof buf, "%.2f", row.wallSec);
        out << " | " << buf << " | " << (row.consistent ? "yes" : "NO") << " |\n";
    }
    out << "\nall consistent: " << (r.allConsistent ? "yes" : "NO") << "\n";
    return out.str();
}

std::string reportJson(const Report& r) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const ReportRow& row : r.rows) {
        nlohmann::ordered_json j;
        j["chain_id"] = row.chainId;
        j["expected"] = row.expected;
        j["computed"] = row.computed;
        j["taxonomy_case"] = row.taxonomyCase;
        j["metric_kind"] = row.metricKind;
        j["metric"] = row.metric;
        j["wall_sec"] = row.wallSec;
        j["notes"] = row.notes;
        j["consistent"] = row.consistent;
        rows.push_back(j);
    }
    nlohmann::ordered_json top;
    top["rows"] = rows;
    top["all_consistent"] = r.allConsistent;
    return top.dump(2) + "\n";
}

}  // namespace nncurv
