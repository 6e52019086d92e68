#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "nncurv.h"

namespace {

using nlohmann::ordered_json;

std::string takeString(char* s) {
    if (!s) return {};
    std::string out = s;
    nncurv_string_free(s);
    return out;
}

std::size_t defaultRestarts() {
    if (const char* env = std::getenv("NNCURV_BUDGET")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring non-integer NNCURV_BUDGET\n";
    }
    return 200;
}

std::size_t defaultThreads() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

bool writeFileOrStdout(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out.good()) {
        std::cerr << "error: cannot write " << path << "\n";
        return false;
    }
    return true;
}

int runCatalogList(const std::string& format) {
    std::string listing = takeString(nncurv_catalog_list_json());
    if (listing.empty()) {
        std::cerr << "error: catalog unavailable\n";
        return 4;
    }
    if (format == "json") {
        std::cout << listing;
        return 0;
    }
    ordered_json rows = ordered_json::parse(listing);
    std::size_t wid = 5, wexp = 8;
    for (const auto& r : rows) {
        wid = std::max(wid, r["id"].get<std::string>().size());
        wexp = std::max(wexp, r["expected"].get<std::string>().size());
    }
    auto pad = [](const std::string& s, std::size_t w) {
        return s + std::string(w - s.size() + 2, ' ');
    };
    std::cout << pad("id", wid) << pad("expected", wexp) << "chain\n";
    for (const auto& r : rows)
        std::cout << pad(r["id"].get<std::string>(), wid)
                  << pad(r["expected"].get<std::string>(), wexp)
                  << r["summary"].get<std::string>() << "\n";
    return 0;
}

int runAnalyze(const std::string& id, std::size_t restarts, std::size_t iterations,
               std::uint64_t seed, double tol, std::size_t threads,
               const std::string& outPath) {
    char* err = nullptr;
    nncurv_chain* chain = nncurv_chain_build(id.c_str(), &err);
    if (!chain) {
        std::cerr << "error: " << takeString(err) << "\n";
        return 1;
    }
    ordered_json opts;
    opts["restarts"] = restarts;
    opts["iterations"] = iterations;
    opts["threads"] = threads;
    opts["seed"] = seed;
    opts["tol_accept"] = tol;
    char* verdict = nullptr;
    char* cert = nullptr;
    int rc = nncurv_analyze(chain, opts.dump().c_str(), &verdict, &cert, &err);
    nncurv_chain_free(chain);
    if (rc == 1 || rc == 4) {
        std::cerr << "error: " << takeString(err) << "\n";
        return rc;
    }
    std::cout << takeString(verdict);
    std::string certText = takeString(cert);
    if (!outPath.empty()) {
        if (certText.empty()) {
            std::cerr << "note: no certificate to write\n";
        } else if (!writeFileOrStdout(outPath, certText)) {
            return 1;
        } else {
            std::cerr << "certificate written to " << outPath << "\n";
        }
    }
    return rc;
}

int runVerify(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return 1;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    char* report = nullptr;
    char* err = nullptr;
    int rc = nncurv_verify_certificate_json(buf.str().c_str(), &report, &err);
    std::string reportText = takeString(report);
    if (!reportText.empty()) std::cout << reportText;
    std::string errText = takeString(err);
    if (!errText.empty()) std::cerr << "error: " << errText << "\n";
    return rc;
}

int runReport(std::size_t restarts, std::size_t iterations, std::uint64_t seed,
              std::size_t threads, const std::string& format,
              const std::string& outPath) {
    ordered_json opts;
    opts["restarts"] = restarts;
    opts["iterations"] = iterations;
    opts["threads"] = threads;
    opts["seed"] = seed;
    opts["format"] = format;
    char* report = nullptr;
    char* err = nullptr;
    int rc = nncurv_report_catalog(opts.dump().c_str(), &report, &err);
    std::string reportText = takeString(report);
    std::string errText = takeString(err);
    if (rc == 1) {
        std::cerr << "error: " << errText << "\n";
        return 1;
    }
    if (!writeFileOrStdout(outPath, reportText)) return 1;
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"compact Lie algebra chains: decompositions, commuting-pair "
                 "certificates, and criterion verdicts"};
    app.require_subcommand(1);

    auto* catalog = app.add_subcommand("catalog", "catalog inspection");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "list the built-in chains");
    std::string listFormat = "table";
    list->add_option("--format", listFormat, "table or json")
        ->check(CLI::IsMember({"table", "json"}));

    auto* analyze = app.add_subcommand("analyze", "run the decision pipeline");
    std::string analyzeId;
    std::size_t restarts = defaultRestarts();
    std::size_t iterations = 2000;
    std::uint64_t seed = 0;
    double tol = 1e-8;
    std::size_t threads = defaultThreads();
    std::string outPath;
    analyze->add_option("id", analyzeId, "catalog chain id")->required();
    analyze->add_option("--budget", restarts, "search restarts");
    analyze->add_option("--iterations", iterations, "iterations per restart");
    analyze->add_option("--seed", seed, "deterministic seed");
    analyze->add_option("--tol", tol, "commutator acceptance tolerance");
    analyze->add_option("--threads", threads, "concurrent restart workers");
    analyze->add_option("--out", outPath, "certificate output path");

    auto* verify = app.add_subcommand("verify", "check a certificate file");
    std::string verifyPath;
    verify->add_option("path", verifyPath, "certificate file")->required();

    auto* report = app.add_subcommand("report", "run the whole catalog");
    std::string suite = "paper";
    std::string reportFormat = "md";
    std::string reportOut;
    std::size_t reportRestarts = 0;
    std::size_t reportIterations = 1500;
    report->add_option("--suite", suite, "suite name (paper)")
        ->check(CLI::IsMember({"paper"}));
    report->add_option("--format", reportFormat, "md or json")
        ->check(CLI::IsMember({"md", "json"}));
    report->add_option("--out", reportOut, "report output path");
    report->add_option("--budget", reportRestarts, "search restarts per chain");
    report->add_option("--iterations", reportIterations, "iterations per restart");
    report->add_option("--seed", seed, "deterministic seed");
    report->add_option("--threads", threads, "concurrent restart workers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    }

    if (list->parsed()) return runCatalogList(listFormat);
    if (analyze->parsed())
        return runAnalyze(analyzeId, restarts, iterations, seed, tol, threads,
                          outPath);
    if (verify->parsed()) return runVerify(verifyPath);
    if (report->parsed()) {
        std::size_t r = reportRestarts;
        if (r == 0) {
            r = 60;
            if (const char* env = std::getenv("NNCURV_BUDGET")) {
                char* end = nullptr;
                unsigned long v = std::strtoul(env, &end, 10);
                if (end && *end == '\0' && v > 0) r = v;
            }
        }
        return runReport(r, reportIterations, seed, threads, reportFormat,
                         reportOut);
    }
    return 1;
}
