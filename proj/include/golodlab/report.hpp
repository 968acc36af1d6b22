#ifndef GOLODLAB_REPORT_HPP
#define GOLODLAB_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "golodlab/golod.hpp"
#include "golodlab/problem.hpp"

namespace golod {

// Insertion-ordered JSON so reports serialize byte-identically across runs.
using Json = nlohmann::ordered_json;

extern const char* const kToolName;
extern const char* const kToolVersion;
constexpr int kSchemaVersion = 1;
constexpr int kDefaultTruncation = 5;

Json polynomial_to_json(const Polynomial& f);
Json koszul_element_to_json(const KoszulElement& z);
Json series_to_json(const SeriesTruncation& s);
Json resolution_to_json(const Resolution& res);
Json betti_to_json(const BettiTable& betti);
Json certificate_to_json(const GolodCertificate& cert);

struct RunOptions {
    std::string command;  // resolve | koszul | golod-certify | poincare
    int truncate = kDefaultTruncation;
    bool full_degree_scan = false;
    long step_budget = -1;  // negative: unlimited
};

struct RunResult {
    Json report;          // envelope: schema, tool, command, canonical, timing
    std::string summary;  // human-readable lines for stdout
    int exit_code = 0;    // 0 pass, 1 mathematical failure
};

// Dispatch one analysis over a parsed problem. Input errors throw; they are
// the caller's exit code 2.
RunResult run_command(const ProblemSpec& spec, const RunOptions& opt);

struct VerifyResult {
    bool pass = true;
    std::vector<std::string> failures;
};

// Re-checks a stored certificate from its serialized form alone: cycles via
// the differential, power membership via the stored witnesses and normal
// forms, pairwise products via wedge, series coefficient lists. No
// resolution or homology recomputation.
VerifyResult verify_certificate_json(const Json& cert);

}  // namespace golod

#endif
