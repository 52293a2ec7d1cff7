#pragma once

// The verification run behind `klein verify`: six suites of exact checks and
// their text and JSON reports.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "klein/identity_check.hpp"

namespace klein {

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus s);

struct CheckResult {
    std::string id;
    /// The identity being checked, in one line.
    std::string claim;
    CheckStatus status = CheckStatus::pass;
    std::size_t cases = 0;
    /// Null on success; the failing case otherwise.
    nlohmann::ordered_json witness;
    /// Wall time of the batch that produced this check.
    double elapsed_ms = 0;
};

enum class OutputFormat { text, json };
/// "text" or "json"; throws PreconditionError otherwise.
OutputFormat parse_format(const std::string& s);

struct RunConfig {
    int window = 3;
    std::vector<long long> q_list{5, 13};
    std::vector<int> census_n{2, 4, 6};
    std::uint64_t seed = 1;
    OutputFormat format = OutputFormat::text;
    /// Report elapsed times; off by default so fixed-seed reports are
    /// byte-identical.
    bool timings = false;

    int coboundary_samples = 20;
    int module_samples = 50;
    int coordinate_samples = 30;
    int free_samples = 100;
    int topology_samples = 50;
    int valuation_bound = 2;

    /// Throws PreconditionError naming the offending value.
    void validate() const;
};

struct SuiteReport {
    std::string name;
    std::vector<CheckResult> checks;
    double elapsed_ms = 0;

    bool pass() const;
};

struct RunReport {
    RunConfig config;
    std::vector<SuiteReport> suites;

    bool pass() const;
    std::size_t count(CheckStatus s) const;
    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

SuiteReport cocycle_suite(const RunConfig& cfg);
SuiteReport algebra_suite(const RunConfig& cfg);
SuiteReport module_suite(const RunConfig& cfg);
SuiteReport localfield_suite(const RunConfig& cfg);
SuiteReport coordinate_suite(const RunConfig& cfg);
SuiteReport topology_suite(const RunConfig& cfg);

/// Validates the config and runs the six suites in order. A check that
/// throws is recorded as a failure with the exception message as witness.
RunReport run_verify(const RunConfig& cfg);

/// Same as cfg.format requires: the JSON document or the text table.
std::string render(const RunReport& r);

}  // namespace klein
