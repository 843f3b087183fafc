#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "symedge/conjectures.hpp"

namespace symedge {

struct SurveyConfig {
    std::string conjecture = "B";  // "A", "B" or "C"
    int k = 2;
    std::optional<Family> family;  // unfiltered when absent
    int jobs = 1;
    double timeout_seconds = 60;
    std::uint64_t seed = 1;
    CertifyStrategy strategy = CertifyStrategy::both;
};

/// Exit codes: 0 no refutation, 2 input error, 3 refutation found.
struct SurveyResult {
    nlohmann::ordered_json report;
    int exit_code = 0;
    int refutations = 0;
    int input_errors = 0;
};

/// Runs the configured conjecture check over a stream of graph6 lines.
/// Graphs outside the requested family are reported as filtered, not as
/// refutations; malformed lines are recorded with their line number and
/// processing continues. Reports are assembled in input order regardless
/// of worker count.
SurveyResult survey(const std::vector<std::string>& graph6_lines, const SurveyConfig& config);

/// The graph6 lines of the stream whose graphs lie in the family.
std::vector<std::string> filter_family(const std::vector<std::string>& graph6_lines,
                                       Family family);

}  // namespace symedge
