#ifndef SPCLI_RUNNER_HPP
#define SPCLI_RUNNER_HPP

#include "cli/problem.hpp"

namespace spcli {

inline constexpr const char* kToolName = "superprolong";
inline constexpr const char* kToolVersion = "0.1.0";

// Runs a validated spec and produces the JSON report.  Throws
// ValidationError / ComputationError for the corresponding exit codes.
ordered_json run_problem(const ProblemSpec& spec, bool with_timing = false);

// Human-readable view derived from the same report data.
std::string render_table(const ordered_json& report);

} // namespace spcli

#endif
