#ifndef SPCLI_PROBLEM_HPP
#define SPCLI_PROBLEM_HPP

#include "liesuper/forms.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace spcli {

using nlohmann::ordered_json;

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct ComputationError : std::runtime_error {
  explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

struct SpaceBlock {
  std::size_t even = 0, odd = 0;
  std::optional<std::pair<std::size_t, std::size_t>> split; // (n1, n2) of the even part
};

struct AlgebraBlock {
  std::string builtin; // "osp" | "p" | "gl" | "spin_w"; empty for custom
  int p = 0, q = 0;    // spin_w
  std::optional<std::vector<std::vector<std::string>>> form; // osp / p matrix override
  std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> custom;
};

struct TaskBlock {
  std::string name;
  std::size_t kmax = 8;
  unsigned degree = 2;
  unsigned seed = 12345;
  double tol = 1e-6;
  // killing
  std::string killing_mode = "metric"; // or "frame"
  std::vector<std::string> frame;
  std::optional<std::vector<std::vector<std::string>>> metric;
  // flow
  std::string field;
  double t0 = 0.0, t1 = 1.0;
  std::size_t steps = 1000;
  double escape_norm = 1e6;
  std::vector<std::vector<double>> points;
  // decompose
  std::size_t odd_params = 0;
  std::vector<std::pair<std::string, std::string>> components;
};

struct ProblemSpec {
  int version = 1;
  std::optional<SpaceBlock> space;
  std::optional<AlgebraBlock> algebra;
  TaskBlock task;

  // Echo of the normalized spec, used in reports and round-trip tests.
  ordered_json to_json() const;
};

// Strict parsing: unknown fields and version mismatches are rejected with a
// message naming the offending field.  `subcommand` must match task.name
// when both are present; an empty task name inherits the subcommand.
ProblemSpec parse_problem(const ordered_json& j, const std::string& subcommand);

// Task-specific requirements (space/algebra presence, field shapes).
void validate_problem(const ProblemSpec& spec);

liesuper::SuperAlgebraBasis build_algebra(const ProblemSpec& spec);

gsalg::Matrix parse_matrix(const std::vector<std::vector<std::string>>& rows);

} // namespace spcli

#endif
