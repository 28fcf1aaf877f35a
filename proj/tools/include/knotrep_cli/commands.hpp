#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "knotrep/knot_input.hpp"

namespace knotrep::cli {

/// One unit of CLI work.
struct JobSpec {
  std::string command;
  std::optional<std::string> fixture;
  std::optional<std::string> braid;
  /// PD code, inline or a file path.
  std::optional<std::string> pd;
  /// Braid (fixture format) or PD file.
  std::optional<std::string> file;
  std::optional<int> n;
  /// "A..B"
  std::optional<std::string> n_range;
  int n_max = 6;
  std::optional<std::string> json_out;
  bool emit_matrices = false;
  bool verify = false;
  bool numeric = false;
};

struct Knot {
  std::string label;
  WirtingerPresentation presentation;
};

/// Throws InputError unless exactly one source is given.
Knot resolve_knot(const JobSpec& job);
/// Inclusive degree list from --n / --n-range, or the fallback range.
std::vector<int> degrees(const JobSpec& job, int default_lo, int default_hi);

nlohmann::json cmd_alexander(const JobSpec& job);
nlohmann::json cmd_homology(const JobSpec& job);
nlohmann::json cmd_count(const JobSpec& job);
nlohmann::json cmd_reps(const JobSpec& job);
nlohmann::json cmd_analyze(const JobSpec& job);
/// Re-verifies every rep in a JSON document produced by `reps --emit-matrices`.
nlohmann::json cmd_verify(const nlohmann::json& document);
nlohmann::json run_job(const JobSpec& job);

/// Full command line entry point; returns the process exit code
/// (0 success, 2 input error, 3 invariant violation).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace knotrep::cli
