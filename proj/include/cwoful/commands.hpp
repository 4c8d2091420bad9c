#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cwoful/harness.hpp"

namespace cwoful {

inline constexpr const char* kOutputRootEnv = "CWOFUL_OUTPUT_ROOT";

std::string version_string();

/// Command-line settings that take precedence over the config file.
struct RunOverrides {
  std::optional<std::vector<std::uint64_t>> seeds;
  std::optional<std::string> out;
  std::optional<int> jobs;
  std::optional<int> snapshot_interval;
};

/// --out, then the config's output_dir, then $CWOFUL_OUTPUT_ROOT/<name>,
/// then ./results/<name>.
std::filesystem::path resolve_output_dir(const std::string& config_output_dir,
                                         const std::string& name,
                                         const std::optional<std::string>& out);

/// Runs every (cell, policy, seed) episode and writes, under the output
/// directory:
///   <cell>/<policy>/seed_<s>.csv     per-round log
///   <cell>/<policy>/regret.csv       k, mean, std, min, max
///   <cell>/<policy>/corruption.csv
///   <cell>/<policy>/potential.csv
///   summary.csv, scaling.csv (grids only), metadata.yaml
/// A `.incomplete` marker stays behind if the run fails.
int cmd_run(const std::filesystem::path& config_path, const RunOverrides& overrides,
            std::ostream& out, std::ostream& err);

/// Runs the diagnostic suite and prints one line per check. Exit 0 iff all
/// hard per-run inequalities hold.
int cmd_check(const std::filesystem::path& config_path,
              const RunOverrides& overrides, std::ostream& out, std::ostream& err);

struct LowerboundOptions {
  int dim = 2;
  /// nullopt: use the regret measured on A0 as the budget parameter.
  std::optional<double> budget_param;
  std::string policy = "oful";  // oful | cw_oful | greedy
  int horizon = 5000;
  std::uint64_t seed = 0;
  double delta = 0.05;
  std::optional<std::string> out;
};

struct LowerboundReport {
  int dim = 0;
  int horizon = 0;
  double budget_param = 0.0;
  double flip_budget = 0.0;
  Vector theta_a0;
  Vector theta_a1;
  EpisodeResult a0;
  EpisodeResult a1;
  /// First round whose action or observation differs, 0 if none.
  int divergence_round = 0;
  /// First round the adversary could not pay for, 0 if never.
  int first_declined_round = 0;
  /// Actions agree on every round before first_declined_round (all rounds
  /// if the budget never ran out).
  bool prefix_match = true;
  double regret_a0 = 0.0;
  double regret_a1 = 0.0;
  double c_realized = 0.0;
  /// (1/8) (K - 16 budget_param / (d - 1))
  double a1_bound = 0.0;
  bool bound_applicable = false;
  bool bound_ok = false;
};

/// Unit bounds; cw_oful runs in unknown-C mode with the default estimate.
PolicyConfig lowerbound_policy(const std::string& policy, int dim, int horizon,
                               double delta);

LowerboundReport run_lowerbound(const LowerboundOptions& options);

/// Runs the paired experiment, writes paired_trace.csv and report.yaml, and
/// exits 0 iff the traces agree up to budget exhaustion.
int cmd_lowerbound(const LowerboundOptions& options, std::ostream& out,
                   std::ostream& err);

}  // namespace cwoful
