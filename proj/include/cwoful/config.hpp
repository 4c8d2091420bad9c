#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cwoful/environment.hpp"
#include "cwoful/policy.hpp"

namespace cwoful {

// Experiment configuration, stored as YAML. Every field is echoed into the
// run metadata; parse(emit(config)) == config.
//
//   name: minimal
//   horizon: 100
//   seeds: [1, 2, 3]                # or {first: 0, count: 50}
//   snapshot_interval: 50
//   output_dir: results/minimal     # optional
//   instance:
//     dim: 2
//     bounds: {L: 1, S: 1, R: 1}
//     theta_star: [0.6, 0.8]        # optional; else random with norm theta_norm
//     theta_norm: 1                 # optional, defaults to S
//     decision_set: {kind: fresh_sphere, num_arms: 32}
//                                   # or {kind: basis} or {kind: fixed, arms: [[..], ..]}
//     noise: gaussian               # gaussian | uniform | zero
//     misspec_epsilon: 0
//     seed: 7
//   adversary:
//     kind: optimal_suppression     # none | target_flip | optimal_suppression
//                                   # | misspecification | pre_action
//     budget: 20
//     shift: 0.5                    # optimal_suppression
//     target_arm: 1                 # target_flip (0-based)
//     flip_from: 0.375
//     flip_to: 0.125
//     per_arm: [0.1, 0.3]           # pre_action
//   policies:
//     - name: cw
//       kind: cw_oful               # cw_oful | oful | enlarged_beta_oful | greedy
//       lambda: auto                # auto = R^2 / S^2
//       alpha: auto                 # auto | uncapped | number
//       beta: {mode: known_c, C: auto}   # known_c | unknown_c (C_bar) | fixed (value)
//       delta: 0.05
//   grid:                           # optional axes, cartesian product
//     horizon: [2500, 10000]
//     budget: [0, 50, 100]
//     dim: [2, 5]

struct DecisionSetConfig {
  std::string kind = "fresh_sphere";  // fresh_sphere | basis | fixed
  int num_arms = 32;
  std::vector<std::vector<double>> arms;

  bool operator==(const DecisionSetConfig&) const = default;
};

struct InstanceConfig {
  int dim = 2;
  Bounds bounds;
  std::optional<std::vector<double>> theta_star;
  std::optional<double> theta_norm;
  DecisionSetConfig decision_set;
  NoiseKind noise = NoiseKind::kGaussian;
  double misspec_epsilon = 0.0;
  std::uint64_t seed = 0;

  bool operator==(const InstanceConfig&) const = default;
};

struct AdversaryConfig {
  std::string kind = "none";
  double budget = 0.0;
  double shift = 0.5;
  int target_arm = 1;
  double flip_from = 0.375;
  double flip_to = 0.125;
  std::vector<double> per_arm;

  bool operator==(const AdversaryConfig&) const = default;
};

/// A number, or "auto" (nullopt).
using AutoValue = std::optional<double>;

struct AlphaSetting {
  enum class Mode { kAuto, kUncapped, kValue };
  Mode mode = Mode::kAuto;
  double value = 0.0;

  bool operator==(const AlphaSetting&) const = default;
};

struct BetaSetting {
  enum class Mode { kKnownC, kUnknownC, kFixed };
  Mode mode = Mode::kKnownC;
  /// C for known_c, C_bar for unknown_c, the radius for fixed.
  AutoValue value;

  bool operator==(const BetaSetting&) const = default;
};

struct PolicySpec {
  std::string name;
  PolicyKind kind = PolicyKind::kCwOful;
  AutoValue lambda;
  AlphaSetting alpha;
  BetaSetting beta;
  double delta = 0.05;

  bool operator==(const PolicySpec&) const = default;
};

struct GridSpec {
  std::vector<int> horizon;
  std::vector<double> budget;
  std::vector<int> dim;

  bool empty() const { return horizon.empty() && budget.empty() && dim.empty(); }
  bool operator==(const GridSpec&) const = default;
};

struct ExperimentConfig {
  std::string name = "experiment";
  int horizon = 1000;
  std::vector<std::uint64_t> seeds;
  int snapshot_interval = 50;
  std::string output_dir;
  InstanceConfig instance;
  AdversaryConfig adversary;
  std::vector<PolicySpec> policies;
  GridSpec grid;

  bool operator==(const ExperimentConfig&) const = default;
};

/// Parses and validates. Throws ConfigFileError naming the source, line and
/// field on any syntax or validation failure.
ExperimentConfig parse_config(const std::string& text,
                              const std::string& source = "<config>");
ExperimentConfig load_config(const std::filesystem::path& path);

/// Validation that does not need the YAML tree (also applied after CLI
/// overrides). Throws ConfigFileError with line 0.
void validate(const ExperimentConfig& config, const std::string& source);

/// YAML text that parse_config maps back to an equal config.
std::string emit_config(const ExperimentConfig& config);

PolicyKind parse_policy_kind(const std::string& text);

/// "1,2,3" or "first:count".
std::vector<std::uint64_t> parse_seed_list(const std::string& text);

}  // namespace cwoful
