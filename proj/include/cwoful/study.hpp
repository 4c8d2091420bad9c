#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cwoful/aggregate.hpp"
#include "cwoful/batch.hpp"
#include "cwoful/config.hpp"

namespace cwoful {

/// One point of the (K, C, d) grid.
struct Cell {
  int horizon = 1;
  double budget = 0.0;
  int dim = 1;

  /// "K{K}_C{C}_d{d}"
  std::string label() const;
};

/// Cartesian product of the grid axes; axes left empty take the base value.
std::vector<Cell> expand_cells(const ExperimentConfig& config);

std::shared_ptr<const BanditInstance> build_instance(const InstanceConfig& config,
                                                     int dim);

Adversary build_adversary(const AdversaryConfig& config, double budget);

/// C that "auto" resolves to: the cell's budget, or K * epsilon under a
/// misspecification adversary.
double auto_corruption(const ExperimentConfig& config, const Cell& cell);

/// Turns a policy spec into concrete hyperparameters for one cell.
PolicyConfig resolve_policy(const PolicySpec& spec, const ExperimentConfig& config,
                            const Cell& cell);

struct PolicyRun {
  PolicySpec spec;
  PolicyConfig resolved;
  double beta = 0.0;
  std::vector<EpisodeResult> episodes;  // seed order
  RegretCurve curve;
};

struct CellResult {
  Cell cell;
  std::optional<double> gap;
  std::vector<PolicyRun> policies;
};

struct StudyResult {
  std::vector<CellResult> cells;
};

struct StudyOptions {
  int threads = 0;
  /// Keep per-episode records and snapshots; otherwise only the curves.
  bool keep_episodes = true;
};

/// Runs every (cell, policy, seed) episode. Seeds of one cell run as one
/// parallel batch.
StudyResult run_study(const ExperimentConfig& config,
                      const StudyOptions& options = {});

struct ScalingRow {
  std::string policy;
  Cell cell;
  double mean_regret = 0.0;
  double std_regret = 0.0;
  /// regret / (d^2 / gap + d C) when the gap is known.
  std::optional<double> gap_ratio;
};

struct ScalingFit {
  std::string policy;
  /// "loglog_K" (regret vs K, C = 0) or "affine_C" (regret vs C, fixed K).
  std::string kind;
  int dim = 0;
  /// Fixed K for affine_C fits, 0 otherwise.
  int horizon = 0;
  AffineFit fit;
};

struct ScalingTable {
  std::vector<ScalingRow> rows;
  std::vector<ScalingFit> fits;
};

ScalingTable scaling_study(const StudyResult& study);

}  // namespace cwoful
