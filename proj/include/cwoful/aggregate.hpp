#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cwoful/harness.hpp"

namespace cwoful {

/// Per-round mean / population std / min / max across seeds.
struct CurveStats {
  std::vector<double> mean;
  std::vector<double> std;
  std::vector<double> min;
  std::vector<double> max;
};

/// One seed's traces, extracted from an episode.
struct CurveInput {
  std::uint64_t seed = 0;
  std::vector<double> cumulative_regret;
  /// cumulative |c_k|
  std::vector<double> corruption;
  /// cumulative min(1, w_k bonus_k^2)
  std::vector<double> potential;
  bool confidence_violated = false;
};

CurveInput curve_input(const EpisodeResult& episode);

struct RegretCurve {
  std::vector<std::uint64_t> seeds;  // sorted
  std::vector<std::vector<double>> per_seed;
  CurveStats regret;
  CurveStats corruption;
  CurveStats potential;
  int confidence_violations = 0;

  std::size_t horizon() const { return regret.mean.size(); }
  double final_mean() const { return regret.mean.empty() ? 0.0 : regret.mean.back(); }
};

/// Deterministic reduction: inputs are ordered by seed first. Throws
/// ContractError on an empty input or mismatched horizons.
RegretCurve aggregate(std::vector<CurveInput> curves);
RegretCurve aggregate(std::span<const EpisodeResult> episodes);

CurveStats curve_stats(std::span<const std::vector<double>> rows);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

struct AffineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

AffineFit affine_fit(std::span<const double> x, std::span<const double> y);

}  // namespace cwoful
