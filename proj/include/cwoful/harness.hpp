#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cwoful/adversary.hpp"
#include "cwoful/environment.hpp"
#include "cwoful/policy.hpp"

namespace cwoful {

/// Everything observed and decided in one round.
struct RoundRecord {
  int k = 0;
  int action_index = 0;
  double weight = 1.0;
  /// ||x_k||_{Sigma_k^{-1}} against the pre-update matrix.
  double bonus = 0.0;
  double clean_reward = 0.0;
  double corruption = 0.0;
  double observed_reward = 0.0;
  /// optimal_value - <theta*, x_k>, never clipped.
  double instant_regret = 0.0;
  double cum_regret = 0.0;
  /// ||theta_k - theta*||_{Sigma_k} for the estimate used to choose x_k.
  double est_error = 0.0;
  bool confidence_ok = true;
};

/// State of the design after `rounds` completed rounds, for diagnostics.
struct DesignSnapshot {
  int rounds = 0;
  Matrix cov;
  /// sum_i w_i eta_i x_i
  Vector noise_sum;
  /// sum_i w_i c_i x_i
  Vector corruption_sum;
  /// corruption spent up to this point
  double corruption_spent = 0.0;
};

struct EpisodeOptions {
  int horizon = 1;
  std::uint64_t seed = 0;
  /// Snapshots every this many rounds (and always after the last round);
  /// 0 keeps only the final snapshot.
  int snapshot_interval = 50;
  /// Called after each round's update with the round index and policy.
  std::function<void(int, const Policy&)> on_round;
};

struct EpisodeResult {
  std::uint64_t seed = 0;
  int dim = 0;
  double lambda = 1.0;
  double beta = 0.0;
  std::optional<double> alpha;
  Vector theta_star;
  std::vector<RoundRecord> records;
  std::vector<DesignSnapshot> snapshots;
  CorruptionReport corruption;
  double adversary_budget = 0.0;
  int first_declined_round = 0;
  /// Incrementally maintained log det(Sigma) after the last round.
  double final_logdet = 0.0;
  Vector final_theta_hat;

  double total_regret() const {
    return records.empty() ? 0.0 : records.back().cum_regret;
  }
  std::vector<int> action_sequence() const;
  std::vector<double> cumulative_regret() const;
};

/// Structured failure raised when a component throws mid-episode.
class EpisodeFailure : public std::runtime_error {
 public:
  EpisodeFailure(std::uint64_t seed, int round, const std::string& what)
      : std::runtime_error("episode seed=" + std::to_string(seed) +
                           " round=" + std::to_string(round) + ": " + what),
        seed_(seed),
        round_(round) {}
  std::uint64_t seed() const { return seed_; }
  int round() const { return round_; }

 private:
  std::uint64_t seed_;
  int round_;
};

/// Runs generate_round -> select_action -> sample_reward -> corrupt ->
/// compute_weight -> observe for K rounds. `adversary` is taken by value so
/// every episode starts from a fresh ledger. Regret is measured against the
/// clean optimum of each realized decision set.
EpisodeResult run_episode(const BanditInstance& instance, Adversary adversary,
                          const PolicyConfig& policy_config,
                          const EpisodeOptions& options);

}  // namespace cwoful
