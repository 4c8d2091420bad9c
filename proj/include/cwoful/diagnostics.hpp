#pragma once

#include <span>
#include <vector>

#include "cwoful/harness.hpp"

namespace cwoful {

/// Tolerances for the hard per-run inequalities.
inline constexpr double kPotentialTolerance = 1e-6;
inline constexpr double kCorruptionTolerance = 1e-9;
inline constexpr double kWeightTolerance = 1e-12;

/// Error-decomposition terms at one snapshot, each evaluated with a fresh
/// dense factorization of the snapshot's Sigma:
///   stochastic     ||sum w_i eta_i x_i||_{Sigma^{-1}}
///   corruption     ||sum w_i c_i x_i||_{Sigma^{-1}}
///   regularization lambda ||theta*||_{Sigma^{-1}}
struct SnapshotTerms {
  int rounds = 0;
  double stochastic = 0.0;
  /// sqrt(2 R^2 log(det(Sigma)^{1/2} det(lambda I)^{-1/2} / delta))
  double stochastic_bound = 0.0;
  double corruption = 0.0;
  /// alpha * (corruption spent so far); +inf when alpha is uncapped and
  /// corruption is nonzero.
  double corruption_bound = 0.0;
  double regularization = 0.0;
  /// sqrt(lambda) ||theta*||_2
  double regularization_bound = 0.0;
};

struct EpisodeDiagnostics {
  std::uint64_t seed = 0;

  /// sum_k min(1, w_k bonus_k^2) and 2 (log det Sigma_K - d log lambda).
  double potential_sum = 0.0;
  double potential_bound = 0.0;
  bool potential_ok = true;

  /// Largest measured corruption term over all snapshots, and alpha C.
  double max_corruption_term = 0.0;
  double corruption_bound = 0.0;
  bool corruption_ok = true;
  /// sum_k |c_k| w_k bonus_k, bounded by alpha C as well.
  double weighted_corruption_sum = 0.0;
  bool weighted_corruption_ok = true;

  bool regularization_ok = true;
  bool self_normalized_ok = true;
  /// Some round had ||theta_k - theta*||_{Sigma_k} > beta.
  bool confidence_violated = false;
  /// w_k in (0, 1], w_k bonus_k <= alpha (+tol), w_k = 1 when uncapped.
  bool weights_ok = true;
  /// Runs with beta < 1 are flagged (the one-step regret clip assumes >= 1).
  bool beta_below_one = false;

  std::vector<SnapshotTerms> snapshots;

  /// The inequalities that must hold on every run, whatever the noise.
  bool hard_ok() const {
    return potential_ok && corruption_ok && weighted_corruption_ok &&
           regularization_ok && weights_ok;
  }
};

EpisodeDiagnostics diagnose_episode(const EpisodeResult& episode, double delta,
                                    double noise_scale);

struct DiagnosticReport {
  std::vector<EpisodeDiagnostics> episodes;
  double delta = 0.05;
  /// Fraction of episodes with any confidence violation.
  double confidence_violation_rate = 0.0;
  /// Fraction of episodes where the self-normalized bound failed at some
  /// snapshot.
  double self_normalized_violation_rate = 0.0;
  double min_potential_margin = 0.0;
  double min_corruption_margin = 0.0;
  bool all_hard_ok = true;
};

DiagnosticReport diagnostic_lemma_checks(std::span<const EpisodeResult> episodes,
                                         double delta, double noise_scale);

}  // namespace cwoful
