#include "cwoful/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cwoful {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double inverse_norm(const Eigen::LLT<Matrix>& llt, const Vector& v) {
  const double q = v.dot(llt.solve(v));
  return q > 0.0 ? std::sqrt(q) : 0.0;
}

double dense_logdet(const Eigen::LLT<Matrix>& llt) {
  return 2.0 * llt.matrixLLT().diagonal().array().log().sum();
}

}  // namespace

EpisodeDiagnostics diagnose_episode(const EpisodeResult& episode, double delta,
                                    double noise_scale) {
  EpisodeDiagnostics out;
  out.seed = episode.seed;
  out.beta_below_one = episode.beta < 1.0;
  const int d = episode.dim;
  const double lambda = episode.lambda;
  const double base_logdet = d * std::log(lambda);

  auto alpha_times = [&](double c) {
    if (c == 0.0) return 0.0;
    return episode.alpha ? *episode.alpha * c : kInf;
  };

  for (const RoundRecord& r : episode.records) {
    out.potential_sum += std::min(1.0, r.weight * r.bonus * r.bonus);
    out.weighted_corruption_sum += std::abs(r.corruption) * r.weight * r.bonus;
    out.confidence_violated = out.confidence_violated || !r.confidence_ok;
    if (!(r.weight > 0.0 && r.weight <= 1.0)) out.weights_ok = false;
    if (episode.alpha) {
      if (r.weight * r.bonus > *episode.alpha + kWeightTolerance) {
        out.weights_ok = false;
      }
    } else if (r.weight != 1.0) {
      out.weights_ok = false;
    }
  }

  const double c_total = episode.corruption.c_realized;
  out.corruption_bound = alpha_times(c_total);
  out.weighted_corruption_ok =
      out.weighted_corruption_sum <= out.corruption_bound + kCorruptionTolerance;

  for (const DesignSnapshot& snap : episode.snapshots) {
    const Eigen::LLT<Matrix> llt(snap.cov);
    SnapshotTerms t;
    t.rounds = snap.rounds;
    t.stochastic = inverse_norm(llt, snap.noise_sum);
    const double log_ratio = 0.5 * (dense_logdet(llt) - base_logdet);
    t.stochastic_bound = std::sqrt(
        2.0 * noise_scale * noise_scale * (log_ratio - std::log(delta)));
    t.corruption = inverse_norm(llt, snap.corruption_sum);
    t.corruption_bound = alpha_times(snap.corruption_spent);
    t.regularization = lambda * inverse_norm(llt, episode.theta_star);
    t.regularization_bound = std::sqrt(lambda) * episode.theta_star.norm();

    out.max_corruption_term = std::max(out.max_corruption_term, t.corruption);
    if (t.corruption > t.corruption_bound + kCorruptionTolerance) {
      out.corruption_ok = false;
    }
    if (t.regularization > t.regularization_bound * (1.0 + 1e-12) + 1e-15) {
      out.regularization_ok = false;
    }
    if (t.stochastic > t.stochastic_bound) out.self_normalized_ok = false;
    out.snapshots.push_back(t);
  }

  if (!episode.snapshots.empty()) {
    const Eigen::LLT<Matrix> final_llt(episode.snapshots.back().cov);
    out.potential_bound = 2.0 * (dense_logdet(final_llt) - base_logdet);
  }
  out.potential_ok =
      out.potential_sum <= out.potential_bound + kPotentialTolerance;
  return out;
}

DiagnosticReport diagnostic_lemma_checks(std::span<const EpisodeResult> episodes,
                                         double delta, double noise_scale) {
  DiagnosticReport report;
  report.delta = delta;
  report.min_potential_margin = kInf;
  report.min_corruption_margin = kInf;
  int confidence_violations = 0;
  int self_normalized_violations = 0;
  for (const EpisodeResult& e : episodes) {
    EpisodeDiagnostics diag = diagnose_episode(e, delta, noise_scale);
    confidence_violations += diag.confidence_violated ? 1 : 0;
    self_normalized_violations += diag.self_normalized_ok ? 0 : 1;
    report.min_potential_margin = std::min(
        report.min_potential_margin, diag.potential_bound - diag.potential_sum);
    for (const SnapshotTerms& t : diag.snapshots) {
      report.min_corruption_margin =
          std::min(report.min_corruption_margin, t.corruption_bound - t.corruption);
    }
    report.all_hard_ok = report.all_hard_ok && diag.hard_ok();
    report.episodes.push_back(std::move(diag));
  }
  if (!episodes.empty()) {
    const double n = static_cast<double>(episodes.size());
    report.confidence_violation_rate = confidence_violations / n;
    report.self_normalized_violation_rate = self_normalized_violations / n;
  }
  return report;
}

}  // namespace cwoful
