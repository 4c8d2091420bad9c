#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cwoful/design_state.hpp"
#include "cwoful/environment.hpp"

namespace cwoful {

enum class PolicyKind { kCwOful, kOful, kEnlargedBetaOful, kGreedy };

std::string to_string(PolicyKind kind);

/// beta = R sqrt(d log((1 + K L^2 / lambda) / delta)) + alpha C + sqrt(lambda) S
struct KnownC {
  double corruption = 0.0;
  bool operator==(const KnownC&) const = default;
};
/// beta = 2 R sqrt(d log((1 + K L^2 / lambda) / delta)) + 2 sqrt(lambda) S
struct UnknownC {
  double corruption_estimate = 0.0;
  bool operator==(const UnknownC&) const = default;
};
struct FixedBeta {
  double value = 0.0;
  bool operator==(const FixedBeta&) const = default;
};
using BetaMode = std::variant<KnownC, UnknownC, FixedBeta>;

/// Resolved hyperparameters of one policy. `alpha == nullopt` means
/// uncapped: every weight is 1.
struct PolicyConfig {
  PolicyKind kind = PolicyKind::kCwOful;
  double lambda = 1.0;
  std::optional<double> alpha;
  BetaMode beta_mode = KnownC{};
  double delta = 0.05;
  int horizon = 1;
  Bounds bounds;

  bool operator==(const PolicyConfig&) const = default;
};

/// Throws ConfigurationError if lambda <= 0, delta outside (0, 1),
/// horizon < 1, alpha <= 0, or a negative corruption level.
void validate(const PolicyConfig& config);

/// Known-C CW-OFUL: lambda = R^2/S^2, alpha = (R sqrt(d) + sqrt(lambda) S)/C,
/// and alpha uncapped when C = 0.
PolicyConfig cw_oful_known_c(const Bounds& bounds, int dim, int horizon,
                             double corruption, double delta);

/// Unknown-C CW-OFUL with estimate C_bar (defaults to sqrt(K)).
PolicyConfig cw_oful_unknown_c(const Bounds& bounds, int dim, int horizon,
                               double delta,
                               std::optional<double> corruption_estimate = {});

/// Plain OFUL: unit weights, beta from the known-C formula with C = 0.
PolicyConfig oful(const Bounds& bounds, int horizon, double delta,
                  std::optional<double> lambda = {});

/// OFUL whose radius is inflated by C L / sqrt(lambda); weights stay 1.
PolicyConfig enlarged_beta_baseline(const PolicyConfig& base, double corruption,
                                    int dim);

/// sqrt(d log((1 + K L^2 / lambda) / delta)), shared by both formulas.
double log_radius_term(const PolicyConfig& config, int dim);

double confidence_radius(const PolicyConfig& config, int dim);

/// (R sqrt(d) + sqrt(lambda) S) / C.
double default_alpha(const Bounds& bounds, double lambda, int dim,
                     double corruption);

struct Selection {
  int index = 0;
  double ucb = 0.0;
  double bonus = 0.0;
};

/// One run of CW-OFUL or a baseline. Beta is fixed for the whole run.
class Policy {
 public:
  Policy(const PolicyConfig& config, int dim);

  /// argmax of theta^T x + beta ||x||_{Sigma^{-1}}, lowest index on ties.
  /// Greedy drops the bonus term. Throws ContractError on an empty set.
  Selection select_action(std::span<const Vector> decision_set) const;

  /// min(1, alpha / bonus) against the current (pre-update) Sigma; 1 when
  /// uncapped, alpha >= L / sqrt(lambda), or the bonus is 0.
  double compute_weight(const Vector& chosen) const;
  double weight_for_bonus(double bonus) const;

  void observe(const Vector& chosen, double observed_reward, double weight);

  const PolicyConfig& config() const { return config_; }
  const WeightedDesignState& design() const { return design_; }
  const std::vector<double>& weight_history() const { return weights_; }
  double beta() const { return beta_; }
  const Vector& theta_hat() const { return design_.theta_hat(); }

 private:
  PolicyConfig config_;
  WeightedDesignState design_;
  std::vector<double> weights_;
  double beta_;
  bool cap_binding_ = false;
};

}  // namespace cwoful
