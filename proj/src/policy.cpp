#include "cwoful/policy.hpp"

#include <cmath>

#include "cwoful/errors.hpp"

namespace cwoful {

std::string to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kCwOful:
      return "cw_oful";
    case PolicyKind::kOful:
      return "oful";
    case PolicyKind::kEnlargedBetaOful:
      return "enlarged_beta_oful";
    case PolicyKind::kGreedy:
      return "greedy";
  }
  return "unknown";
}

void validate(const PolicyConfig& config) {
  if (!(config.lambda > 0.0) || !std::isfinite(config.lambda)) {
    throw ConfigurationError("policy: lambda must be finite and > 0");
  }
  if (!(config.delta > 0.0 && config.delta < 1.0)) {
    throw ConfigurationError("policy: delta must lie in (0, 1)");
  }
  if (config.horizon < 1) throw ConfigurationError("policy: horizon must be >= 1");
  if (config.alpha && !(*config.alpha > 0.0)) {
    throw ConfigurationError("policy: alpha must be > 0");
  }
  if (!(config.bounds.L > 0.0 && config.bounds.S > 0.0 && config.bounds.R > 0.0)) {
    throw ConfigurationError("policy: bounds L, S, R must be > 0");
  }
  std::visit(
      [](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, KnownC>) {
          if (!(m.corruption >= 0.0)) {
            throw ConfigurationError("policy: corruption level must be >= 0");
          }
        } else if constexpr (std::is_same_v<T, UnknownC>) {
          if (!(m.corruption_estimate > 0.0)) {
            throw ConfigurationError("policy: corruption estimate must be > 0");
          }
        } else {
          if (!(m.value >= 0.0) || !std::isfinite(m.value)) {
            throw ConfigurationError("policy: fixed beta must be >= 0");
          }
        }
      },
      config.beta_mode);
}

double default_alpha(const Bounds& bounds, double lambda, int dim,
                     double corruption) {
  return (bounds.R * std::sqrt(static_cast<double>(dim)) +
          std::sqrt(lambda) * bounds.S) /
         corruption;
}

PolicyConfig cw_oful_known_c(const Bounds& bounds, int dim, int horizon,
                             double corruption, double delta) {
  PolicyConfig c;
  c.kind = PolicyKind::kCwOful;
  c.bounds = bounds;
  c.lambda = bounds.R * bounds.R / (bounds.S * bounds.S);
  c.horizon = horizon;
  c.delta = delta;
  c.beta_mode = KnownC{corruption};
  if (corruption > 0.0) c.alpha = default_alpha(bounds, c.lambda, dim, corruption);
  validate(c);
  return c;
}

PolicyConfig cw_oful_unknown_c(const Bounds& bounds, int dim, int horizon,
                               double delta,
                               std::optional<double> corruption_estimate) {
  PolicyConfig c;
  c.kind = PolicyKind::kCwOful;
  c.bounds = bounds;
  c.lambda = bounds.R * bounds.R / (bounds.S * bounds.S);
  c.horizon = horizon;
  c.delta = delta;
  const double c_bar =
      corruption_estimate.value_or(std::sqrt(static_cast<double>(horizon)));
  c.beta_mode = UnknownC{c_bar};
  c.alpha = default_alpha(bounds, c.lambda, dim, c_bar);
  validate(c);
  return c;
}

PolicyConfig oful(const Bounds& bounds, int horizon, double delta,
                  std::optional<double> lambda) {
  PolicyConfig c;
  c.kind = PolicyKind::kOful;
  c.bounds = bounds;
  c.lambda = lambda.value_or(bounds.R * bounds.R / (bounds.S * bounds.S));
  c.horizon = horizon;
  c.delta = delta;
  c.beta_mode = KnownC{0.0};
  validate(c);
  return c;
}

PolicyConfig enlarged_beta_baseline(const PolicyConfig& base, double corruption,
                                    int dim) {
  if (!(corruption >= 0.0)) {
    throw ConfigurationError("enlarged beta: corruption level must be >= 0");
  }
  PolicyConfig c = base;
  c.kind = PolicyKind::kEnlargedBetaOful;
  c.alpha.reset();
  const double plain = c.bounds.R * log_radius_term(c, dim) +
                       std::sqrt(c.lambda) * c.bounds.S;
  c.beta_mode =
      FixedBeta{plain + corruption * c.bounds.L / std::sqrt(c.lambda)};
  return c;
}

double log_radius_term(const PolicyConfig& config, int dim) {
  const double K = config.horizon;
  const double L = config.bounds.L;
  const double arg = (1.0 + K * L * L / config.lambda) / config.delta;
  if (!(arg > 1.0)) {
    throw ContractError("confidence_radius: log argument must exceed 1");
  }
  return std::sqrt(dim * std::log(arg));
}

double confidence_radius(const PolicyConfig& config, int dim) {
  const double R = config.bounds.R;
  const double reg = std::sqrt(config.lambda) * config.bounds.S;
  return std::visit(
      [&](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, KnownC>) {
          const double corruption_term =
              (config.alpha && m.corruption > 0.0) ? *config.alpha * m.corruption
                                                   : 0.0;
          return R * log_radius_term(config, dim) + corruption_term + reg;
        } else if constexpr (std::is_same_v<T, UnknownC>) {
          return 2.0 * R * log_radius_term(config, dim) + 2.0 * reg;
        } else {
          return m.value;
        }
      },
      config.beta_mode);
}

Policy::Policy(const PolicyConfig& config, int dim)
    : config_(config), design_(dim, config.lambda) {
  validate(config_);
  if (config_.kind != PolicyKind::kCwOful) config_.alpha.reset();
  beta_ = confidence_radius(config_, dim);
  // bonus <= L / sqrt(lambda) for every legal action.
  cap_binding_ = config_.alpha.has_value() &&
                 *config_.alpha < config_.bounds.L / std::sqrt(config_.lambda);
  weights_.reserve(static_cast<std::size_t>(config_.horizon));
}

Selection Policy::select_action(std::span<const Vector> decision_set) const {
  if (decision_set.empty()) {
    throw ContractError("select_action: empty decision set");
  }
  const double beta = config_.kind == PolicyKind::kGreedy ? 0.0 : beta_;
  const Vector& theta = design_.theta_hat();
  Selection best;
  for (std::size_t i = 0; i < decision_set.size(); ++i) {
    const double bonus = design_.bonus(decision_set[i]);
    const double ucb = theta.dot(decision_set[i]) + beta * bonus;
    if (i == 0 || ucb > best.ucb) {
      best.index = static_cast<int>(i);
      best.ucb = ucb;
      best.bonus = bonus;
    }
  }
  return best;
}

double Policy::weight_for_bonus(double bonus) const {
  if (!cap_binding_ || bonus <= 0.0) return 1.0;
  return std::min(1.0, *config_.alpha / bonus);
}

double Policy::compute_weight(const Vector& chosen) const {
  return weight_for_bonus(design_.bonus(chosen));
}

void Policy::observe(const Vector& chosen, double observed_reward, double weight) {
  design_.update(chosen, observed_reward, weight);
  weights_.push_back(weight);
}

}  // namespace cwoful
