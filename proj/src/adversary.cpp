#include "cwoful/adversary.hpp"

#include <algorithm>
#include <cmath>

#include "cwoful/errors.hpp"

namespace cwoful {

std::string strategy_name(const AttackStrategy& strategy) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, NoAttack>) return "none";
        if constexpr (std::is_same_v<T, TargetFlip>) return "target_flip";
        if constexpr (std::is_same_v<T, OptimalSuppression>) {
          return "optimal_suppression";
        }
        if constexpr (std::is_same_v<T, Misspecification>) {
          return "misspecification";
        }
        if constexpr (std::is_same_v<T, PreActionTable>) return "pre_action";
      },
      strategy);
}

Adversary::Adversary(AttackStrategy strategy, double budget)
    : strategy_(std::move(strategy)), budget_(budget) {
  if (std::holds_alternative<Misspecification>(strategy_)) budget_ = kUnbounded;
  if (!(budget_ >= 0.0)) {
    throw ConfigurationError("adversary: budget must be >= 0");
  }
}

Corruption Adversary::corrupt(const RoundContext& round, int chosen_index,
                              double clean_reward) {
  double wanted = 0.0;
  double round_max = 0.0;  // max_x |c_{k,x}| for the pre-action model
  bool pre_action = false;

  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, TargetFlip>) {
          if (chosen_index == s.target_arm) wanted = s.shift();
        } else if constexpr (std::is_same_v<T, OptimalSuppression>) {
          if (round.is_optimal(chosen_index)) wanted = -s.shift;
        } else if constexpr (std::is_same_v<T, PreActionTable>) {
          pre_action = true;
          const std::size_t n =
              std::min(s.per_arm.size(), round.decision_set.size());
          for (std::size_t i = 0; i < n; ++i) {
            round_max = std::max(round_max, std::abs(s.per_arm[i]));
          }
          if (chosen_index >= 0 &&
              static_cast<std::size_t>(chosen_index) < n) {
            wanted = s.per_arm[chosen_index];
          }
        }
      },
      strategy_);

  Corruption out;
  out.corrupted_reward = clean_reward;
  if (wanted == 0.0 && !pre_action) return out;

  const double magnitude = std::abs(wanted);
  const double next = spent_ + magnitude;
  if (next <= budget_) {
    spent_ = next;
    if (pre_action) spent_prime_ += round_max;
    out.c = wanted;
    out.corrupted_reward = clean_reward + wanted;
    if (wanted != 0.0) ++rounds_corrupted_;
  } else {
    out.declined = true;
    if (!exhausted_) first_declined_round_ = round.round_index;
    exhausted_ = true;
  }
  return out;
}

CorruptionReport Adversary::report() const {
  CorruptionReport r;
  r.c_realized = spent_;
  r.c_prime_realized =
      std::holds_alternative<PreActionTable>(strategy_) ? spent_prime_ : spent_;
  r.rounds_corrupted = rounds_corrupted_;
  return r;
}

Adversary lower_bound_adversary(double budget_param, int d) {
  if (d < 2) {
    throw ConfigurationError("lower_bound_adversary: d must be >= 2");
  }
  if (!(budget_param >= 0.0) || !std::isfinite(budget_param)) {
    throw ConfigurationError("lower_bound_adversary: budget_param must be >= 0");
  }
  return Adversary(TargetFlip{1, 0.375, 0.125}, 4.0 * budget_param / (d - 1));
}

}  // namespace cwoful
