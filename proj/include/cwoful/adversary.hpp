#pragma once

#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "cwoful/environment.hpp"

namespace cwoful {

/// No corruption.
struct NoAttack {
  bool operator==(const NoAttack&) const = default;
};

/// Whenever arm `target_arm` (0-based position in the decision set) is
/// chosen, shifts its reward by flip_to - flip_from. With noiseless rewards
/// this turns an observed flip_from into flip_to.
struct TargetFlip {
  int target_arm = 1;
  double flip_from = 0.375;
  double flip_to = 0.125;

  double shift() const { return flip_to - flip_from; }
  bool operator==(const TargetFlip&) const = default;
};

/// Subtracts `shift` whenever the chosen action is optimal for the round.
struct OptimalSuppression {
  double shift = 0.5;
  bool operator==(const OptimalSuppression&) const = default;
};

/// Model misspecification lives in the environment's clean reward; the
/// adversary itself stays silent and its budget is unbounded.
struct Misspecification {
  bool operator==(const Misspecification&) const = default;
};

/// Pre-action adversary: commits c_{k,x} = per_arm[i] for every arm i before
/// the choice. Arms beyond the table get 0. Used for C' accounting.
struct PreActionTable {
  std::vector<double> per_arm;
  bool operator==(const PreActionTable&) const = default;
};

using AttackStrategy = std::variant<NoAttack, TargetFlip, OptimalSuppression,
                                    Misspecification, PreActionTable>;

std::string strategy_name(const AttackStrategy& strategy);

struct Corruption {
  double corrupted_reward = 0.0;
  double c = 0.0;
  /// The strategy wanted to corrupt but the budget did not allow it.
  bool declined = false;
};

struct CorruptionReport {
  double c_realized = 0.0;
  double c_prime_realized = 0.0;
  int rounds_corrupted = 0;
};

/// Post-action corruption with budget accounting. A round is corrupted fully
/// or not at all: a charge is applied only if spent + |c| <= budget.
class Adversary {
 public:
  static constexpr double kUnbounded = std::numeric_limits<double>::infinity();

  /// Throws ConfigurationError on a negative or NaN budget.
  Adversary(AttackStrategy strategy, double budget);
  Adversary() : Adversary(NoAttack{}, 0.0) {}

  /// Called once per round after the action is chosen.
  Corruption corrupt(const RoundContext& round, int chosen_index,
                     double clean_reward);

  CorruptionReport report() const;

  const AttackStrategy& strategy() const { return strategy_; }
  double budget() const { return budget_; }
  double spent() const { return spent_; }
  double spent_prime() const { return spent_prime_; }
  bool budget_exhausted() const { return exhausted_; }
  /// Round of the first declined corruption, 0 if none.
  int first_declined_round() const { return first_declined_round_; }

 private:
  AttackStrategy strategy_;
  double budget_;
  double spent_ = 0.0;
  double spent_prime_ = 0.0;
  int rounds_corrupted_ = 0;
  bool exhausted_ = false;
  int first_declined_round_ = 0;
};

/// Flip adversary of the lower-bound construction: arm 2 (index 1) reads
/// 1/8 instead of 3/8 while the total budget 4 * budget_param / (d - 1)
/// allows another 1/4 charge.
Adversary lower_bound_adversary(double budget_param, int d);

}  // namespace cwoful
