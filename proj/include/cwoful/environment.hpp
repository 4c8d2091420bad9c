#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cwoful/design_state.hpp"
#include "cwoful/rng.hpp"

namespace cwoful {

/// Norm bounds of the linear model: ||x|| <= L, ||theta*|| <= S, noise is
/// R-sub-Gaussian.
struct Bounds {
  double L = 1.0;
  double S = 1.0;
  double R = 1.0;

  bool operator==(const Bounds&) const = default;
};

/// The same explicit list of arms every round.
struct FixedFinite {
  std::vector<Vector> arms;
};

/// `num_arms` fresh directions, uniform on the sphere of radius L, per round.
struct FreshSphereSample {
  int num_arms = 32;
};

/// The d standard basis vectors every round.
struct BasisArms {};

using DecisionSetSpec = std::variant<FixedFinite, FreshSphereSample, BasisArms>;

enum class NoiseKind {
  kGaussian,        // N(0, R^2)
  kUniformBounded,  // U[-R, R]; bounded by R hence R-sub-Gaussian
  kZero,
};

/// Ground truth and generators for one bandit problem. Immutable after
/// construction.
class BanditInstance {
 public:
  /// Throws ConfigurationError if ||theta_star|| > S, bounds are not
  /// positive, the decision set is malformed, or an arm exceeds L.
  BanditInstance(Vector theta_star, Bounds bounds, DecisionSetSpec decision_set,
                 NoiseKind noise, double misspec_epsilon = 0.0,
                 std::uint64_t seed = 0);

  int dim() const { return static_cast<int>(theta_star_.size()); }
  const Vector& theta_star() const { return theta_star_; }
  const Bounds& bounds() const { return bounds_; }
  const DecisionSetSpec& decision_set_spec() const { return decision_set_; }
  NoiseKind noise() const { return noise_; }
  double misspec_epsilon() const { return misspec_epsilon_; }
  std::uint64_t seed() const { return seed_; }

  /// Deterministic model deviation eps * sign(sin(1000 <u, x>)), |.| <= eps.
  double misspecification(const Vector& x) const;

  /// Expected clean value <theta*, x> (without misspecification).
  double mean_reward(const Vector& x) const { return theta_star_.dot(x); }

 private:
  Vector theta_star_;
  Bounds bounds_;
  DecisionSetSpec decision_set_;
  NoiseKind noise_;
  double misspec_epsilon_;
  std::uint64_t seed_;
  Vector misspec_direction_;
};

/// The realized decision set of round k.
struct RoundContext {
  int round_index = 0;
  std::vector<Vector> decision_set;
  /// <theta*, x> per arm.
  std::vector<double> arm_values;
  double optimal_value = 0.0;
  /// First index attaining optimal_value.
  int optimal_index = 0;

  bool is_optimal(int index) const {
    return arm_values[static_cast<std::size_t>(index)] >= optimal_value;
  }
};

RoundContext generate_round(const BanditInstance& instance, int k,
                            RandomStream& rng);

struct RewardDraw {
  double clean_reward = 0.0;
  double noise = 0.0;
};

RewardDraw sample_reward(const BanditInstance& instance, const Vector& x,
                         RandomStream& rng);

/// Uniform direction on the unit sphere scaled to `radius`.
Vector sample_sphere(int dim, double radius, RandomStream& rng);

/// The noiseless basis-arm pair used by the lower-bound construction:
/// A0 has theta* = (1/4, 1/8, ..., 1/8); A1 raises coordinate 2 to 3/8.
struct InstancePair {
  BanditInstance a0;
  BanditInstance a1;
  double budget_param;
};

InstancePair lower_bound_instance_pair(int d, double budget_param);

/// Smallest nonzero sub-optimality gap over a fixed arm set; nullopt when
/// every arm is optimal. Throws ConfigurationError for fresh sphere sets.
std::optional<double> minimal_gap(const BanditInstance& instance);

std::string to_string(NoiseKind kind);

}  // namespace cwoful
