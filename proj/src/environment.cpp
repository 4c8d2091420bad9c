#include "cwoful/environment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cwoful/errors.hpp"

namespace cwoful {

namespace {

constexpr double kNormSlack = 1e-12;

std::vector<Vector> basis_arms(int d) {
  std::vector<Vector> arms;
  arms.reserve(d);
  for (int i = 0; i < d; ++i) arms.push_back(Vector::Unit(d, i));
  return arms;
}

// First index wins ties.
void scan_optimum(const Vector& theta, RoundContext& ctx) {
  ctx.optimal_index = 0;
  ctx.optimal_value = -std::numeric_limits<double>::infinity();
  ctx.arm_values.resize(ctx.decision_set.size());
  for (std::size_t i = 0; i < ctx.decision_set.size(); ++i) {
    const double v = theta.dot(ctx.decision_set[i]);
    ctx.arm_values[i] = v;
    if (v > ctx.optimal_value) {
      ctx.optimal_value = v;
      ctx.optimal_index = static_cast<int>(i);
    }
  }
}

}  // namespace

Vector sample_sphere(int dim, double radius, RandomStream& rng) {
  Vector v(dim);
  double norm = 0.0;
  do {
    for (int i = 0; i < dim; ++i) v[i] = rng.normal();
    norm = v.norm();
  } while (norm == 0.0);
  return (radius / norm) * v;
}

BanditInstance::BanditInstance(Vector theta_star, Bounds bounds,
                               DecisionSetSpec decision_set, NoiseKind noise,
                               double misspec_epsilon, std::uint64_t seed)
    : theta_star_(std::move(theta_star)),
      bounds_(bounds),
      decision_set_(std::move(decision_set)),
      noise_(noise),
      misspec_epsilon_(misspec_epsilon),
      seed_(seed) {
  const int d = static_cast<int>(theta_star_.size());
  if (d < 1) throw ConfigurationError("instance: theta_star is empty");
  if (!theta_star_.allFinite()) {
    throw ConfigurationError("instance: theta_star has non-finite entries");
  }
  if (!(bounds_.L > 0.0) || !(bounds_.S > 0.0) || !(bounds_.R > 0.0)) {
    throw ConfigurationError("instance: bounds L, S, R must be > 0");
  }
  if (theta_star_.norm() > bounds_.S + kNormSlack) {
    throw ConfigurationError("instance: ||theta_star|| exceeds S");
  }
  if (!(misspec_epsilon_ >= 0.0) || !std::isfinite(misspec_epsilon_)) {
    throw ConfigurationError("instance: misspec_epsilon must be >= 0");
  }
  if (const auto* fixed = std::get_if<FixedFinite>(&decision_set_)) {
    if (fixed->arms.empty()) {
      throw ConfigurationError("instance: fixed decision set is empty");
    }
    for (const Vector& arm : fixed->arms) {
      if (arm.size() != d) {
        throw ConfigurationError("instance: arm dimension mismatch");
      }
      if (!arm.allFinite() || arm.norm() > bounds_.L + kNormSlack) {
        throw ConfigurationError("instance: arm norm exceeds L");
      }
    }
  } else if (const auto* fresh = std::get_if<FreshSphereSample>(&decision_set_)) {
    if (fresh->num_arms < 1) {
      throw ConfigurationError("instance: num_arms must be >= 1");
    }
  } else if (bounds_.L < 1.0) {
    throw ConfigurationError("instance: basis arms need L >= 1");
  }

  RandomStream rng = make_stream(seed_, StreamId::kInstance);
  misspec_direction_ = sample_sphere(d, 1.0, rng);
}

double BanditInstance::misspecification(const Vector& x) const {
  if (misspec_epsilon_ == 0.0) return 0.0;
  const double s = std::sin(misspec_direction_.dot(x) * 1e3);
  const double sign = (s > 0.0) - (s < 0.0);
  return misspec_epsilon_ * sign;
}

RoundContext generate_round(const BanditInstance& instance, int k,
                            RandomStream& rng) {
  if (k < 1) throw ContractError("generate_round: round index must be >= 1");
  RoundContext ctx;
  ctx.round_index = k;
  const int d = instance.dim();
  std::visit(
      [&](const auto& spec) {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, FixedFinite>) {
          ctx.decision_set = spec.arms;
        } else if constexpr (std::is_same_v<T, FreshSphereSample>) {
          ctx.decision_set.reserve(spec.num_arms);
          for (int i = 0; i < spec.num_arms; ++i) {
            ctx.decision_set.push_back(
                sample_sphere(d, instance.bounds().L, rng));
          }
        } else {
          ctx.decision_set = basis_arms(d);
        }
      },
      instance.decision_set_spec());
  scan_optimum(instance.theta_star(), ctx);
  return ctx;
}

RewardDraw sample_reward(const BanditInstance& instance, const Vector& x,
                         RandomStream& rng) {
  RewardDraw draw;
  const double R = instance.bounds().R;
  switch (instance.noise()) {
    case NoiseKind::kGaussian:
      draw.noise = R * rng.normal();
      break;
    case NoiseKind::kUniformBounded:
      draw.noise = R * (2.0 * rng.uniform() - 1.0);
      break;
    case NoiseKind::kZero:
      break;
  }
  draw.clean_reward =
      instance.mean_reward(x) + instance.misspecification(x) + draw.noise;
  return draw;
}

InstancePair lower_bound_instance_pair(int d, double budget_param) {
  if (d < 2) {
    throw ConfigurationError("lower-bound pair: d must be >= 2, got " +
                             std::to_string(d));
  }
  if (!(budget_param >= 0.0) || !std::isfinite(budget_param)) {
    throw ConfigurationError("lower-bound pair: budget_param must be >= 0");
  }
  Vector theta0 = Vector::Constant(d, 0.125);
  theta0[0] = 0.25;
  Vector theta1 = theta0;
  theta1[1] = 0.375;
  const Bounds bounds{1.0, 1.0, 1.0};
  return InstancePair{
      BanditInstance(theta0, bounds, BasisArms{}, NoiseKind::kZero),
      BanditInstance(theta1, bounds, BasisArms{}, NoiseKind::kZero),
      budget_param};
}

std::optional<double> minimal_gap(const BanditInstance& instance) {
  std::vector<Vector> arms;
  if (const auto* fixed = std::get_if<FixedFinite>(&instance.decision_set_spec())) {
    arms = fixed->arms;
  } else if (std::holds_alternative<BasisArms>(instance.decision_set_spec())) {
    arms = basis_arms(instance.dim());
  } else {
    throw ConfigurationError(
        "minimal_gap: undefined for freshly sampled decision sets");
  }
  double best = -std::numeric_limits<double>::infinity();
  for (const Vector& a : arms) best = std::max(best, instance.mean_reward(a));
  std::optional<double> gap;
  for (const Vector& a : arms) {
    const double g = best - instance.mean_reward(a);
    if (g > 0.0 && (!gap || g < *gap)) gap = g;
  }
  return gap;
}

std::string to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::kGaussian:
      return "gaussian";
    case NoiseKind::kUniformBounded:
      return "uniform";
    case NoiseKind::kZero:
      return "zero";
  }
  return "unknown";
}

}  // namespace cwoful
