#include <doctest.h>

#include <cmath>

#include "cwoful/environment.hpp"
#include "cwoful/errors.hpp"

using namespace cwoful;

namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

const Bounds kUnit{1.0, 1.0, 1.0};

}  // namespace

TEST_CASE("basis arms optimum") {
  BanditInstance inst(vec({0.3, 0.1, 0.2}), kUnit, BasisArms{}, NoiseKind::kZero);
  RandomStream rng(0, 1);
  const RoundContext r = generate_round(inst, 1, rng);
  REQUIRE(r.decision_set.size() == 3);
  CHECK(r.optimal_value == 0.3);
  CHECK(r.optimal_index == 0);
  for (std::size_t i = 0; i < 3; ++i) CHECK(r.decision_set[i] == Vector::Unit(3, i));
}

TEST_CASE("fixed arms tie resolves to the first index") {
  BanditInstance inst(vec({0.5, 0.5}), kUnit, FixedFinite{{vec({1, 0}), vec({0, 1})}},
                      NoiseKind::kZero);
  RandomStream rng(0, 1);
  const RoundContext r = generate_round(inst, 4, rng);
  CHECK(r.optimal_value == 0.5);
  CHECK(r.optimal_index == 0);
  CHECK(r.is_optimal(0));
  CHECK(r.is_optimal(1));
  CHECK(r.round_index == 4);
}

TEST_CASE("fresh sphere arms have norm L and a scanned optimum") {
  const Bounds b{2.0, 1.0, 1.0};
  BanditInstance inst(vec({0.6, -0.8, 0.0}), b, FreshSphereSample{64}, NoiseKind::kGaussian);
  RandomStream rng(3, 1);
  for (int k = 1; k <= 20; ++k) {
    const RoundContext r = generate_round(inst, k, rng);
    REQUIRE(r.decision_set.size() == 64);
    double best = -INFINITY;
    for (std::size_t i = 0; i < r.decision_set.size(); ++i) {
      CHECK(std::abs(r.decision_set[i].norm() - 2.0) <= 1e-12);
      const double v = inst.theta_star().dot(r.decision_set[i]);
      CHECK(r.arm_values[i] == v);
      CHECK(r.optimal_value >= v);
      best = std::max(best, v);
    }
    CHECK(r.optimal_value == best);
  }
}

TEST_CASE("unit-radius sphere arms") {
  BanditInstance inst(vec({0.1, 0.2}), kUnit, FreshSphereSample{64}, NoiseKind::kZero);
  RandomStream rng(8, 1);
  const RoundContext r = generate_round(inst, 1, rng);
  for (const Vector& x : r.decision_set) CHECK(std::abs(x.norm() - 1.0) <= 1e-12);
}

TEST_CASE("same seed, same rounds and noise") {
  BanditInstance inst(vec({0.6, 0.0, 0.3}), kUnit, FreshSphereSample{8}, NoiseKind::kGaussian);
  RandomStream a(21, 1), b(21, 1);
  for (int k = 1; k <= 10; ++k) {
    const RoundContext ra = generate_round(inst, k, a);
    const RoundContext rb = generate_round(inst, k, b);
    for (std::size_t i = 0; i < ra.decision_set.size(); ++i) {
      CHECK(ra.decision_set[i] == rb.decision_set[i]);
    }
    CHECK(sample_reward(inst, ra.decision_set[0], a).clean_reward ==
          sample_reward(inst, rb.decision_set[0], b).clean_reward);
  }
}

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(BanditInstance(vec({1.0, 1.0}), kUnit, BasisArms{}, NoiseKind::kZero),
                  ConfigurationError);
  CHECK_THROWS_AS(BanditInstance(vec({0.1, 0.1}), kUnit, FixedFinite{{vec({2, 0})}},
                                 NoiseKind::kZero),
                  ConfigurationError);
  CHECK_THROWS_AS(BanditInstance(vec({0.1, 0.1}), kUnit, FixedFinite{}, NoiseKind::kZero),
                  ConfigurationError);
  CHECK_THROWS_AS(BanditInstance(vec({0.1, 0.1}), kUnit, FreshSphereSample{0},
                                 NoiseKind::kZero),
                  ConfigurationError);
  CHECK_THROWS_AS(BanditInstance(vec({0.1, 0.1}), Bounds{0.5, 1, 1}, BasisArms{},
                                 NoiseKind::kZero),
                  ConfigurationError);
  CHECK_THROWS_AS(BanditInstance(vec({0.1, 0.1}), kUnit, BasisArms{}, NoiseKind::kZero, -1.0),
                  ConfigurationError);
}

TEST_CASE("zero noise rewards are exact") {
  BanditInstance inst(vec({1.0, 0.0}), kUnit, BasisArms{}, NoiseKind::kZero);
  RandomStream rng(0, 1);
  const RewardDraw draw = sample_reward(inst, vec({1, 0}), rng);
  CHECK(draw.clean_reward == 1.0);
  CHECK(draw.noise == 0.0);
  CHECK(rng.blocks_consumed() == 0);
}

TEST_CASE("misspecification is bounded and deterministic") {
  BanditInstance inst(vec({0.3, 0.4}), kUnit, FreshSphereSample{16}, NoiseKind::kZero, 0.1, 77);
  RandomStream rng(2, 1);
  bool saw_plus = false, saw_minus = false;
  for (int k = 1; k <= 200; ++k) {
    const RoundContext r = generate_round(inst, k, rng);
    for (const Vector& x : r.decision_set) {
      const double dev = sample_reward(inst, x, rng).clean_reward - inst.mean_reward(x);
      CHECK(std::abs(dev) <= 0.1 + 1e-15);
      CHECK(std::abs(dev - inst.misspecification(x)) <= 1e-15);
      saw_plus = saw_plus || dev > 0;
      saw_minus = saw_minus || dev < 0;
    }
  }
  CHECK(saw_plus);
  CHECK(saw_minus);
}

TEST_CASE("gaussian noise: mean and empirical MGF") {
  BanditInstance inst(vec({0.0, 0.0}), kUnit, BasisArms{}, NoiseKind::kGaussian);
  RandomStream rng(1234, 1);
  const int n = 100000;
  std::vector<double> eta(n);
  double mean = 0.0;
  for (int i = 0; i < n; ++i) {
    eta[i] = sample_reward(inst, vec({1, 0}), rng).noise;
    mean += eta[i];
  }
  mean /= n;
  CHECK(std::abs(mean) <= 0.02);
  for (double l : {-2.0, -1.0, 1.0, 2.0}) {
    CAPTURE(l);
    double mgf = 0.0;
    for (double e : eta) mgf += std::exp(l * e);
    mgf /= n;
    CHECK(mgf <= std::exp(l * l / 2.0) * 1.05);
  }
}

TEST_CASE("uniform noise stays within R and is centred") {
  const Bounds b{1.0, 1.0, 0.5};
  BanditInstance inst(vec({0.0, 0.0}), b, BasisArms{}, NoiseKind::kUniformBounded);
  RandomStream rng(5, 1);
  double mean = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double e = sample_reward(inst, vec({1, 0}), rng).noise;
    CHECK_MESSAGE(std::abs(e) <= 0.5, "noise out of range");
    mean += e;
  }
  CHECK(std::abs(mean / n) <= 0.01);
}

TEST_CASE("generate_round rejects k < 1") {
  BanditInstance inst(vec({0.1, 0.1}), kUnit, BasisArms{}, NoiseKind::kZero);
  RandomStream rng(0, 1);
  CHECK_THROWS(generate_round(inst, 0, rng));
}

TEST_CASE("lower-bound instance pair") {
  const InstancePair p2 = lower_bound_instance_pair(2, 1.0);
  CHECK(p2.a0.theta_star() == vec({0.25, 0.125}));
  CHECK(p2.a1.theta_star() == vec({0.25, 0.375}));

  const InstancePair p4 = lower_bound_instance_pair(4, 1.0);
  CHECK(p4.a1.theta_star() == vec({0.25, 0.375, 0.125, 0.125}));
  CHECK(p4.a0.noise() == NoiseKind::kZero);
  CHECK(std::holds_alternative<BasisArms>(p4.a0.decision_set_spec()));

  RandomStream rng(0, 1);
  const RoundContext r = generate_round(p4.a0, 1, rng);
  for (int i = 1; i < 4; ++i) CHECK(r.optimal_value - r.arm_values[i] == 0.125);

  CHECK_THROWS_AS(lower_bound_instance_pair(1, 1.0), ConfigurationError);
}

TEST_CASE("minimal gap") {
  CHECK(minimal_gap(lower_bound_instance_pair(3, 1.0).a0) == 0.125);
  CHECK(minimal_gap(BanditInstance(vec({1, 0}), kUnit,
                                   FixedFinite{{vec({1, 0}), vec({0, 1})}},
                                   NoiseKind::kZero)) == 1.0);
  CHECK_FALSE(minimal_gap(BanditInstance(vec({0.5, 0.5}), kUnit,
                                         FixedFinite{{vec({1, 0}), vec({0, 1})}},
                                         NoiseKind::kZero))
                  .has_value());
  CHECK_THROWS_AS(minimal_gap(BanditInstance(vec({0.5, 0.5}), kUnit, FreshSphereSample{4},
                                             NoiseKind::kZero)),
                  ConfigurationError);
}
