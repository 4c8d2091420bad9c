#include <doctest.h>

#include <memory>

#include "cwoful/commands.hpp"
#include "cwoful/harness.hpp"

using namespace cwoful;

namespace {

const Bounds kUnit{1.0, 1.0, 1.0};

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

EpisodeOptions opts(int horizon, std::uint64_t seed, int snap = 50) {
  EpisodeOptions o;
  o.horizon = horizon;
  o.seed = seed;
  o.snapshot_interval = snap;
  return o;
}

}  // namespace

TEST_CASE("scalar ridge on a single noiseless arm") {
  BanditInstance inst(vec({0.5}), kUnit, FixedFinite{{vec({1})}}, NoiseKind::kZero);
  std::vector<double> estimates;
  EpisodeOptions o = opts(3, 0);
  o.on_round = [&](int, const Policy& p) { estimates.push_back(p.theta_hat()[0]); };
  const EpisodeResult ep = run_episode(inst, Adversary(), oful(kUnit, 3, 0.05), o);
  CHECK(ep.total_regret() == 0.0);
  REQUIRE(estimates.size() == 3);
  for (int k = 1; k <= 3; ++k) {
    CHECK(estimates[k - 1] == doctest::Approx(0.5 * k / (1.0 + k)).epsilon(1e-15));
  }
  CHECK(ep.final_theta_hat[0] == doctest::Approx(0.375).epsilon(1e-15));
}

TEST_CASE("no adversary: observed equals clean every round") {
  BanditInstance inst(vec({0.3, -0.4, 0.5}), kUnit, FreshSphereSample{16}, NoiseKind::kGaussian);
  const EpisodeResult ep = run_episode(inst, Adversary(), oful(kUnit, 200, 0.05), opts(200, 4));
  double total_c = 0.0;
  for (const RoundRecord& r : ep.records) {
    CHECK(r.observed_reward == r.clean_reward);
    total_c += r.corruption;
  }
  CHECK(total_c == 0.0);
  CHECK(ep.corruption.c_realized == 0.0);
}

TEST_CASE("record invariants and ledger consistency") {
  BanditInstance inst(vec({0.6, 0.0, 0.3, 0.1}), kUnit, FreshSphereSample{20},
                      NoiseKind::kGaussian);
  const PolicyConfig pc = cw_oful_known_c(kUnit, 4, 500, 15.0, 0.05);
  const EpisodeResult ep =
      run_episode(inst, Adversary(OptimalSuppression{0.5}, 15.0), pc, opts(500, 9));
  REQUIRE(ep.records.size() == 500);
  double prev = 0.0, spent = 0.0;
  int corrupted = 0;
  for (const RoundRecord& r : ep.records) {
    CHECK(r.instant_regret >= -1e-12);
    CHECK(r.observed_reward == r.clean_reward + r.corruption);
    CHECK(r.cum_regret >= prev);
    prev = r.cum_regret;
    spent += std::abs(r.corruption);
    corrupted += r.corruption != 0.0 ? 1 : 0;
    CHECK(r.confidence_ok == (r.est_error <= ep.beta));
  }
  CHECK(spent == ep.corruption.c_realized);
  CHECK(corrupted == ep.corruption.rounds_corrupted);
  CHECK(ep.corruption.c_realized <= 15.0);
  CHECK(ep.snapshots.back().rounds == 500);
  CHECK(ep.snapshots.size() == 10);
}

TEST_CASE("snapshots: interval 0 keeps only the final one") {
  BanditInstance inst(vec({0.6, 0.2}), kUnit, FreshSphereSample{4}, NoiseKind::kGaussian);
  const EpisodeResult ep = run_episode(inst, Adversary(), oful(kUnit, 120, 0.05), opts(120, 1, 0));
  REQUIRE(ep.snapshots.size() == 1);
  CHECK(ep.snapshots[0].rounds == 120);
}

TEST_CASE("same seed, same trajectory") {
  BanditInstance inst(vec({0.1, 0.7, -0.2}), kUnit, FreshSphereSample{10}, NoiseKind::kGaussian);
  const PolicyConfig pc = cw_oful_known_c(kUnit, 3, 300, 5.0, 0.05);
  const Adversary adv(OptimalSuppression{0.4}, 5.0);
  const EpisodeResult a = run_episode(inst, adv, pc, opts(300, 77));
  const EpisodeResult b = run_episode(inst, adv, pc, opts(300, 77));
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].action_index == b.records[i].action_index);
    CHECK(a.records[i].observed_reward == b.records[i].observed_reward);
    CHECK(a.records[i].weight == b.records[i].weight);
  }
}

TEST_CASE("changing the adversary does not perturb the noise sequence") {
  BanditInstance inst(vec({0.5, 0.1}), kUnit, FixedFinite{{vec({1, 0}), vec({0, 1})}},
                      NoiseKind::kGaussian);
  PolicyConfig pc = oful(kUnit, 100, 0.05);
  pc.beta_mode = FixedBeta{0.0};
  pc.kind = PolicyKind::kGreedy;
  const EpisodeResult clean = run_episode(inst, Adversary(), pc, opts(100, 5));
  const EpisodeResult hit =
      run_episode(inst, Adversary(OptimalSuppression{0.3}, 1000.0), pc, opts(100, 5));
  // Same rounds, possibly different arms: the noise draw per round matches.
  for (std::size_t i = 0; i < clean.records.size(); ++i) {
    const double noise_a = clean.records[i].clean_reward -
                           inst.mean_reward(Vector::Unit(2, clean.records[i].action_index));
    const double noise_b = hit.records[i].clean_reward -
                           inst.mean_reward(Vector::Unit(2, hit.records[i].action_index));
    CHECK(noise_a == doctest::Approx(noise_b).epsilon(1e-15));
  }
}

TEST_CASE("paired lower-bound runs agree until the budget runs out") {
  for (int d : {2, 3, 5}) {
    CAPTURE(d);
    LowerboundOptions o;
    o.dim = d;
    o.budget_param = 3.0;
    o.horizon = 2000;
    const LowerboundReport rep = run_lowerbound(o);
    REQUIRE(rep.first_declined_round > 0);
    CHECK(rep.prefix_match);
    const std::vector<int> a0 = rep.a0.action_sequence();
    const std::vector<int> a1 = rep.a1.action_sequence();
    for (int k = 0; k + 1 < rep.first_declined_round; ++k) CHECK(a0[k] == a1[k]);
    CHECK(rep.divergence_round >= rep.first_declined_round);
    CHECK(rep.c_realized <= rep.flip_budget);
  }
}

TEST_CASE("zero flip budget: traces split at the first pull of arm 2") {
  LowerboundOptions o;
  o.dim = 2;
  o.budget_param = 0.0;
  o.horizon = 300;
  const LowerboundReport rep = run_lowerbound(o);
  int first_arm2 = 0;
  for (const RoundRecord& r : rep.a0.records) {
    if (r.action_index == 1) {
      first_arm2 = r.k;
      break;
    }
  }
  REQUIRE(first_arm2 > 0);
  CHECK(rep.divergence_round == first_arm2);
  CHECK(rep.first_declined_round == first_arm2);
  CHECK(rep.prefix_match);
  CHECK(rep.c_realized == 0.0);
}

TEST_CASE("component failures surface as a structured episode failure") {
  BanditInstance inst(vec({0.5, 0.1}), kUnit, BasisArms{}, NoiseKind::kZero);
  PolicyConfig pc = oful(kUnit, 10, 0.05);
  pc.delta = 2.0;
  CHECK_THROWS(run_episode(inst, Adversary(), pc, opts(10, 0)));
  CHECK_THROWS(run_episode(inst, Adversary(), oful(kUnit, 10, 0.05), opts(0, 0)));
  CHECK_THROWS_AS(run_episode(lower_bound_instance_pair(2, 0).a0, Adversary(),
                              oful(kUnit, 10, 0.05),
                              [] {
                                EpisodeOptions o;
                                o.horizon = 10;
                                o.on_round = [](int k, const Policy&) {
                                  if (k == 4) throw std::runtime_error("boom");
                                };
                                return o;
                              }()),
                  EpisodeFailure);
}
