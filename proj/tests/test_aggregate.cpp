#include <doctest.h>

#include <algorithm>
#include <random>

#include "cwoful/aggregate.hpp"
#include "cwoful/batch.hpp"
#include "cwoful/errors.hpp"

using namespace cwoful;

namespace {

CurveInput constant(std::uint64_t seed, double v, int K) {
  CurveInput c;
  c.seed = seed;
  c.cumulative_regret.assign(K, v);
  c.corruption.assign(K, 0.0);
  c.potential.assign(K, 0.0);
  return c;
}

}  // namespace

TEST_CASE("single curve: mean is the curve, std zero") {
  CurveInput c = constant(1, 0.0, 3);
  c.cumulative_regret = {1.0, 2.5, 4.0};
  const RegretCurve out = aggregate(std::vector<CurveInput>{c});
  CHECK(out.regret.mean == c.cumulative_regret);
  CHECK(out.regret.std == std::vector<double>(3, 0.0));
  CHECK(out.regret.min == c.cumulative_regret);
  CHECK(out.regret.max == c.cumulative_regret);
  CHECK(out.final_mean() == 4.0);
}

TEST_CASE("population std of constant curves 0 and 2") {
  const RegretCurve out = aggregate(std::vector<CurveInput>{constant(1, 0.0, 4), constant(2, 2.0, 4)});
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(out.regret.mean[k] == 1.0);
    CHECK(out.regret.std[k] == 1.0);
    CHECK(out.regret.min[k] == 0.0);
    CHECK(out.regret.max[k] == 2.0);
  }
}

TEST_CASE("mismatched horizons and empty input are rejected") {
  CHECK_THROWS_AS(aggregate(std::vector<CurveInput>{constant(1, 0, 3), constant(2, 0, 4)}),
                  ContractError);
  CHECK_THROWS_AS(aggregate(std::vector<CurveInput>{}), ContractError);
}

TEST_CASE("100 seeds: the aggregate ignores input order") {
  const Bounds unit{1.0, 1.0, 1.0};
  Vector theta(3);
  theta << 0.5, -0.2, 0.4;
  auto inst = std::make_shared<const BanditInstance>(theta, unit, FreshSphereSample{8},
                                                     NoiseKind::kGaussian);
  std::vector<EpisodeJob> jobs;
  for (std::uint64_t s = 0; s < 100; ++s) {
    EpisodeOptions o;
    o.horizon = 150;
    o.seed = s;
    o.snapshot_interval = 0;
    jobs.push_back({inst, Adversary(), oful(unit, 150, 0.05), o});
  }
  const std::vector<EpisodeResult> eps = run_batch_serial(jobs);
  std::vector<CurveInput> inputs;
  for (const auto& e : eps) inputs.push_back(curve_input(e));
  const RegretCurve ref = aggregate(inputs);

  std::mt19937_64 gen(5);
  for (int t = 0; t < 5; ++t) {
    std::shuffle(inputs.begin(), inputs.end(), gen);
    const RegretCurve again = aggregate(inputs);
    CHECK(again.regret.mean == ref.regret.mean);
    CHECK(again.regret.std == ref.regret.std);
    CHECK(again.seeds == ref.seeds);
  }
  CHECK(std::is_sorted(ref.seeds.begin(), ref.seeds.end()));
  for (std::size_t k = 1; k < ref.regret.mean.size(); ++k) {
    CHECK(ref.regret.mean[k] >= ref.regret.mean[k - 1]);
  }
}

TEST_CASE("fits") {
  const std::vector<double> x{1, 2, 3, 4};
  const std::vector<double> y{3, 5, 7, 9};
  const AffineFit f = affine_fit(x, y);
  CHECK(f.slope == doctest::Approx(2.0));
  CHECK(f.intercept == doctest::Approx(1.0));
  CHECK(f.r_squared == doctest::Approx(1.0));

  const std::vector<double> k{100, 400, 1600};
  const std::vector<double> r{10, 20, 40};
  CHECK(loglog_slope(k, r) == doctest::Approx(0.5));
  CHECK_THROWS_AS(loglog_slope(std::vector<double>{1, 0}, std::vector<double>{1, 1}),
                  ContractError);
}
