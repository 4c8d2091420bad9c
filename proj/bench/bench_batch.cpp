#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "cwoful/batch.hpp"

namespace {

std::vector<cwoful::EpisodeJob> make_jobs(int seeds, int horizon) {
  using namespace cwoful;
  const Bounds bounds{1.0, 1.0, 1.0};
  Vector theta = Vector::Zero(5);
  theta << 0.6, -0.3, 0.2, 0.5, 0.1;
  auto instance = std::make_shared<const BanditInstance>(
      theta, bounds, FreshSphereSample{32}, NoiseKind::kGaussian);
  const PolicyConfig pc = cw_oful_known_c(bounds, 5, horizon, 20.0, 0.05);
  std::vector<EpisodeJob> jobs;
  for (int s = 0; s < seeds; ++s) {
    EpisodeOptions eo;
    eo.horizon = horizon;
    eo.seed = static_cast<std::uint64_t>(s);
    eo.snapshot_interval = 0;
    jobs.push_back({instance, Adversary(OptimalSuppression{0.5}, 20.0), pc, eo});
  }
  return jobs;
}

void BM_BatchSerial(benchmark::State& state) {
  const auto jobs = make_jobs(static_cast<int>(state.range(0)), 1000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cwoful::run_batch_serial(jobs));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BatchParallel(benchmark::State& state) {
  const auto jobs = make_jobs(static_cast<int>(state.range(0)), 1000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cwoful::run_batch(jobs));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_BatchSerial)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BatchParallel)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
