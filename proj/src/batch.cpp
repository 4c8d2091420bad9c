#include "cwoful/batch.hpp"

#include <omp.h>

#include <exception>

namespace cwoful {

std::vector<EpisodeResult> run_batch_serial(std::span<const EpisodeJob> jobs) {
  std::vector<EpisodeResult> results;
  results.reserve(jobs.size());
  for (const EpisodeJob& job : jobs) {
    results.push_back(
        run_episode(*job.instance, job.adversary, job.policy, job.options));
  }
  return results;
}

std::vector<EpisodeResult> run_batch(std::span<const EpisodeJob> jobs,
                                     int threads) {
  const auto n = static_cast<std::ptrdiff_t>(jobs.size());
  std::vector<EpisodeResult> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  const int team = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const EpisodeJob& job = jobs[static_cast<std::size_t>(i)];
    try {
      results[static_cast<std::size_t>(i)] =
          run_episode(*job.instance, job.adversary, job.policy, job.options);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

int default_parallelism() { return omp_get_max_threads(); }

}  // namespace cwoful
