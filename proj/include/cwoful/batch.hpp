#pragma once

#include <memory>
#include <span>
#include <vector>

#include "cwoful/harness.hpp"

namespace cwoful {

/// One independent episode of a batch.
struct EpisodeJob {
  std::shared_ptr<const BanditInstance> instance;
  Adversary adversary;
  PolicyConfig policy;
  EpisodeOptions options;
};

/// Runs every job on the calling thread, in order. Reference for
/// run_batch.
std::vector<EpisodeResult> run_batch_serial(std::span<const EpisodeJob> jobs);

/// Runs the jobs on an OpenMP team of `threads` workers (<= 0: the OpenMP
/// default). Results are stored by job index, so the output equals
/// run_batch_serial's bit for bit. The first failure is rethrown after the
/// team joins.
std::vector<EpisodeResult> run_batch(std::span<const EpisodeJob> jobs,
                                     int threads = 0);

/// Number of workers an OpenMP team would use by default.
int default_parallelism();

}  // namespace cwoful
