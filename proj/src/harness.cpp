#include "cwoful/harness.hpp"

#include "cwoful/errors.hpp"

namespace cwoful {

std::vector<int> EpisodeResult::action_sequence() const {
  std::vector<int> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.action_index);
  return out;
}

std::vector<double> EpisodeResult::cumulative_regret() const {
  std::vector<double> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.cum_regret);
  return out;
}

EpisodeResult run_episode(const BanditInstance& instance, Adversary adversary,
                          const PolicyConfig& policy_config,
                          const EpisodeOptions& options) {
  const int d = instance.dim();
  if (options.horizon < 1) {
    throw ConfigurationError("run_episode: horizon must be >= 1");
  }
  Policy policy(policy_config, d);

  RandomStream env_rng = make_stream(options.seed, StreamId::kEnvironment);

  EpisodeResult result;
  result.seed = options.seed;
  result.dim = d;
  result.lambda = policy.config().lambda;
  result.beta = policy.beta();
  result.alpha = policy.config().alpha;
  result.theta_star = instance.theta_star();
  result.adversary_budget = adversary.budget();
  result.records.reserve(static_cast<std::size_t>(options.horizon));

  Vector noise_sum = Vector::Zero(d);
  Vector corruption_sum = Vector::Zero(d);
  double cum_regret = 0.0;

  auto take_snapshot = [&](int rounds) {
    result.snapshots.push_back(DesignSnapshot{rounds, policy.design().cov(),
                                              noise_sum, corruption_sum,
                                              adversary.spent()});
  };

  int k = 1;
  try {
    for (; k <= options.horizon; ++k) {
      const RoundContext round = generate_round(instance, k, env_rng);
      const Selection sel = policy.select_action(round.decision_set);
      const Vector& x = round.decision_set[static_cast<std::size_t>(sel.index)];

      RoundRecord rec;
      rec.k = k;
      rec.action_index = sel.index;
      rec.bonus = sel.bonus;
      rec.est_error = policy.design().estimation_error(instance.theta_star());
      rec.confidence_ok = rec.est_error <= policy.beta();

      const RewardDraw draw = sample_reward(instance, x, env_rng);
      const Corruption corr =
          adversary.corrupt(round, sel.index, draw.clean_reward);
      rec.clean_reward = draw.clean_reward;
      rec.corruption = corr.c;
      rec.observed_reward = corr.corrupted_reward;

      rec.weight = policy.weight_for_bonus(sel.bonus);
      policy.observe(x, rec.observed_reward, rec.weight);
      noise_sum += (rec.weight * draw.noise) * x;
      corruption_sum += (rec.weight * corr.c) * x;

      rec.instant_regret =
          round.optimal_value - round.arm_values[static_cast<std::size_t>(sel.index)];
      cum_regret += rec.instant_regret;
      rec.cum_regret = cum_regret;
      result.records.push_back(rec);
      if (options.on_round) options.on_round(k, policy);

      if (options.snapshot_interval > 0 && k % options.snapshot_interval == 0 &&
          k != options.horizon) {
        take_snapshot(k);
      }
    }
  } catch (const std::exception& e) {
    throw EpisodeFailure(options.seed, k, e.what());
  }
  take_snapshot(options.horizon);

  result.corruption = adversary.report();
  result.first_declined_round = adversary.first_declined_round();
  result.final_logdet = policy.design().logdet();
  result.final_theta_hat = policy.design().theta_hat();
  return result;
}

}  // namespace cwoful
