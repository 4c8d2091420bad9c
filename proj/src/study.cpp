#include "cwoful/study.hpp"

#include <cmath>
#include <cstdio>
#include <map>

#include "cwoful/errors.hpp"

namespace cwoful {

std::string Cell::label() const {
  char buf[96];
  std::snprintf(buf, sizeof buf, "K%d_C%g_d%d", horizon, budget, dim);
  return buf;
}

std::vector<Cell> expand_cells(const ExperimentConfig& config) {
  const GridSpec& g = config.grid;
  const std::vector<int> ks = g.horizon.empty() ? std::vector<int>{config.horizon}
                                                : g.horizon;
  const std::vector<double> cs =
      g.budget.empty() ? std::vector<double>{config.adversary.budget} : g.budget;
  const std::vector<int> ds =
      g.dim.empty() ? std::vector<int>{config.instance.dim} : g.dim;
  std::vector<Cell> cells;
  for (int d : ds) {
    for (double c : cs) {
      for (int k : ks) cells.push_back(Cell{k, c, d});
    }
  }
  return cells;
}

std::shared_ptr<const BanditInstance> build_instance(const InstanceConfig& config,
                                                     int dim) {
  Vector theta;
  if (config.theta_star) {
    if (static_cast<int>(config.theta_star->size()) != dim) {
      throw ConfigurationError("instance: theta_star length must equal dim");
    }
    theta = Eigen::Map<const Vector>(config.theta_star->data(), dim);
  } else {
    RandomStream rng = make_stream(config.seed, StreamId::kInstance)
                           .split(static_cast<std::uint64_t>(dim));
    theta = sample_sphere(dim, config.theta_norm.value_or(config.bounds.S), rng);
  }

  DecisionSetSpec spec;
  const std::string& kind = config.decision_set.kind;
  if (kind == "fresh_sphere") {
    spec = FreshSphereSample{config.decision_set.num_arms};
  } else if (kind == "basis") {
    spec = BasisArms{};
  } else if (kind == "fixed") {
    FixedFinite fixed;
    for (const auto& arm : config.decision_set.arms) {
      if (static_cast<int>(arm.size()) != dim) {
        throw ConfigurationError("instance: arm length must equal dim");
      }
      fixed.arms.push_back(Eigen::Map<const Vector>(arm.data(), dim));
    }
    spec = std::move(fixed);
  } else {
    throw ConfigurationError("instance: unknown decision set kind '" + kind + "'");
  }
  return std::make_shared<const BanditInstance>(
      std::move(theta), config.bounds, std::move(spec), config.noise,
      config.misspec_epsilon, config.seed);
}

Adversary build_adversary(const AdversaryConfig& config, double budget) {
  const std::string& kind = config.kind;
  if (kind == "none") return Adversary(NoAttack{}, 0.0);
  if (kind == "target_flip") {
    return Adversary(TargetFlip{config.target_arm, config.flip_from, config.flip_to},
                     budget);
  }
  if (kind == "optimal_suppression") {
    return Adversary(OptimalSuppression{config.shift}, budget);
  }
  if (kind == "misspecification") return Adversary(Misspecification{}, budget);
  if (kind == "pre_action") return Adversary(PreActionTable{config.per_arm}, budget);
  throw ConfigurationError("adversary: unknown kind '" + kind + "'");
}

double auto_corruption(const ExperimentConfig& config, const Cell& cell) {
  if (config.adversary.kind == "none") return 0.0;
  if (config.adversary.kind == "misspecification") {
    return cell.horizon * config.instance.misspec_epsilon;
  }
  return cell.budget;
}

namespace {

std::optional<double> resolve_alpha(const AlphaSetting& setting,
                                    const Bounds& bounds, double lambda, int dim,
                                    double corruption) {
  switch (setting.mode) {
    case AlphaSetting::Mode::kUncapped:
      return std::nullopt;
    case AlphaSetting::Mode::kValue:
      return setting.value;
    case AlphaSetting::Mode::kAuto:
      break;
  }
  if (!(corruption > 0.0)) return std::nullopt;
  return default_alpha(bounds, lambda, dim, corruption);
}

}  // namespace

PolicyConfig resolve_policy(const PolicySpec& spec, const ExperimentConfig& config,
                            const Cell& cell) {
  const Bounds& bounds = config.instance.bounds;
  const int d = cell.dim;
  const int K = cell.horizon;
  const double lambda = spec.lambda.value_or(bounds.R * bounds.R / (bounds.S * bounds.S));
  const double c_auto = auto_corruption(config, cell);

  PolicyConfig pc = oful(bounds, K, spec.delta, lambda);
  pc.kind = spec.kind;

  switch (spec.kind) {
    case PolicyKind::kCwOful: {
      double alpha_level = 0.0;
      switch (spec.beta.mode) {
        case BetaSetting::Mode::kKnownC:
          alpha_level = spec.beta.value.value_or(c_auto);
          pc.beta_mode = KnownC{alpha_level};
          break;
        case BetaSetting::Mode::kUnknownC:
          alpha_level = spec.beta.value.value_or(std::sqrt(static_cast<double>(K)));
          pc.beta_mode = UnknownC{alpha_level};
          break;
        case BetaSetting::Mode::kFixed:
          alpha_level = c_auto;
          pc.beta_mode = FixedBeta{*spec.beta.value};
          break;
      }
      pc.alpha = resolve_alpha(spec.alpha, bounds, lambda, d, alpha_level);
      break;
    }
    case PolicyKind::kOful:
      if (spec.beta.mode == BetaSetting::Mode::kFixed) {
        pc.beta_mode = FixedBeta{*spec.beta.value};
      }
      break;
    case PolicyKind::kEnlargedBetaOful: {
      const double c = spec.beta.mode == BetaSetting::Mode::kKnownC
                           ? spec.beta.value.value_or(c_auto)
                           : c_auto;
      pc = enlarged_beta_baseline(pc, c, d);
      break;
    }
    case PolicyKind::kGreedy:
      break;
  }
  validate(pc);
  return pc;
}

StudyResult run_study(const ExperimentConfig& config, const StudyOptions& options) {
  StudyResult study;
  for (const Cell& cell : expand_cells(config)) {
    CellResult cr;
    cr.cell = cell;
    auto instance = build_instance(config.instance, cell.dim);
    if (config.instance.decision_set.kind != "fresh_sphere") {
      cr.gap = minimal_gap(*instance);
    }
    const Adversary adversary = build_adversary(config.adversary, cell.budget);

    std::vector<EpisodeJob> jobs;
    for (const PolicySpec& spec : config.policies) {
      const PolicyConfig pc = resolve_policy(spec, config, cell);
      for (std::uint64_t seed : config.seeds) {
        EpisodeOptions eo;
        eo.horizon = cell.horizon;
        eo.seed = seed;
        eo.snapshot_interval = config.snapshot_interval;
        jobs.push_back(EpisodeJob{instance, adversary, pc, eo});
      }
    }
    std::vector<EpisodeResult> results = run_batch(jobs, options.threads);

    const std::size_t n_seeds = config.seeds.size();
    for (std::size_t p = 0; p < config.policies.size(); ++p) {
      PolicyRun run;
      run.spec = config.policies[p];
      run.resolved = jobs[p * n_seeds].policy;
      auto first = results.begin() + static_cast<std::ptrdiff_t>(p * n_seeds);
      std::vector<EpisodeResult> episodes(std::make_move_iterator(first),
                                          std::make_move_iterator(first + static_cast<std::ptrdiff_t>(n_seeds)));
      run.beta = episodes.front().beta;
      run.curve = aggregate(std::span<const EpisodeResult>(episodes));
      if (options.keep_episodes) run.episodes = std::move(episodes);
      cr.policies.push_back(std::move(run));
    }
    study.cells.push_back(std::move(cr));
  }
  return study;
}

ScalingTable scaling_study(const StudyResult& study) {
  ScalingTable table;
  // (policy, dim) -> K -> mean regret, over C = 0 cells
  std::map<std::pair<std::string, int>, std::map<int, double>> by_k;
  // (policy, dim, K) -> C -> mean regret
  std::map<std::tuple<std::string, int, int>, std::map<double, double>> by_c;

  for (const CellResult& cr : study.cells) {
    for (const PolicyRun& run : cr.policies) {
      ScalingRow row;
      row.policy = run.spec.name;
      row.cell = cr.cell;
      row.mean_regret = run.curve.final_mean();
      row.std_regret = run.curve.regret.std.empty() ? 0.0 : run.curve.regret.std.back();
      if (cr.gap) {
        const double d = cr.cell.dim;
        row.gap_ratio = row.mean_regret / (d * d / *cr.gap + d * cr.cell.budget);
      }
      table.rows.push_back(row);
      if (cr.cell.budget == 0.0) {
        by_k[{row.policy, cr.cell.dim}][cr.cell.horizon] = row.mean_regret;
      }
      by_c[{row.policy, cr.cell.dim, cr.cell.horizon}][cr.cell.budget] =
          row.mean_regret;
    }
  }

  for (const auto& [key, series] : by_k) {
    if (series.size() < 2) continue;
    std::vector<double> x, y;
    for (const auto& [k, r] : series) {
      if (!(r > 0.0)) {
        x.clear();
        break;
      }
      x.push_back(std::log(static_cast<double>(k)));
      y.push_back(std::log(r));
    }
    if (x.size() < 2) continue;
    table.fits.push_back(ScalingFit{key.first, "loglog_K", key.second, 0,
                                    affine_fit(x, y)});
  }
  for (const auto& [key, series] : by_c) {
    if (series.size() < 2) continue;
    std::vector<double> x, y;
    for (const auto& [c, r] : series) {
      x.push_back(c);
      y.push_back(r);
    }
    table.fits.push_back(ScalingFit{std::get<0>(key), "affine_C", std::get<1>(key),
                                    std::get<2>(key), affine_fit(x, y)});
  }
  return table;
}

}  // namespace cwoful
