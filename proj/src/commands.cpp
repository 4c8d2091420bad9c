#include "cwoful/commands.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "cwoful/csv.hpp"
#include "cwoful/diagnostics.hpp"
#include "cwoful/errors.hpp"
#include "cwoful/study.hpp"

namespace cwoful {

namespace fs = std::filesystem;

std::string version_string() { return CWOFUL_VERSION; }

fs::path resolve_output_dir(const std::string& config_output_dir,
                            const std::string& name,
                            const std::optional<std::string>& out) {
  if (out) return *out;
  if (!config_output_dir.empty()) return config_output_dir;
  if (const char* root = std::getenv(kOutputRootEnv); root && *root) {
    return fs::path(root) / name;
  }
  return fs::path("results") / name;
}

namespace {

ExperimentConfig load_with_overrides(const fs::path& path,
                                     const RunOverrides& overrides) {
  ExperimentConfig config = load_config(path);
  if (overrides.seeds) config.seeds = *overrides.seeds;
  if (overrides.snapshot_interval) {
    config.snapshot_interval = *overrides.snapshot_interval;
  }
  validate(config, path.string());
  return config;
}

std::string alpha_text(const std::optional<double>& alpha) {
  return alpha ? format_double(*alpha) : std::string("uncapped");
}

void emit_metadata(const fs::path& path, const ExperimentConfig& config,
                   const StudyResult& study) {
  YAML::Emitter out;
  out.SetDoublePrecision(17);
  out << YAML::BeginMap;
  out << YAML::Key << "version" << YAML::Value << version_string();
  out << YAML::Key << "prng" << YAML::Value << std::string(kPrngFamily);
  out << YAML::Key << "derived" << YAML::Value << YAML::BeginSeq;
  for (const CellResult& cr : study.cells) {
    for (const PolicyRun& run : cr.policies) {
      out << YAML::BeginMap;
      out << YAML::Key << "cell" << YAML::Value << cr.cell.label();
      out << YAML::Key << "policy" << YAML::Value << run.spec.name;
      out << YAML::Key << "kind" << YAML::Value << to_string(run.resolved.kind);
      out << YAML::Key << "lambda" << YAML::Value << run.resolved.lambda;
      out << YAML::Key << "alpha" << YAML::Value << alpha_text(run.resolved.alpha);
      out << YAML::Key << "beta" << YAML::Value << run.beta;
      out << YAML::Key << "beta_below_one" << YAML::Value << (run.beta < 1.0);
      out << YAML::EndMap;
    }
  }
  out << YAML::EndSeq;
  out << YAML::Key << "config" << YAML::Value << YAML::Load(emit_config(config));
  out << YAML::EndMap;
  write_text(path, std::string(out.c_str()) + "\n");
}

CsvWriter summary_csv(const StudyResult& study) {
  CsvWriter csv({"cell", "K", "C", "d", "policy", "lambda", "alpha", "beta",
                 "seeds", "mean_regret", "std_regret", "mean_c_realized",
                 "confidence_violations"});
  for (const CellResult& cr : study.cells) {
    for (const PolicyRun& run : cr.policies) {
      const double c_mean =
          run.curve.corruption.mean.empty() ? 0.0 : run.curve.corruption.mean.back();
      csv.row({cr.cell.label(), std::to_string(cr.cell.horizon),
               format_double(cr.cell.budget), std::to_string(cr.cell.dim),
               run.spec.name, format_double(run.resolved.lambda),
               alpha_text(run.resolved.alpha), format_double(run.beta),
               std::to_string(run.curve.seeds.size()),
               format_double(run.curve.final_mean()),
               format_double(run.curve.regret.std.empty() ? 0.0
                                                          : run.curve.regret.std.back()),
               format_double(c_mean), std::to_string(run.curve.confidence_violations)});
    }
  }
  return csv;
}

CsvWriter scaling_csv(const ScalingTable& table) {
  CsvWriter csv({"policy", "kind", "d", "K", "slope", "intercept", "r_squared"});
  for (const ScalingFit& f : table.fits) {
    csv.row({f.policy, f.kind, std::to_string(f.dim), std::to_string(f.horizon),
             format_double(f.fit.slope), format_double(f.fit.intercept),
             format_double(f.fit.r_squared)});
  }
  return csv;
}

CsvWriter scaling_rows_csv(const ScalingTable& table) {
  CsvWriter csv({"policy", "K", "C", "d", "mean_regret", "std_regret", "gap_ratio"});
  for (const ScalingRow& r : table.rows) {
    csv.row({r.policy, std::to_string(r.cell.horizon), format_double(r.cell.budget),
             std::to_string(r.cell.dim), format_double(r.mean_regret),
             format_double(r.std_regret),
             r.gap_ratio ? format_double(*r.gap_ratio) : std::string()});
  }
  return csv;
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ConfigFileError& e) {
    err << "config error: " << e.what() << "\n";
  } catch (const EpisodeFailure& e) {
    err << "episode failed: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 1;
}

}  // namespace

int cmd_run(const fs::path& config_path, const RunOverrides& overrides,
            std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ExperimentConfig config = load_with_overrides(config_path, overrides);
    const fs::path dir =
        resolve_output_dir(config.output_dir, config.name, overrides.out);
    fs::create_directories(dir);
    const fs::path marker = dir / ".incomplete";
    write_text(marker, "");

    StudyOptions so;
    so.threads = overrides.jobs.value_or(0);
    const StudyResult study = run_study(config, so);

    for (const CellResult& cr : study.cells) {
      for (const PolicyRun& run : cr.policies) {
        const fs::path pdir = dir / cr.cell.label() / run.spec.name;
        fs::create_directories(pdir);
        for (const EpisodeResult& ep : run.episodes) {
          round_log_csv(ep).save(pdir / ("seed_" + std::to_string(ep.seed) + ".csv"));
        }
        curve_csv(run.curve.regret).save(pdir / "regret.csv");
        curve_csv(run.curve.corruption).save(pdir / "corruption.csv");
        curve_csv(run.curve.potential).save(pdir / "potential.csv");
      }
    }
    summary_csv(study).save(dir / "summary.csv");
    if (!config.grid.empty()) {
      const ScalingTable table = scaling_study(study);
      scaling_csv(table).save(dir / "scaling.csv");
      scaling_rows_csv(table).save(dir / "scaling_cells.csv");
    }
    emit_metadata(dir / "metadata.yaml", config, study);
    fs::remove(marker);

    for (const CellResult& cr : study.cells) {
      for (const PolicyRun& run : cr.policies) {
        out << cr.cell.label() << " " << run.spec.name
            << " mean_regret=" << format_double(run.curve.final_mean())
            << " beta=" << format_double(run.beta) << "\n";
      }
    }
    out << "wrote " << dir.string() << "\n";
    return 0;
  });
}

int cmd_check(const fs::path& config_path, const RunOverrides& overrides,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ExperimentConfig config = load_with_overrides(config_path, overrides);
    StudyOptions so;
    so.threads = overrides.jobs.value_or(0);
    const StudyResult study = run_study(config, so);

    bool all_ok = true;
    auto verdict = [](bool ok) { return ok ? "PASS" : "FAIL"; };
    for (const CellResult& cr : study.cells) {
      for (const PolicyRun& run : cr.policies) {
        const DiagnosticReport rep = diagnostic_lemma_checks(
            run.episodes, run.resolved.delta, config.instance.bounds.R);
        bool potential_ok = true, corruption_ok = true, weights_ok = true,
             reg_ok = true;
        double max_corruption_term = 0.0;
        for (const EpisodeDiagnostics& e : rep.episodes) {
          potential_ok = potential_ok && e.potential_ok;
          corruption_ok = corruption_ok && e.corruption_ok && e.weighted_corruption_ok;
          weights_ok = weights_ok && e.weights_ok;
          reg_ok = reg_ok && e.regularization_ok;
          max_corruption_term = std::max(max_corruption_term, e.max_corruption_term);
        }
        all_ok = all_ok && rep.all_hard_ok;
        const std::string tag = cr.cell.label() + " " + run.spec.name + " ";
        out << "[" << verdict(potential_ok) << "] " << tag
            << "potential inequality, min margin "
            << format_double(rep.min_potential_margin) << "\n";
        out << "[" << verdict(corruption_ok) << "] " << tag
            << "corruption term <= alpha C, max term "
            << format_double(max_corruption_term) << ", min margin "
            << format_double(rep.min_corruption_margin) << "\n";
        out << "[" << verdict(reg_ok) << "] " << tag
            << "regularization term <= sqrt(lambda) ||theta*||\n";
        out << "[" << verdict(weights_ok) << "] " << tag << "weight cap\n";
        out << "[INFO] " << tag << "confidence violation rate "
            << format_double(rep.confidence_violation_rate) << " vs delta "
            << format_double(rep.delta) << " over " << rep.episodes.size()
            << " seeds\n";
        out << "[INFO] " << tag << "self-normalized violation rate "
            << format_double(rep.self_normalized_violation_rate) << "\n";
        if (run.beta < 1.0) out << "[WARN] " << tag << "beta < 1\n";
      }
    }
    out << (all_ok ? "all hard checks passed\n" : "hard check failure\n");
    return all_ok ? 0 : 2;
  });
}

PolicyConfig lowerbound_policy(const std::string& policy, int dim, int horizon,
                               double delta) {
  const Bounds bounds{1.0, 1.0, 1.0};
  if (policy == "oful") return oful(bounds, horizon, delta);
  if (policy == "greedy") {
    PolicyConfig pc = oful(bounds, horizon, delta);
    pc.kind = PolicyKind::kGreedy;
    return pc;
  }
  if (policy == "cw_oful") return cw_oful_unknown_c(bounds, dim, horizon, delta);
  throw ConfigurationError("lowerbound: policy must be oful | cw_oful | greedy, got '" +
                           policy + "'");
}

LowerboundReport run_lowerbound(const LowerboundOptions& options) {
  if (options.dim < 2) throw ConfigurationError("lowerbound: d must be >= 2");
  if (options.horizon < 1) throw ConfigurationError("lowerbound: K must be >= 1");
  if (options.budget_param && !(*options.budget_param >= 0.0)) {
    throw ConfigurationError("lowerbound: budget must be >= 0");
  }
  const int d = options.dim;
  const int K = options.horizon;
  const PolicyConfig pc = lowerbound_policy(options.policy, d, K, options.delta);
  EpisodeOptions eo;
  eo.horizon = K;
  eo.seed = options.seed;
  eo.snapshot_interval = 0;

  LowerboundReport rep;
  rep.dim = d;
  rep.horizon = K;
  {
    const InstancePair probe = lower_bound_instance_pair(d, 0.0);
    rep.a0 = run_episode(probe.a0, Adversary(), pc, eo);
  }
  rep.regret_a0 = rep.a0.total_regret();
  rep.budget_param = options.budget_param.value_or(rep.regret_a0);

  const InstancePair pair = lower_bound_instance_pair(d, rep.budget_param);
  rep.theta_a0 = pair.a0.theta_star();
  rep.theta_a1 = pair.a1.theta_star();
  const Adversary adversary = lower_bound_adversary(rep.budget_param, d);
  rep.flip_budget = adversary.budget();
  rep.a1 = run_episode(pair.a1, adversary, pc, eo);
  rep.regret_a1 = rep.a1.total_regret();
  rep.c_realized = rep.a1.corruption.c_realized;
  rep.first_declined_round = rep.a1.first_declined_round;

  for (int k = 0; k < K; ++k) {
    const RoundRecord& r0 = rep.a0.records[static_cast<std::size_t>(k)];
    const RoundRecord& r1 = rep.a1.records[static_cast<std::size_t>(k)];
    const bool same = r0.action_index == r1.action_index &&
                      r0.observed_reward == r1.observed_reward;
    if (!same && rep.divergence_round == 0) rep.divergence_round = k + 1;
    const bool before_exhaustion =
        rep.first_declined_round == 0 || k + 1 < rep.first_declined_round;
    if (before_exhaustion && !same) rep.prefix_match = false;
  }

  rep.a1_bound = 0.125 * (K - 16.0 * rep.budget_param / (d - 1));
  rep.bound_applicable = rep.first_declined_round == 0;
  rep.bound_ok = rep.regret_a1 >= rep.a1_bound;
  return rep;
}

namespace {

std::string vector_text(const Vector& v) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_double(v[i]);
  }
  return s + "]";
}

}  // namespace

int cmd_lowerbound(const LowerboundOptions& options, std::ostream& out,
                   std::ostream& err) {
  return guarded(err, [&] {
    const LowerboundReport rep = run_lowerbound(options);

    const fs::path dir = resolve_output_dir(
        "", "lowerbound_d" + std::to_string(rep.dim) + "_" + options.policy,
        options.out);
    fs::create_directories(dir);

    CsvWriter trace({"k", "action_a0", "action_a1", "observed_a0", "observed_a1",
                     "c_a1", "cum_regret_a0", "cum_regret_a1"});
    for (int k = 0; k < rep.horizon; ++k) {
      const RoundRecord& r0 = rep.a0.records[static_cast<std::size_t>(k)];
      const RoundRecord& r1 = rep.a1.records[static_cast<std::size_t>(k)];
      trace.row({std::to_string(k + 1), std::to_string(r0.action_index),
                 std::to_string(r1.action_index), format_double(r0.observed_reward),
                 format_double(r1.observed_reward), format_double(r1.corruption),
                 format_double(r0.cum_regret), format_double(r1.cum_regret)});
    }
    trace.save(dir / "paired_trace.csv");

    std::ostringstream report;
    report << "d: " << rep.dim << "\n"
           << "K: " << rep.horizon << "\n"
           << "policy: " << options.policy << "\n"
           << "seed: " << options.seed << "\n"
           << "budget_param: " << format_double(rep.budget_param) << "\n"
           << "flip_budget: " << format_double(rep.flip_budget) << "\n"
           << "theta_a0: " << vector_text(rep.theta_a0) << "\n"
           << "theta_a1: " << vector_text(rep.theta_a1) << "\n"
           << "regret_a0: " << format_double(rep.regret_a0) << "\n"
           << "regret_a1: " << format_double(rep.regret_a1) << "\n"
           << "c_realized: " << format_double(rep.c_realized) << "\n"
           << "divergence_round: " << rep.divergence_round << "\n"
           << "first_declined_round: " << rep.first_declined_round << "\n"
           << "prefix_match: " << (rep.prefix_match ? "true" : "false") << "\n"
           << "a1_bound: " << format_double(rep.a1_bound) << "\n"
           << "a1_bound_applicable: " << (rep.bound_applicable ? "true" : "false")
           << "\n"
           << "a1_bound_holds: " << (rep.bound_ok ? "true" : "false") << "\n";
    write_text(dir / "report.yaml", report.str());

    out << report.str();
    out << "A1 regret >= (1/8)(K - 16 budget/(d-1)): "
        << (rep.bound_applicable ? (rep.bound_ok ? "PASS" : "FAIL")
                                 : "n/a (flip budget exhausted)")
        << "\n";
    out << "indistinguishability: " << (rep.prefix_match ? "PASS" : "FAIL") << "\n";
    out << "wrote " << dir.string() << "\n";
    return rep.prefix_match ? 0 : 2;
  });
}

}  // namespace cwoful
