#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "cwoful/commands.hpp"
#include "cwoful/config.hpp"
#include "cwoful/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Corruption-weighted OFUL experiment runner"};
  app.set_version_flag("--version", cwoful::version_string());
  app.require_subcommand(1);

  std::string seeds_text;
  std::optional<std::string> out_dir;
  std::optional<int> jobs;
  std::optional<int> snapshot_interval;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seeds", seeds_text, "Seed list: a,b,c or first:count");
    sub->add_option("--out", out_dir, "Output directory");
    sub->add_option("--jobs", jobs, "Parallel workers (default: all cores)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--snapshot-interval", snapshot_interval,
                    "Rounds between design snapshots (0: final only)")
        ->check(CLI::NonNegativeNumber);
  };

  std::string config_path;
  CLI::App* run = app.add_subcommand("run", "Run every episode of a config");
  run->add_option("config", config_path, "Experiment config (YAML)")->required();
  add_common(run);

  CLI::App* check = app.add_subcommand("check", "Run the diagnostic checks");
  check->add_option("config", config_path, "Experiment config (YAML)")->required();
  add_common(check);

  cwoful::LowerboundOptions lb;
  std::string budget_text = "auto";
  CLI::App* lower =
      app.add_subcommand("lowerbound", "Paired indistinguishability experiment");
  lower->add_option("--d", lb.dim, "Dimension (>= 2)")->required();
  lower->add_option("--budget", budget_text,
                    "Budget parameter, or 'auto' for the regret measured on A0");
  lower->add_option("--policy", lb.policy, "oful | cw_oful | greedy")
      ->check(CLI::IsMember({"oful", "cw_oful", "greedy"}));
  lower->add_option("--K", lb.horizon, "Horizon")->check(CLI::PositiveNumber);
  lower->add_option("--seed", lb.seed, "Episode seed");
  lower->add_option("--out", out_dir, "Output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    cwoful::RunOverrides overrides;
    if (!seeds_text.empty()) overrides.seeds = cwoful::parse_seed_list(seeds_text);
    overrides.out = out_dir;
    overrides.jobs = jobs;
    overrides.snapshot_interval = snapshot_interval;

    if (run->parsed()) return cwoful::cmd_run(config_path, overrides, std::cout, std::cerr);
    if (check->parsed()) {
      return cwoful::cmd_check(config_path, overrides, std::cout, std::cerr);
    }
    if (budget_text != "auto") {
      try {
        lb.budget_param = std::stod(budget_text);
      } catch (const std::exception&) {
        throw cwoful::ConfigurationError("--budget: expected a number or 'auto', got '" +
                                         budget_text + "'");
      }
    }
    lb.out = out_dir;
    return cwoful::cmd_lowerbound(lb, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
