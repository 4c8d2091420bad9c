#include <doctest.h>

#include <string>

#include "cwoful/config.hpp"
#include "cwoful/errors.hpp"

using namespace cwoful;

namespace {

const char* kFull = R"(name: full
horizon: 500
seeds: {first: 3, count: 4}
snapshot_interval: 25
output_dir: out/full
instance:
  dim: 3
  bounds: {L: 1.5, S: 0.75, R: 0.3}
  theta_star: [0.1, 0.2, 0.30000000000000004]
  decision_set:
    kind: fixed
    arms: [[1, 0, 0], [0, 1, 0], [0.5, 0.5, 0.5]]
  noise: uniform
  misspec_epsilon: 0.01
  seed: 12
adversary:
  kind: pre_action
  budget: 4.5
  per_arm: [0.1, 0.2, 0.3]
policies:
  - name: a
    kind: cw_oful
    lambda: 0.4
    alpha: 0.125
    beta: {mode: known_c, C: 3}
    delta: 0.1
  - name: b
    kind: cw_oful
    beta: {mode: unknown_c, C_bar: auto}
  - name: c
    kind: cw_oful
    alpha: uncapped
    beta: {mode: fixed, value: 2.5}
  - name: d
    kind: enlarged_beta_oful
  - kind: greedy
grid:
  horizon: [100, 200]
  budget: [0, 1.5]
)";

std::string error_of(const std::string& text) {
  try {
    parse_config(text, "cfg.yaml");
  } catch (const ConfigFileError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("full config parses") {
  const ExperimentConfig c = parse_config(kFull);
  CHECK(c.name == "full");
  CHECK(c.horizon == 500);
  CHECK(c.seeds == std::vector<std::uint64_t>{3, 4, 5, 6});
  CHECK(c.instance.bounds == Bounds{1.5, 0.75, 0.3});
  CHECK(c.instance.decision_set.arms.size() == 3);
  CHECK(c.instance.noise == NoiseKind::kUniformBounded);
  CHECK(c.adversary.per_arm.size() == 3);
  REQUIRE(c.policies.size() == 5);
  CHECK(c.policies[0].alpha.mode == AlphaSetting::Mode::kValue);
  CHECK(c.policies[1].beta.mode == BetaSetting::Mode::kUnknownC);
  CHECK_FALSE(c.policies[1].beta.value.has_value());
  CHECK(c.policies[2].beta.value == 2.5);
  CHECK(c.policies[4].name == "greedy");
  CHECK(c.grid.budget == std::vector<double>{0, 1.5});
}

TEST_CASE("emit then parse gives back an equal config") {
  const ExperimentConfig c = parse_config(kFull);
  const std::string text = emit_config(c);
  const ExperimentConfig again = parse_config(text);
  CHECK(again == c);
  CHECK(emit_config(again) == text);

  ExperimentConfig m;
  m.seeds = {1};
  m.policies.push_back(PolicySpec{"p", PolicyKind::kOful, {}, {}, {}, 0.05});
  m.instance.theta_norm = 0.1 + 0.2;
  CHECK(parse_config(emit_config(m)).instance.theta_norm == 0.1 + 0.2);
}

TEST_CASE("delta outside (0,1) names the field") {
  const std::string text =
      "horizon: 10\nseeds: [1]\ninstance: {dim: 2}\npolicies:\n"
      "  - kind: oful\n    delta: 1.5\n";
  const std::string msg = error_of(text);
  CHECK(msg.find("policies[0].delta") != std::string::npos);
  CHECK(msg.find("cfg.yaml:6") != std::string::npos);
}

TEST_CASE("diagnostics carry line numbers") {
  CHECK(error_of("horizon: 10\nseeds: [1]\ninstance: {dim: 2}\npolicies: [{kind: oful}]\nbogus: 1\n")
            .find("cfg.yaml:5: bogus: unknown key") != std::string::npos);
  CHECK(error_of("horizon: 0\nseeds: [1]\ninstance: {dim: 2}\npolicies: [{kind: oful}]\n")
            .find("cfg.yaml:1: horizon") != std::string::npos);
  CHECK(error_of("horizon: 5\nseeds: []\ninstance: {dim: 2}\npolicies: [{kind: oful}]\n")
            .find("seeds") != std::string::npos);
  CHECK(error_of("horizon: 5\nseeds: [1]\ninstance: {dim: 2}\npolicies: [{kind: ucb}]\n")
            .find("policies[0].kind") != std::string::npos);
  CHECK(error_of("horizon: 5\nseeds: [1]\ninstance:\n  dim: 2\n  theta_star: [1, 1]\n"
                 "policies: [{kind: oful}]\n")
            .find("cfg.yaml:5: instance.theta_star") != std::string::npos);
  CHECK(error_of("horizon: [5\n").find("cfg.yaml:") != std::string::npos);
  CHECK(error_of("horizon: 5\nseeds: [1]\ninstance: {dim: 2, theta_star: [0.1, 0.1]}\n"
                 "policies: [{kind: oful}]\ngrid: {dim: [2, 3]}\n")
            .find("grid.dim") != std::string::npos);
}

TEST_CASE("seed list syntax") {
  CHECK(parse_seed_list("1,2,5") == std::vector<std::uint64_t>{1, 2, 5});
  CHECK(parse_seed_list("10:3") == std::vector<std::uint64_t>{10, 11, 12});
  CHECK_THROWS_AS(parse_seed_list("x"), ConfigurationError);
  CHECK_THROWS_AS(parse_seed_list(""), ConfigurationError);
}

TEST_CASE("validate rejects overridden nonsense") {
  ExperimentConfig c = parse_config(kFull);
  c.seeds.clear();
  CHECK_THROWS_AS(validate(c, "x"), ConfigFileError);
}
