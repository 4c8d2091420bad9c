#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <yaml-cpp/yaml.h>

#include "cwoful/commands.hpp"
#include "cwoful/config.hpp"

using namespace cwoful;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("cwoful_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

fs::path write(const fs::path& dir, const std::string& text) {
  const fs::path p = dir / "config.yaml";
  std::ofstream(p) << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count_lines(const std::string& s) {
  return static_cast<int>(std::count(s.begin(), s.end(), '\n'));
}

const char* kMinimal = R"(name: minimal
horizon: 100
seeds: [1]
instance:
  dim: 2
  bounds: {L: 1, S: 1, R: 1}
  decision_set: {kind: fresh_sphere, num_arms: 32}
  seed: 7
policies:
  - name: oful
    kind: oful
)";

const char* kAttacked = R"(name: attacked
horizon: 300
seeds: [1, 2, 3]
snapshot_interval: 50
instance:
  dim: 3
  decision_set: {kind: fresh_sphere, num_arms: 16}
  seed: 2
adversary: {kind: optimal_suppression, budget: 5, shift: 0.5}
policies:
  - {name: cw, kind: cw_oful}
  - {name: oful, kind: oful}
grid:
  budget: [0, 5]
)";

}  // namespace

TEST_CASE("minimal config writes one 100-row per-round log") {
  const fs::path dir = scratch("minimal");
  std::ostringstream out, err;
  RunOverrides o;
  o.out = (dir / "out").string();
  REQUIRE(cmd_run(write(dir, kMinimal), o, out, err) == 0);
  int logs = 0;
  for (const auto& e : fs::recursive_directory_iterator(dir / "out")) {
    if (e.path().filename().string().rfind("seed_", 0) == 0) {
      ++logs;
      const std::string text = slurp(e.path());
      CHECK(count_lines(text) == 101);
      CHECK(text.rfind("k,action_index,weight,bonus,clean_reward,c_k,observed_reward,"
                       "instant_regret,cum_regret,est_error,confidence_ok\n",
                       0) == 0);
      CHECK(text.find('\r') == std::string::npos);
    }
  }
  CHECK(logs == 1);
  CHECK_FALSE(fs::exists(dir / "out" / ".incomplete"));
  CHECK(fs::exists(dir / "out" / "metadata.yaml"));
  CHECK(slurp(dir / "out" / "K100_C0_d2" / "oful" / "regret.csv").rfind("k,mean,std,min,max\n", 0) == 0);
}

TEST_CASE("rerun is byte identical and the metadata echo re-parses") {
  const fs::path dir = scratch("rerun");
  const fs::path cfg = write(dir, kAttacked);
  std::ostringstream out, err;
  RunOverrides a, b;
  a.out = (dir / "a").string();
  b.out = (dir / "b").string();
  b.jobs = 1;
  REQUIRE(cmd_run(cfg, a, out, err) == 0);
  REQUIRE(cmd_run(cfg, b, out, err) == 0);
  int compared = 0;
  for (const auto& e : fs::recursive_directory_iterator(dir / "a")) {
    if (e.path().extension() != ".csv") continue;
    const fs::path twin = dir / "b" / fs::relative(e.path(), dir / "a");
    CHECK(slurp(e.path()) == slurp(twin));
    ++compared;
  }
  CHECK(compared == 2 * 2 * (3 + 3) + 3);

  const YAML::Node meta = YAML::LoadFile((dir / "a" / "metadata.yaml").string());
  CHECK(meta["prng"].as<std::string>() == "philox4x32-10");
  YAML::Emitter em;
  em << meta["config"];
  CHECK(parse_config(em.c_str()) == load_config(cfg));
}

TEST_CASE("invalid delta: nonzero exit naming the field") {
  const fs::path dir = scratch("delta");
  std::string text = kMinimal;
  text += "    delta: 1.5\n";
  std::ostringstream out, err;
  RunOverrides o;
  o.out = (dir / "out").string();
  CHECK(cmd_run(write(dir, text), o, out, err) != 0);
  CHECK(err.str().find("policies[0].delta") != std::string::npos);
  CHECK(err.str().find(":12:") != std::string::npos);
}

TEST_CASE("output directory precedence") {
  CHECK(resolve_output_dir("cfg", "n", std::string("flag")) == fs::path("flag"));
  CHECK(resolve_output_dir("cfg", "n", std::nullopt) == fs::path("cfg"));
  setenv(kOutputRootEnv, "/tmp/root", 1);
  CHECK(resolve_output_dir("", "n", std::nullopt) == fs::path("/tmp/root/n"));
  unsetenv(kOutputRootEnv);
  CHECK(resolve_output_dir("", "n", std::nullopt) == fs::path("results/n"));
}

TEST_CASE("check passes hard inequalities; zero corruption margin is 0") {
  const fs::path dir = scratch("check");
  std::ostringstream out, err;
  CHECK(cmd_check(write(dir, kAttacked), RunOverrides{}, out, err) == 0);
  const std::string text = out.str();
  CHECK(text.find("[FAIL]") == std::string::npos);
  CHECK(text.find("K300_C0_d3 cw corruption term <= alpha C, max term 0, min margin 0") !=
        std::string::npos);
}

TEST_CASE("lowerbound command writes a paired trace and report") {
  const fs::path dir = scratch("lower");
  LowerboundOptions o;
  o.dim = 2;
  o.budget_param = 0.0;
  o.horizon = 200;
  o.out = (dir / "lb").string();
  std::ostringstream out, err;
  CHECK(cmd_lowerbound(o, out, err) == 0);
  CHECK(count_lines(slurp(dir / "lb" / "paired_trace.csv")) == 201);
  const YAML::Node rep = YAML::LoadFile((dir / "lb" / "report.yaml").string());
  CHECK(rep["theta_a0"][0].as<double>() == 0.25);
  CHECK(rep["theta_a0"][1].as<double>() == 0.125);
  CHECK(rep["prefix_match"].as<bool>());
  CHECK(rep["divergence_round"].as<int>() > 0);

  o.dim = 1;
  CHECK(cmd_lowerbound(o, out, err) != 0);
}
