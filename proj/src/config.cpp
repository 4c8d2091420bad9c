#include "cwoful/config.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "cwoful/errors.hpp"

namespace cwoful {

namespace {

// Walks a YAML tree, remembering the field path for diagnostics.
class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const YAML::Node& node, const std::string& field,
                         const std::string& message) const {
    const int line = node.IsDefined() ? node.Mark().line + 1 : 0;
    throw ConfigFileError(source_, line, field, message);
  }

  void require_map(const YAML::Node& node, const std::string& field) const {
    if (!node.IsMap()) fail(node, field, "expected a mapping");
  }

  void check_keys(const YAML::Node& map, const std::string& field,
                  std::initializer_list<const char*> allowed) const {
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& kv : map) {
      const std::string key = kv.first.as<std::string>();
      if (!ok.count(key)) {
        fail(kv.first, join(field, key), "unknown key");
      }
    }
  }

  template <typename T>
  T scalar(const YAML::Node& node, const std::string& field,
           const char* expected) const {
    if (!node.IsScalar()) fail(node, field, std::string("expected ") + expected);
    try {
      return node.as<T>();
    } catch (const YAML::Exception&) {
      fail(node, field, std::string("expected ") + expected + ", got '" +
                            node.Scalar() + "'");
    }
  }

  double number(const YAML::Node& node, const std::string& field) const {
    const double v = scalar<double>(node, field, "a number");
    if (!std::isfinite(v)) fail(node, field, "must be finite");
    return v;
  }

  int integer(const YAML::Node& node, const std::string& field) const {
    return scalar<int>(node, field, "an integer");
  }

  std::string text(const YAML::Node& node, const std::string& field) const {
    return scalar<std::string>(node, field, "a string");
  }

  AutoValue auto_number(const YAML::Node& node, const std::string& field) const {
    if (node.IsScalar() && node.Scalar() == "auto") return std::nullopt;
    return number(node, field);
  }

  std::vector<double> numbers(const YAML::Node& node,
                              const std::string& field) const {
    if (!node.IsSequence()) fail(node, field, "expected a list of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < node.size(); ++i) {
      out.push_back(number(node[i], field + "[" + std::to_string(i) + "]"));
    }
    return out;
  }

  std::vector<int> integers(const YAML::Node& node,
                            const std::string& field) const {
    if (!node.IsSequence()) fail(node, field, "expected a list of integers");
    std::vector<int> out;
    for (std::size_t i = 0; i < node.size(); ++i) {
      out.push_back(integer(node[i], field + "[" + std::to_string(i) + "]"));
    }
    return out;
  }

  static std::string join(const std::string& a, const std::string& b) {
    return a.empty() ? b : a + "." + b;
  }

  const std::string& source() const { return source_; }

 private:
  std::string source_;
};

NoiseKind parse_noise(const Reader& rd, const YAML::Node& node,
                      const std::string& field) {
  const std::string s = rd.text(node, field);
  if (s == "gaussian") return NoiseKind::kGaussian;
  if (s == "uniform") return NoiseKind::kUniformBounded;
  if (s == "zero") return NoiseKind::kZero;
  rd.fail(node, field, "expected gaussian | uniform | zero, got '" + s + "'");
}

InstanceConfig parse_instance(const Reader& rd, const YAML::Node& node) {
  const std::string f = "instance";
  rd.require_map(node, f);
  rd.check_keys(node, f,
                {"dim", "bounds", "theta_star", "theta_norm", "decision_set",
                 "noise", "misspec_epsilon", "seed"});
  InstanceConfig c;
  if (!node["dim"]) rd.fail(node, f + ".dim", "required");
  c.dim = rd.integer(node["dim"], f + ".dim");
  if (c.dim < 1) rd.fail(node["dim"], f + ".dim", "must be >= 1");

  if (const YAML::Node b = node["bounds"]) {
    rd.require_map(b, f + ".bounds");
    rd.check_keys(b, f + ".bounds", {"L", "S", "R"});
    for (const char* key : {"L", "S", "R"}) {
      if (!b[key]) continue;
      const std::string field = f + ".bounds." + key;
      const double v = rd.number(b[key], field);
      if (!(v > 0.0)) rd.fail(b[key], field, "must be > 0");
      (key[0] == 'L' ? c.bounds.L : key[0] == 'S' ? c.bounds.S : c.bounds.R) = v;
    }
  }
  if (const YAML::Node t = node["theta_star"]) {
    c.theta_star = rd.numbers(t, f + ".theta_star");
    if (static_cast<int>(c.theta_star->size()) != c.dim) {
      rd.fail(t, f + ".theta_star", "length must equal dim");
    }
    double sq = 0.0;
    for (double v : *c.theta_star) sq += v * v;
    if (std::sqrt(sq) > c.bounds.S + 1e-12) {
      rd.fail(t, f + ".theta_star", "norm exceeds bounds.S");
    }
  }
  if (const YAML::Node t = node["theta_norm"]) {
    c.theta_norm = rd.number(t, f + ".theta_norm");
    if (!(*c.theta_norm >= 0.0) || *c.theta_norm > c.bounds.S) {
      rd.fail(t, f + ".theta_norm", "must lie in [0, S]");
    }
  }
  if (const YAML::Node ds = node["decision_set"]) {
    const std::string g = f + ".decision_set";
    rd.require_map(ds, g);
    rd.check_keys(ds, g, {"kind", "num_arms", "arms"});
    if (!ds["kind"]) rd.fail(ds, g + ".kind", "required");
    c.decision_set.kind = rd.text(ds["kind"], g + ".kind");
    const std::string& kind = c.decision_set.kind;
    if (kind == "fresh_sphere") {
      if (ds["num_arms"]) {
        c.decision_set.num_arms = rd.integer(ds["num_arms"], g + ".num_arms");
        if (c.decision_set.num_arms < 1) {
          rd.fail(ds["num_arms"], g + ".num_arms", "must be >= 1");
        }
      }
    } else if (kind == "fixed") {
      const YAML::Node arms = ds["arms"];
      if (!arms || !arms.IsSequence() || arms.size() == 0) {
        rd.fail(arms ? arms : ds, g + ".arms", "expected a non-empty list of arms");
      }
      for (std::size_t i = 0; i < arms.size(); ++i) {
        const std::string h = g + ".arms[" + std::to_string(i) + "]";
        std::vector<double> arm = rd.numbers(arms[i], h);
        if (static_cast<int>(arm.size()) != c.dim) {
          rd.fail(arms[i], h, "length must equal dim");
        }
        double sq = 0.0;
        for (double v : arm) sq += v * v;
        if (std::sqrt(sq) > c.bounds.L + 1e-12) {
          rd.fail(arms[i], h, "norm exceeds bounds.L");
        }
        c.decision_set.arms.push_back(std::move(arm));
      }
    } else if (kind == "basis") {
      if (c.bounds.L < 1.0) rd.fail(ds, g, "basis arms need bounds.L >= 1");
    } else {
      rd.fail(ds["kind"], g + ".kind",
              "expected fresh_sphere | basis | fixed, got '" + kind + "'");
    }
  }
  if (const YAML::Node n = node["noise"]) c.noise = parse_noise(rd, n, f + ".noise");
  if (const YAML::Node m = node["misspec_epsilon"]) {
    c.misspec_epsilon = rd.number(m, f + ".misspec_epsilon");
    if (c.misspec_epsilon < 0.0) rd.fail(m, f + ".misspec_epsilon", "must be >= 0");
  }
  if (const YAML::Node s = node["seed"]) {
    c.seed = rd.scalar<std::uint64_t>(s, f + ".seed", "a non-negative integer");
  }
  return c;
}

AdversaryConfig parse_adversary(const Reader& rd, const YAML::Node& node) {
  const std::string f = "adversary";
  rd.require_map(node, f);
  rd.check_keys(node, f,
                {"kind", "budget", "shift", "target_arm", "flip_from", "flip_to",
                 "per_arm"});
  AdversaryConfig c;
  if (node["kind"]) c.kind = rd.text(node["kind"], f + ".kind");
  static const std::set<std::string> kinds = {
      "none", "target_flip", "optimal_suppression", "misspecification",
      "pre_action"};
  if (!kinds.count(c.kind)) {
    rd.fail(node["kind"], f + ".kind",
            "expected none | target_flip | optimal_suppression | "
            "misspecification | pre_action, got '" + c.kind + "'");
  }
  if (const YAML::Node b = node["budget"]) {
    c.budget = rd.number(b, f + ".budget");
    if (c.budget < 0.0) rd.fail(b, f + ".budget", "must be >= 0");
  }
  if (const YAML::Node s = node["shift"]) {
    c.shift = rd.number(s, f + ".shift");
    if (c.shift < 0.0) rd.fail(s, f + ".shift", "must be >= 0");
  }
  if (const YAML::Node t = node["target_arm"]) {
    c.target_arm = rd.integer(t, f + ".target_arm");
    if (c.target_arm < 0) rd.fail(t, f + ".target_arm", "must be >= 0");
  }
  if (node["flip_from"]) c.flip_from = rd.number(node["flip_from"], f + ".flip_from");
  if (node["flip_to"]) c.flip_to = rd.number(node["flip_to"], f + ".flip_to");
  if (const YAML::Node p = node["per_arm"]) c.per_arm = rd.numbers(p, f + ".per_arm");
  return c;
}

PolicySpec parse_policy(const Reader& rd, const YAML::Node& node,
                        const std::string& f) {
  rd.require_map(node, f);
  rd.check_keys(node, f, {"name", "kind", "lambda", "alpha", "beta", "delta"});
  PolicySpec p;
  if (!node["kind"]) rd.fail(node, f + ".kind", "required");
  try {
    p.kind = parse_policy_kind(rd.text(node["kind"], f + ".kind"));
  } catch (const ConfigurationError& e) {
    rd.fail(node["kind"], f + ".kind", e.what());
  }
  p.name = node["name"] ? rd.text(node["name"], f + ".name") : to_string(p.kind);
  if (p.kind == PolicyKind::kOful || p.kind == PolicyKind::kGreedy) {
    p.alpha.mode = AlphaSetting::Mode::kUncapped;
    p.beta = BetaSetting{BetaSetting::Mode::kKnownC, 0.0};
  }
  if (const YAML::Node l = node["lambda"]) {
    p.lambda = rd.auto_number(l, f + ".lambda");
    if (p.lambda && !(*p.lambda > 0.0)) rd.fail(l, f + ".lambda", "must be > 0");
  }
  if (const YAML::Node a = node["alpha"]) {
    if (a.IsScalar() && a.Scalar() == "auto") {
      p.alpha.mode = AlphaSetting::Mode::kAuto;
    } else if (a.IsScalar() && a.Scalar() == "uncapped") {
      p.alpha.mode = AlphaSetting::Mode::kUncapped;
    } else {
      p.alpha.mode = AlphaSetting::Mode::kValue;
      p.alpha.value = rd.number(a, f + ".alpha");
      if (!(p.alpha.value > 0.0)) rd.fail(a, f + ".alpha", "must be > 0");
    }
  }
  if (const YAML::Node b = node["beta"]) {
    const std::string g = f + ".beta";
    rd.require_map(b, g);
    rd.check_keys(b, g, {"mode", "C", "C_bar", "value"});
    if (!b["mode"]) rd.fail(b, g + ".mode", "required");
    const std::string mode = rd.text(b["mode"], g + ".mode");
    const char* key = nullptr;
    if (mode == "known_c") {
      p.beta.mode = BetaSetting::Mode::kKnownC;
      key = "C";
    } else if (mode == "unknown_c") {
      p.beta.mode = BetaSetting::Mode::kUnknownC;
      key = "C_bar";
    } else if (mode == "fixed") {
      p.beta.mode = BetaSetting::Mode::kFixed;
      key = "value";
    } else {
      rd.fail(b["mode"], g + ".mode",
              "expected known_c | unknown_c | fixed, got '" + mode + "'");
    }
    for (const char* other : {"C", "C_bar", "value"}) {
      if (std::string(other) != key && b[other]) {
        rd.fail(b[other], g + "." + other, "not valid for mode " + mode);
      }
    }
    p.beta.value.reset();
    if (b[key]) p.beta.value = rd.auto_number(b[key], g + "." + key);
    if (p.beta.mode == BetaSetting::Mode::kFixed && !p.beta.value) {
      rd.fail(b[key] ? b[key] : b, g + ".value", "fixed beta needs a number");
    }
    if (p.beta.value) {
      const bool positive = p.beta.mode == BetaSetting::Mode::kUnknownC;
      if (positive ? !(*p.beta.value > 0.0) : !(*p.beta.value >= 0.0)) {
        rd.fail(b[key], g + "." + key, positive ? "must be > 0" : "must be >= 0");
      }
    }
  }
  if (const YAML::Node d = node["delta"]) {
    p.delta = rd.number(d, f + ".delta");
    if (!(p.delta > 0.0 && p.delta < 1.0)) {
      rd.fail(d, f + ".delta",
              "must lie in (0, 1), got " + d.Scalar());
    }
  }
  return p;
}

GridSpec parse_grid(const Reader& rd, const YAML::Node& node) {
  const std::string f = "grid";
  rd.require_map(node, f);
  rd.check_keys(node, f, {"horizon", "budget", "dim"});
  GridSpec g;
  if (const YAML::Node n = node["horizon"]) {
    g.horizon = rd.integers(n, f + ".horizon");
    for (int k : g.horizon) {
      if (k < 1) rd.fail(n, f + ".horizon", "values must be >= 1");
    }
  }
  if (const YAML::Node n = node["budget"]) {
    g.budget = rd.numbers(n, f + ".budget");
    for (double c : g.budget) {
      if (c < 0.0) rd.fail(n, f + ".budget", "values must be >= 0");
    }
  }
  if (const YAML::Node n = node["dim"]) {
    g.dim = rd.integers(n, f + ".dim");
    for (int d : g.dim) {
      if (d < 1) rd.fail(n, f + ".dim", "values must be >= 1");
    }
  }
  return g;
}

std::vector<std::uint64_t> parse_seeds(const Reader& rd, const YAML::Node& node) {
  std::vector<std::uint64_t> seeds;
  if (node.IsSequence()) {
    for (std::size_t i = 0; i < node.size(); ++i) {
      seeds.push_back(rd.scalar<std::uint64_t>(
          node[i], "seeds[" + std::to_string(i) + "]", "a non-negative integer"));
    }
  } else if (node.IsMap()) {
    rd.check_keys(node, "seeds", {"first", "count"});
    if (!node["first"] || !node["count"]) {
      rd.fail(node, "seeds", "expected {first, count}");
    }
    const auto first = rd.scalar<std::uint64_t>(node["first"], "seeds.first",
                                                "a non-negative integer");
    const int count = rd.integer(node["count"], "seeds.count");
    if (count < 1) rd.fail(node["count"], "seeds.count", "must be >= 1");
    for (int i = 0; i < count; ++i) seeds.push_back(first + i);
  } else {
    rd.fail(node, "seeds", "expected a list or {first, count}");
  }
  if (seeds.empty()) rd.fail(node, "seeds", "must not be empty");
  return seeds;
}

}  // namespace

PolicyKind parse_policy_kind(const std::string& text) {
  if (text == "cw_oful") return PolicyKind::kCwOful;
  if (text == "oful") return PolicyKind::kOful;
  if (text == "enlarged_beta_oful") return PolicyKind::kEnlargedBetaOful;
  if (text == "greedy") return PolicyKind::kGreedy;
  throw ConfigurationError(
      "expected cw_oful | oful | enlarged_beta_oful | greedy, got '" + text + "'");
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  try {
    if (const auto colon = text.find(':'); colon != std::string::npos) {
      const std::uint64_t first = std::stoull(text.substr(0, colon));
      const long count = std::stol(text.substr(colon + 1));
      if (count < 1) throw ConfigurationError("seed count must be >= 1");
      for (long i = 0; i < count; ++i) seeds.push_back(first + i);
    } else {
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (!item.empty()) seeds.push_back(std::stoull(item));
      }
    }
  } catch (const std::logic_error&) {
    throw ConfigurationError("invalid seed list '" + text +
                             "' (expected a,b,c or first:count)");
  }
  if (seeds.empty()) throw ConfigurationError("seed list is empty");
  return seeds;
}

ExperimentConfig parse_config(const std::string& text, const std::string& source) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ConfigFileError(source, e.mark.line + 1, "<syntax>", e.msg);
  }
  const Reader rd(source);
  if (!root.IsMap()) rd.fail(root, "<root>", "expected a mapping");
  rd.check_keys(root, "",
                {"name", "horizon", "seeds", "snapshot_interval", "output_dir",
                 "instance", "adversary", "policies", "grid"});

  ExperimentConfig c;
  if (root["name"]) c.name = rd.text(root["name"], "name");
  if (!root["horizon"]) rd.fail(root, "horizon", "required");
  c.horizon = rd.integer(root["horizon"], "horizon");
  if (c.horizon < 1) rd.fail(root["horizon"], "horizon", "must be >= 1");
  if (!root["seeds"]) rd.fail(root, "seeds", "required");
  c.seeds = parse_seeds(rd, root["seeds"]);
  if (const YAML::Node s = root["snapshot_interval"]) {
    c.snapshot_interval = rd.integer(s, "snapshot_interval");
    if (c.snapshot_interval < 0) rd.fail(s, "snapshot_interval", "must be >= 0");
  }
  if (root["output_dir"]) c.output_dir = rd.text(root["output_dir"], "output_dir");

  if (!root["instance"]) rd.fail(root, "instance", "required");
  c.instance = parse_instance(rd, root["instance"]);
  if (root["adversary"]) c.adversary = parse_adversary(rd, root["adversary"]);

  const YAML::Node pol = root["policies"];
  if (!pol) rd.fail(root, "policies", "required");
  if (!pol.IsSequence() || pol.size() == 0) {
    rd.fail(pol, "policies", "expected a non-empty list");
  }
  std::set<std::string> names;
  for (std::size_t i = 0; i < pol.size(); ++i) {
    const std::string f = "policies[" + std::to_string(i) + "]";
    c.policies.push_back(parse_policy(rd, pol[i], f));
    if (!names.insert(c.policies.back().name).second) {
      rd.fail(pol[i], f + ".name", "duplicate policy name");
    }
  }
  if (root["grid"]) c.grid = parse_grid(rd, root["grid"]);

  if (!c.grid.dim.empty()) {
    if (c.instance.theta_star) {
      rd.fail(root["grid"]["dim"], "grid.dim",
              "cannot vary dim with an explicit instance.theta_star");
    }
    if (c.instance.decision_set.kind == "fixed") {
      rd.fail(root["grid"]["dim"], "grid.dim",
              "cannot vary dim with a fixed decision set");
    }
  }
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigFileError(path.string(), 0, "<file>", "cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.string());
}

void validate(const ExperimentConfig& c, const std::string& source) {
  auto fail = [&](const std::string& field, const std::string& msg) {
    throw ConfigFileError(source, 0, field, msg);
  };
  if (c.horizon < 1) fail("horizon", "must be >= 1");
  if (c.seeds.empty()) fail("seeds", "must not be empty");
  if (c.snapshot_interval < 0) fail("snapshot_interval", "must be >= 0");
  if (c.policies.empty()) fail("policies", "must not be empty");
  for (std::size_t i = 0; i < c.policies.size(); ++i) {
    const double delta = c.policies[i].delta;
    if (!(delta > 0.0 && delta < 1.0)) {
      fail("policies[" + std::to_string(i) + "].delta", "must lie in (0, 1)");
    }
  }
}

namespace {

void emit_auto(YAML::Emitter& out, const AutoValue& v) {
  if (v) {
    out << *v;
  } else {
    out << "auto";
  }
}

}  // namespace

std::string emit_config(const ExperimentConfig& c) {
  YAML::Emitter out;
  out.SetDoublePrecision(17);
  out << YAML::BeginMap;
  out << YAML::Key << "name" << YAML::Value << YAML::DoubleQuoted << c.name;
  out << YAML::Key << "horizon" << YAML::Value << c.horizon;
  out << YAML::Key << "seeds" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (auto s : c.seeds) out << s;
  out << YAML::EndSeq;
  out << YAML::Key << "snapshot_interval" << YAML::Value << c.snapshot_interval;
  if (!c.output_dir.empty()) {
    out << YAML::Key << "output_dir" << YAML::Value << YAML::DoubleQuoted
        << c.output_dir;
  }

  const InstanceConfig& in = c.instance;
  out << YAML::Key << "instance" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "dim" << YAML::Value << in.dim;
  out << YAML::Key << "bounds" << YAML::Value << YAML::Flow << YAML::BeginMap
      << YAML::Key << "L" << YAML::Value << in.bounds.L << YAML::Key << "S"
      << YAML::Value << in.bounds.S << YAML::Key << "R" << YAML::Value
      << in.bounds.R << YAML::EndMap;
  if (in.theta_star) {
    out << YAML::Key << "theta_star" << YAML::Value << YAML::Flow << *in.theta_star;
  }
  if (in.theta_norm) out << YAML::Key << "theta_norm" << YAML::Value << *in.theta_norm;
  out << YAML::Key << "decision_set" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "kind" << YAML::Value << in.decision_set.kind;
  if (in.decision_set.kind == "fresh_sphere") {
    out << YAML::Key << "num_arms" << YAML::Value << in.decision_set.num_arms;
  } else if (in.decision_set.kind == "fixed") {
    out << YAML::Key << "arms" << YAML::Value << YAML::BeginSeq;
    for (const auto& arm : in.decision_set.arms) out << YAML::Flow << arm;
    out << YAML::EndSeq;
  }
  out << YAML::EndMap;
  out << YAML::Key << "noise" << YAML::Value << to_string(in.noise);
  out << YAML::Key << "misspec_epsilon" << YAML::Value << in.misspec_epsilon;
  out << YAML::Key << "seed" << YAML::Value << in.seed;
  out << YAML::EndMap;

  const AdversaryConfig& a = c.adversary;
  out << YAML::Key << "adversary" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "kind" << YAML::Value << a.kind;
  out << YAML::Key << "budget" << YAML::Value << a.budget;
  out << YAML::Key << "shift" << YAML::Value << a.shift;
  out << YAML::Key << "target_arm" << YAML::Value << a.target_arm;
  out << YAML::Key << "flip_from" << YAML::Value << a.flip_from;
  out << YAML::Key << "flip_to" << YAML::Value << a.flip_to;
  out << YAML::Key << "per_arm" << YAML::Value << YAML::Flow << a.per_arm;
  out << YAML::EndMap;

  out << YAML::Key << "policies" << YAML::Value << YAML::BeginSeq;
  for (const PolicySpec& p : c.policies) {
    out << YAML::BeginMap;
    out << YAML::Key << "name" << YAML::Value << YAML::DoubleQuoted << p.name;
    out << YAML::Key << "kind" << YAML::Value << to_string(p.kind);
    out << YAML::Key << "lambda" << YAML::Value;
    emit_auto(out, p.lambda);
    out << YAML::Key << "alpha" << YAML::Value;
    switch (p.alpha.mode) {
      case AlphaSetting::Mode::kAuto:
        out << "auto";
        break;
      case AlphaSetting::Mode::kUncapped:
        out << "uncapped";
        break;
      case AlphaSetting::Mode::kValue:
        out << p.alpha.value;
        break;
    }
    out << YAML::Key << "beta" << YAML::Value << YAML::Flow << YAML::BeginMap;
    switch (p.beta.mode) {
      case BetaSetting::Mode::kKnownC:
        out << YAML::Key << "mode" << YAML::Value << "known_c" << YAML::Key << "C"
            << YAML::Value;
        break;
      case BetaSetting::Mode::kUnknownC:
        out << YAML::Key << "mode" << YAML::Value << "unknown_c" << YAML::Key
            << "C_bar" << YAML::Value;
        break;
      case BetaSetting::Mode::kFixed:
        out << YAML::Key << "mode" << YAML::Value << "fixed" << YAML::Key
            << "value" << YAML::Value;
        break;
    }
    emit_auto(out, p.beta.value);
    out << YAML::EndMap;
    out << YAML::Key << "delta" << YAML::Value << p.delta;
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;

  if (!c.grid.empty()) {
    out << YAML::Key << "grid" << YAML::Value << YAML::BeginMap;
    if (!c.grid.horizon.empty()) {
      out << YAML::Key << "horizon" << YAML::Value << YAML::Flow << c.grid.horizon;
    }
    if (!c.grid.budget.empty()) {
      out << YAML::Key << "budget" << YAML::Value << YAML::Flow << c.grid.budget;
    }
    if (!c.grid.dim.empty()) {
      out << YAML::Key << "dim" << YAML::Value << YAML::Flow << c.grid.dim;
    }
    out << YAML::EndMap;
  }
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

}  // namespace cwoful
