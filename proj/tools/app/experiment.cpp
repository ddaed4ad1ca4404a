#include "app/experiment.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "mmo/error.hpp"

namespace mmo::app {
namespace {

class Parser {
 public:
  explicit Parser(std::string name) : name_(std::move(name)) {}

  [[noreturn]] void fail(const YAML::Node& at, const std::string& message) const {
    throw SpecError(name_, at.Mark().line + 1, message);
  }

  void check_map(const YAML::Node& node, const std::string& what) const {
    if (!node.IsMap()) fail(node, what + " must be a mapping");
  }

  void check_keys(const YAML::Node& node, std::initializer_list<const char*> allowed, const std::string& what) const {
    check_map(node, what);
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& kv : node) {
      const auto key = kv.first.as<std::string>();
      if (!ok.count(key)) {
        std::string list;
        for (const auto& k : allowed) list += std::string(list.empty() ? "" : ", ") + k;
        fail(kv.first, "unknown key '" + key + "' in " + what + " (allowed: " + list + ")");
      }
    }
  }

  template <class T>
  T scalar(const YAML::Node& node, const std::string& what) const {
    if (!node.IsScalar()) fail(node, what + " must be a scalar");
    try {
      return node.as<T>();
    } catch (const YAML::BadConversion&) {
      fail(node, what + " has the wrong type: '" + node.Scalar() + "'");
    }
  }

  double number(const YAML::Node& node, const std::string& what) const {
    const double v = scalar<double>(node, what);
    if (!std::isfinite(v)) fail(node, what + " must be finite");
    return v;
  }

  bool is_auto(const YAML::Node& node) const { return node.IsScalar() && node.Scalar() == "auto"; }

  Point point(const YAML::Node& node, std::size_t dim, const std::string& what) const {
    if (!node.IsSequence()) fail(node, what + " must be a list of numbers");
    std::vector<double> c;
    for (const auto& x : node) c.push_back(number(x, what));
    if (c.size() != dim) fail(node, what + " must have " + std::to_string(dim) + " coordinates");
    return Point(std::move(c));
  }

  GameConfig game(const YAML::Node& node) const {
    check_keys(node, {"dim", "grad_bound", "horizon", "seed"}, "game");
    GameConfig g;
    if (node["dim"]) {
      const int d = scalar<int>(node["dim"], "game.dim");
      if (d < 1) fail(node["dim"], "game.dim must be >= 1");
      g.dim = static_cast<std::size_t>(d);
    }
    if (node["grad_bound"]) {
      g.grad_bound = number(node["grad_bound"], "game.grad_bound");
      if (!(g.grad_bound > 0.0)) fail(node["grad_bound"], "game.grad_bound must be > 0");
    }
    if (const auto h = node["horizon"]; h && !(h.IsScalar() && h.Scalar() == "unknown")) {
      g.horizon = scalar<int>(h, "game.horizon");
      if (*g.horizon < 1) fail(h, "game.horizon must be >= 1 or \"unknown\"");
    }
    if (node["seed"]) g.seed = scalar<std::uint64_t>(node["seed"], "game.seed");
    return g;
  }

  int require_horizon(const YAML::Node& at, const GameConfig& g, const std::string& type) const {
    if (!g.horizon) fail(at, type + " needs a numeric game.horizon");
    return *g.horizon;
  }

  StrategyParams strategy(const YAML::Node& node, const GameConfig& g) const {
    check_map(node, "strategy");
    if (!node["type"]) fail(node, "strategy needs a 'type'");
    const auto type = scalar<std::string>(node["type"], "strategy.type");
    const double G = g.grad_bound;
    StrategyParams out;
    if (type == "ogd") {
      check_keys(node, {"type", "eta"}, "ogd strategy");
      OgdParams p{0.1, G, g.horizon};
      if (node["eta"] && is_auto(node["eta"])) {
        p.eta = 1.0 / (G * std::sqrt(static_cast<double>(require_horizon(node["eta"], g, "eta: auto"))));
      } else if (node["eta"]) {
        p.eta = number(node["eta"], "ogd.eta");
      }
      out = p;
    } else if (type == "power") {
      check_keys(node, {"type", "W", "p"}, "power strategy");
      PowerParams p{1.0, 2.0, G, require_horizon(node, g, "power")};
      if (node["p"]) p.p = number(node["p"], "power.p");
      if (node["W"] && is_auto(node["W"])) {
        p.W = std::pow(G * std::sqrt(static_cast<double>(p.T)), 1.0 - p.p);
      } else if (node["W"]) {
        p.W = number(node["W"], "power.W");
      }
      out = p;
    } else if (type == "normal_knownT") {
      check_keys(node, {"type", "eps", "a"}, "normal_knownT strategy");
      NormalKnownTParams p{1.0, 2.0, G, require_horizon(node, g, "normal_knownT")};
      if (node["eps"]) p.eps = number(node["eps"], "normal_knownT.eps");
      if (node["a"]) p.a = number(node["a"], "normal_knownT.a");
      out = p;
    } else if (type == "adaptive_normal") {
      check_keys(node, {"type", "eps", "a"}, "adaptive_normal strategy");
      AdaptiveNormalParams p{1.0, 3.0, G};
      if (node["eps"]) p.eps = number(node["eps"], "adaptive_normal.eps");
      if (node["a"]) p.a = number(node["a"], "adaptive_normal.a");
      out = p;
    } else {
      fail(node["type"], "unknown strategy type '" + type + "' (ogd, power, normal_knownT, adaptive_normal)");
    }
    try {
      validate(out);
    } catch (const InvalidArgument& e) {
      fail(node, e.what());
    }
    return out;
  }

  AdversaryParams adversary(const YAML::Node& node, const GameConfig& g) const {
    check_keys(node, {"type", "G", "direction", "comparator", "sign_policy"}, "adversary");
    if (!node["type"]) fail(node, "adversary needs a 'type'");
    const auto type = scalar<std::string>(node["type"], "adversary.type");
    const auto kind = parse_adversary_tag(type);
    if (!kind) fail(node["type"], "unknown adversary type '" + type + "'");
    AdversaryParams a;
    a.kind = *kind;
    a.G = g.grad_bound;
    if (node["G"]) {
      a.G = number(node["G"], "adversary.G");
      if (a.G > g.grad_bound) fail(node["G"], "adversary.G exceeds game.grad_bound");
    }
    if (node["direction"]) a.direction = point(node["direction"], g.dim, "adversary.direction");
    if (node["comparator"]) a.comparator = point(node["comparator"], g.dim, "adversary.comparator");
    if (node["sign_policy"]) {
      const auto name = scalar<std::string>(node["sign_policy"], "adversary.sign_policy");
      const auto policy = parse_sign_policy(name);
      if (!policy) fail(node["sign_policy"], "unknown sign_policy '" + name + "' (grow, shrink, alternating, random)");
      a.sign_policy = *policy;
    }
    try {
      a.validate(g.dim);
    } catch (const InvalidArgument& e) {
      fail(node, e.what());
    }
    return a;
  }

  std::vector<ComparatorSpec> comparators(const YAML::Node& node) const {
    std::vector<ComparatorSpec> out;
    if (node.IsSequence()) {
      for (const auto& item : node) {
        check_keys(item, {"norm", "direction_seed"}, "comparator");
        if (!item["norm"]) fail(item, "comparator needs a 'norm'");
        ComparatorSpec c{number(item["norm"], "comparator.norm"), 0};
        if (c.norm < 0.0) fail(item["norm"], "comparator.norm must be >= 0");
        if (item["direction_seed"]) c.direction_seed = scalar<std::uint64_t>(item["direction_seed"], "direction_seed");
        out.push_back(c);
      }
      return out;
    }
    check_keys(node, {"norms", "directions", "seed"}, "comparators");
    std::vector<double> norms{0.0, 0.1, 1.0, 10.0, 100.0};
    if (node["norms"]) {
      if (!node["norms"].IsSequence()) fail(node["norms"], "comparators.norms must be a list");
      norms.clear();
      for (const auto& x : node["norms"]) {
        norms.push_back(number(x, "comparators.norms"));
        if (norms.back() < 0.0) fail(x, "comparator norms must be >= 0");
      }
    }
    int directions = 5;
    if (node["directions"]) directions = scalar<int>(node["directions"], "comparators.directions");
    if (directions < 1) fail(node["directions"], "comparators.directions must be >= 1");
    std::uint64_t seed = 0;
    if (node["seed"]) seed = scalar<std::uint64_t>(node["seed"], "comparators.seed");
    for (double n : norms) {
      if (n == 0.0) {
        out.push_back({0.0, seed});
        continue;
      }
      for (int k = 0; k < directions; ++k) out.push_back({n, seed + static_cast<std::uint64_t>(k)});
    }
    return out;
  }

  template <class F>
  auto one_or_many(const YAML::Node& root, const char* single, const char* plural, F&& parse) const {
    std::vector<decltype(parse(root))> out;
    if (root[single] && root[plural]) fail(root[plural], std::string("give either '") + single + "' or '" + plural + "'");
    if (root[single]) {
      out.push_back(parse(root[single]));
    } else if (root[plural]) {
      if (!root[plural].IsSequence()) fail(root[plural], std::string(plural) + " must be a list");
      for (const auto& item : root[plural]) out.push_back(parse(item));
    } else {
      fail(root, std::string("missing '") + single + "' or '" + plural + "'");
    }
    if (out.empty()) fail(root[plural], std::string(plural) + " must not be empty");
    return out;
  }

  ExperimentSpec experiment(const YAML::Node& root) const {
    check_keys(root,
               {"game", "strategy", "strategies", "adversary", "adversaries", "comparators", "rounds", "repeats",
                "bound", "outputs"},
               "experiment");
    ExperimentSpec spec;
    if (root["game"]) spec.game = game(root["game"]);
    const auto& g = spec.game;

    if (root["rounds"]) {
      spec.rounds = scalar<int>(root["rounds"], "rounds");
      if (spec.rounds < 1) fail(root["rounds"], "rounds must be >= 1");
      if (g.horizon && *g.horizon != spec.rounds) fail(root["rounds"], "rounds differs from game.horizon");
    } else if (g.horizon) {
      spec.rounds = *g.horizon;
    } else {
      fail(root, "'rounds' is required when game.horizon is unknown");
    }

    spec.strategies = one_or_many(root, "strategy", "strategies", [&](const YAML::Node& n) { return strategy(n, g); });
    spec.adversaries =
        one_or_many(root, "adversary", "adversaries", [&](const YAML::Node& n) { return adversary(n, g); });
    spec.comparators = root["comparators"] ? comparators(root["comparators"]) : comparators(YAML::Node(YAML::NodeType::Map));
    if (root["repeats"]) {
      spec.repeats = scalar<int>(root["repeats"], "repeats");
      if (spec.repeats < 1) fail(root["repeats"], "repeats must be >= 1");
    }
    if (root["bound"]) {
      const auto kind = scalar<std::string>(root["bound"], "bound");
      if (kind == "published") {
        spec.bound = BoundKind::published;
      } else if (kind == "ledger") {
        spec.bound = BoundKind::ledger;
      } else {
        fail(root["bound"], "bound must be 'published' or 'ledger'");
      }
    }
    if (const auto out = root["outputs"]) {
      check_keys(out, {"dir", "format"}, "outputs");
      if (out["dir"]) spec.outputs.dir = scalar<std::string>(out["dir"], "outputs.dir");
      if (out["format"]) {
        const auto fmt = scalar<std::string>(out["format"], "outputs.format");
        if (fmt != "csv" && fmt != "json") fail(out["format"], "outputs.format must be csv or json");
        spec.outputs.json = fmt == "json";
      }
    }
    return spec;
  }

 private:
  std::string name_;
};

ExperimentSpec parse_root(const std::string& text, const std::string& name) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw SpecError(name, e.mark.line + 1, e.msg);
  }
  if (!root.IsMap()) throw SpecError(name, 1, "experiment file must be a YAML mapping");
  return Parser(name).experiment(root);
}

}  // namespace

SpecError::SpecError(const std::string& file, int line, const std::string& message)
    : std::runtime_error(file + ":" + std::to_string(line) + ": " + message), line_(line) {}

ExperimentSpec parse_experiment_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError(path, 0, "cannot open experiment file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_root(buf.str(), path);
}

ExperimentSpec parse_experiment_text(const std::string& text, const std::string& name) {
  return parse_root(text, name);
}

Point comparator_point(const ComparatorSpec& spec, std::size_t dim) {
  if (spec.norm == 0.0) return Point::zeros(dim);
  Rng rng(spec.direction_seed, 0x636f6d70ULL);
  return spec.norm * random_unit_vector(dim, rng);
}

}  // namespace mmo::app
