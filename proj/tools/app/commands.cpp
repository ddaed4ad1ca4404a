#include "app/commands.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "app/experiment.hpp"
#include "mmo/error.hpp"
#include "mmo/trace_io.hpp"

namespace mmo::app {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

json strategy_json(const StrategyParams& params) {
  json j = {{"type", std::string(strategy_tag(params))}};
  if (const auto* p = std::get_if<OgdParams>(&params)) {
    j["eta"] = p->eta;
    j["G"] = p->G;
    j["T"] = p->T ? json(*p->T) : json(nullptr);
  } else if (const auto* p = std::get_if<PowerParams>(&params)) {
    j.update({{"W", p->W}, {"p", p->p}, {"G", p->G}, {"T", p->T}});
  } else if (const auto* p = std::get_if<NormalKnownTParams>(&params)) {
    j.update({{"eps", p->eps}, {"a", p->a}, {"G", p->G}, {"T", p->T}});
  } else {
    const auto& a = std::get<AdaptiveNormalParams>(params);
    j.update({{"eps", a.eps}, {"a", a.a}, {"G", a.G}});
  }
  return j;
}

StrategyParams strategy_from_json(const json& j) {
  const auto type = j.at("type").get<std::string>();
  if (type == "ogd") {
    OgdParams p{j.at("eta").get<double>(), j.at("G").get<double>(), std::nullopt};
    if (!j.at("T").is_null()) p.T = j.at("T").get<int>();
    return p;
  }
  if (type == "power") {
    return PowerParams{j.at("W").get<double>(), j.at("p").get<double>(), j.at("G").get<double>(), j.at("T").get<int>()};
  }
  if (type == "normal_knownT") {
    return NormalKnownTParams{j.at("eps").get<double>(), j.at("a").get<double>(), j.at("G").get<double>(),
                              j.at("T").get<int>()};
  }
  if (type == "adaptive_normal") {
    return AdaptiveNormalParams{j.at("eps").get<double>(), j.at("a").get<double>(), j.at("G").get<double>()};
  }
  throw InvalidArgument("unknown strategy type in manifest: " + type);
}

std::string fmt(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

struct CellResult {
  std::string run_id;
  std::uint64_t seed = 0;
  std::vector<BoundReport> reports;
  std::string error;
};

// Reads the CSV trace layout written by write_trace_csv (needs the w_i and
// g_i columns, i.e. d <= 8).
Trace read_trace_csv(const std::string& path, std::size_t dim) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::string line;
  std::getline(in, line);
  const std::size_t expected = 5 + 2 * dim;
  Trace trace;
  trace.config.dim = dim;
  Point theta = Point::zeros(dim);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (line.back() == ',') fields.emplace_back();
    if (fields.size() != expected) throw InvalidArgument(path + ": CSV trace lacks per-coordinate columns");
    std::vector<double> w(dim), g(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      w[i] = std::stod(fields[5 + i]);
      g[i] = std::stod(fields[5 + dim + i]);
    }
    Point gp(std::move(g));
    theta -= gp;
    std::optional<double> eps;
    if (!fields[4].empty()) eps = std::stod(fields[4]);
    trace.rounds.push_back({std::stoi(fields[0]), Point(std::move(w)), gp, theta, std::stod(fields[1]), eps});
  }
  return trace;
}

}  // namespace

int default_jobs() {
  if (const char* env = std::getenv("MINIMAX_ONLINE_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run_command(const RunOptions& options, std::ostream& out, std::ostream& err) {
  ExperimentSpec spec;
  try {
    spec = parse_experiment_file(options.spec_path);
  } catch (const SpecError& e) {
    err << e.what() << '\n';
    return 2;
  }
  if (options.out_dir) spec.outputs.dir = *options.out_dir;
  if (options.seed) spec.game.seed = *options.seed;
  if (options.format) {
    if (*options.format != "csv" && *options.format != "json") {
      err << "--format must be csv or json\n";
      return 2;
    }
    spec.outputs.json = *options.format == "json";
  }

  const fs::path root(spec.outputs.dir);
  std::error_code ec;
  fs::create_directories(root / "traces", ec);
  if (ec) {
    err << "cannot create " << (root / "traces").string() << ": " << ec.message() << '\n';
    return 2;
  }

  std::vector<Point> comparators;
  for (const auto& c : spec.comparators) comparators.push_back(comparator_point(c, spec.game.dim));

  struct Cell {
    std::size_t s, a;
    int k;
  };
  std::vector<Cell> cells;
  for (std::size_t s = 0; s < spec.strategies.size(); ++s) {
    for (std::size_t a = 0; a < spec.adversaries.size(); ++a) {
      for (int k = 0; k < spec.repeats; ++k) cells.push_back({s, a, k});
    }
  }
  const char* ext = spec.outputs.json ? ".json" : ".csv";

  std::vector<CellResult> results(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      const auto& cell = cells[i];
      auto& res = results[i];
      const auto& strat = spec.strategies[cell.s];
      const auto& adv = spec.adversaries[cell.a];
      res.seed = spec.game.seed + static_cast<std::uint64_t>(cell.k);
      res.run_id = "s" + std::to_string(cell.s) + "-" + std::string(strategy_tag(strat)) + "__a" +
                   std::to_string(cell.a) + "-" + std::string(adversary_tag(adv.kind)) + "__r" +
                   std::to_string(cell.k);
      try {
        GameConfig cfg = spec.game;
        cfg.seed = res.seed;
        const Trace trace = run_game(strat, adv, cfg, spec.rounds);
        save_trace(trace, (root / "traces" / (res.run_id + ext)).string(), spec.outputs.json);
        res.reports = verify_bound(trace, strat, comparators, spec.bound);
      } catch (const std::exception& e) {
        res.error = e.what();
      }
    }
  };
  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(cells.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t checks = 0;
  json violations = json::array();
  json failures = json::array();
  std::ofstream summary(root / "summary.csv");
  summary << "run_id,strategy,adversary,seed,u_index,u_norm,regret,bound,slack,holds\n";
  json runs = json::array();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& res = results[i];
    const auto& strat = spec.strategies[cells[i].s];
    const auto adv_tag = std::string(adversary_tag(spec.adversaries[cells[i].a].kind));
    if (!res.error.empty()) {
      failures.push_back({{"run_id", res.run_id}, {"error", res.error}});
      continue;
    }
    runs.push_back({{"run_id", res.run_id},
                    {"strategy", strategy_json(strat)},
                    {"adversary", adv_tag},
                    {"seed", res.seed},
                    {"trace", "traces/" + res.run_id + ext}});
    for (std::size_t u = 0; u < res.reports.size(); ++u) {
      const auto& r = res.reports[u];
      ++checks;
      summary << res.run_id << ',' << strategy_tag(strat) << ',' << adv_tag << ',' << res.seed << ',' << u << ','
              << fmt(norm(r.u)) << ',' << fmt(r.regret_actual) << ',' << (r.vacuous ? "" : fmt(r.regret_bound))
              << ',' << (r.vacuous ? "" : fmt(r.slack)) << ',' << (r.holds ? "true" : "false") << '\n';
      if (!r.holds) {
        violations.push_back({{"run_id", res.run_id},
                              {"u_index", u},
                              {"u_norm", norm(r.u)},
                              {"regret", r.regret_actual},
                              {"bound", r.regret_bound}});
      }
    }
  }
  summary.close();

  const bool pass = violations.empty() && failures.empty();
  json comps = json::array();
  for (const auto& c : comparators) comps.push_back(c.values());
  const json manifest = {{"format", spec.outputs.json ? "json" : "csv"},
                         {"rounds", spec.rounds},
                         {"dim", spec.game.dim},
                         {"grad_bound", spec.game.grad_bound},
                         {"comparators", comps},
                         {"runs", runs}};
  std::ofstream(root / "runs.json") << manifest.dump(2) << '\n';
  const json verdict = {{"pass", pass},
                        {"runs", cells.size()},
                        {"checks", checks},
                        {"violations", violations},
                        {"failed_runs", failures}};
  std::ofstream(root / "verdict.json") << verdict.dump(2) << '\n';

  out << cells.size() << " runs, " << checks << " bound checks, " << violations.size() << " violations, "
      << failures.size() << " failed runs -> " << (pass ? "PASS" : "FAIL") << '\n';
  for (const auto& f : failures) err << "run " << f["run_id"].get<std::string>() << " failed: " << f["error"].get<std::string>() << '\n';
  for (const auto& v : violations) {
    err << "bound violated: " << v["run_id"].get<std::string>() << " u_index=" << v["u_index"].get<std::size_t>()
        << " regret=" << fmt(v["regret"].get<double>()) << " bound=" << fmt(v["bound"].get<double>()) << '\n';
  }
  return pass ? 0 : 1;
}

int curves_command(const CurvesOptions& options, std::ostream& out, std::ostream& err) {
  const fs::path root(options.trace_dir);
  const fs::path manifest_path = root / "runs.json";
  std::ifstream manifest_in(manifest_path);
  if (!manifest_in) {
    err << "missing manifest " << manifest_path.string() << '\n';
    return 2;
  }
  json manifest;
  try {
    manifest = json::parse(manifest_in);
  } catch (const json::exception& e) {
    err << manifest_path.string() << ": " << e.what() << '\n';
    return 2;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (options.out) {
    file.open(*options.out);
    if (!file) {
      err << "cannot open " << *options.out << " for writing\n";
      return 2;
    }
    sink = &file;
  }
  auto& csv = *sink;
  csv.precision(17);
  csv << "t,run_id,regret_u,bound_u,u_norm,u_index\n";

  try {
    const std::size_t dim = manifest.at("dim").get<std::size_t>();
    const bool json_traces = manifest.at("format").get<std::string>() == "json";
    std::vector<Point> comparators;
    for (const auto& c : manifest.at("comparators")) comparators.emplace_back(c.get<std::vector<double>>());
    for (const auto& run : manifest.at("runs")) {
      const auto run_id = run.at("run_id").get<std::string>();
      const fs::path trace_path = root / run.at("trace").get<std::string>();
      if (!fs::exists(trace_path)) {
        err << "missing trace " << trace_path.string() << '\n';
        return 2;
      }
      const Trace trace = json_traces ? load_trace_json(trace_path.string()) : read_trace_csv(trace_path.string(), dim);
      const StrategyParams params = strategy_from_json(run.at("strategy"));
      const auto horizon = strategy_horizon(params);
      const int T = trace.length();
      for (std::size_t u = 0; u < comparators.size(); ++u) {
        const Point& comp = comparators[u];
        const double u_norm = norm(comp);
        std::optional<double> fixed;
        if (horizon) fixed = regret_bound(params, u_norm, T);
        double cum = 0.0;
        for (const auto& r : trace.rounds) {
          cum += inner(r.g, r.w) - inner(r.g, comp);
          const auto bound = horizon ? fixed : regret_bound(params, u_norm, r.t);
          csv << r.t << ',' << run_id << ',' << cum << ',';
          if (bound) csv << *bound;
          csv << ',' << u_norm << ',' << u << '\n';
        }
      }
    }
  } catch (const std::exception& e) {
    err << "curves: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace mmo::app
