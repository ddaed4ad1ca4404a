#include "mmo/trace_io.hpp"

#include <fstream>
#include <ostream>

#include <json.hpp>

#include "mmo/error.hpp"

namespace mmo {
namespace {

using nlohmann::json;

json point_json(const Point& p) { return json(p.values()); }

Point point_from(const json& j) { return Point(j.get<std::vector<double>>()); }

}  // namespace

void write_trace_csv(const Trace& trace, std::ostream& out) {
  const std::size_t d = trace.config.dim;
  const bool coords = d <= 8;
  out << "t,loss,reward_cum,theta_norm,eps_t";
  if (coords) {
    for (std::size_t i = 0; i < d; ++i) out << ",w_" << i;
    for (std::size_t i = 0; i < d; ++i) out << ",g_" << i;
  }
  out << '\n';
  const auto old_precision = out.precision(17);
  double reward_cum = 0.0;
  for (const auto& r : trace.rounds) {
    reward_cum -= r.loss;
    out << r.t << ',' << r.loss << ',' << reward_cum << ',' << norm(r.theta) << ',';
    if (r.eps) out << *r.eps;
    if (coords) {
      for (double x : r.w.coords()) out << ',' << x;
      for (double x : r.g.coords()) out << ',' << x;
    }
    out << '\n';
  }
  out.precision(old_precision);
}

void write_trace_json(const Trace& trace, std::ostream& out) {
  json rounds = json::array();
  for (const auto& r : trace.rounds) {
    rounds.push_back({{"t", r.t},
                      {"w", point_json(r.w)},
                      {"g", point_json(r.g)},
                      {"theta", point_json(r.theta)},
                      {"loss", r.loss},
                      {"eps", r.eps ? json(*r.eps) : json(nullptr)}});
  }
  const auto& c = trace.config;
  json doc = {{"config",
               {{"dim", c.dim},
                {"grad_bound", c.grad_bound},
                {"horizon", c.horizon ? json(*c.horizon) : json(nullptr)},
                {"seed", c.seed}}},
              {"strategy", trace.strategy_tag},
              {"adversary", trace.adversary_tag},
              {"rounds", std::move(rounds)}};
  out << doc.dump() << '\n';
}

Trace read_trace_json(std::istream& in) {
  try {
    const json doc = json::parse(in);
    Trace trace;
    const auto& c = doc.at("config");
    trace.config.dim = c.at("dim").get<std::size_t>();
    trace.config.grad_bound = c.at("grad_bound").get<double>();
    if (!c.at("horizon").is_null()) trace.config.horizon = c.at("horizon").get<int>();
    trace.config.seed = c.at("seed").get<std::uint64_t>();
    trace.strategy_tag = doc.at("strategy").get<std::string>();
    trace.adversary_tag = doc.at("adversary").get<std::string>();
    for (const auto& r : doc.at("rounds")) {
      std::optional<double> eps;
      if (!r.at("eps").is_null()) eps = r.at("eps").get<double>();
      trace.rounds.push_back({r.at("t").get<int>(), point_from(r.at("w")), point_from(r.at("g")),
                              point_from(r.at("theta")), r.at("loss").get<double>(), eps});
    }
    return trace;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed trace JSON: ") + e.what());
  }
}

void save_trace(const Trace& trace, const std::string& path, bool as_json) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot open " + path + " for writing");
  if (as_json) {
    write_trace_json(trace, out);
  } else {
    write_trace_csv(trace, out);
  }
}

Trace load_trace_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  return read_trace_json(in);
}

}  // namespace mmo
