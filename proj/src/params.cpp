#include "mmo/params.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "mmo/error.hpp"

namespace mmo {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw InvalidArgument(std::string(name) + " must be a positive finite number");
  }
}

void require_horizon(int T) {
  if (T < 1) throw InvalidArgument("horizon T must be >= 1");
}

}  // namespace

std::string_view strategy_tag(const StrategyParams& params) {
  return std::visit(Overloaded{[](const OgdParams&) { return std::string_view("ogd"); },
                               [](const PowerParams&) { return std::string_view("power"); },
                               [](const NormalKnownTParams&) { return std::string_view("normal_knownT"); },
                               [](const AdaptiveNormalParams&) { return std::string_view("adaptive_normal"); }},
                    params);
}

double strategy_grad_bound(const StrategyParams& params) {
  return std::visit([](const auto& p) { return p.G; }, params);
}

std::optional<int> strategy_horizon(const StrategyParams& params) {
  return std::visit(Overloaded{[](const OgdParams& p) { return p.T; },
                               [](const PowerParams& p) { return std::optional<int>(p.T); },
                               [](const NormalKnownTParams& p) { return std::optional<int>(p.T); },
                               [](const AdaptiveNormalParams&) { return std::optional<int>(); }},
                    params);
}

void validate(const OgdParams& params) {
  require_positive(params.eta, "ogd eta");
  require_positive(params.G, "G");
  if (params.T) require_horizon(*params.T);
}

void validate(const PowerParams& params) {
  require_positive(params.W, "power W");
  require_positive(params.G, "G");
  if (!(params.p >= 1.0 && params.p <= 2.0)) throw InvalidArgument("power p must lie in [1, 2]");
  require_horizon(params.T);
}

void validate(const NormalKnownTParams& params) {
  require_positive(params.eps, "normal_knownT eps");
  require_positive(params.a, "normal_knownT a");
  require_positive(params.G, "G");
  require_horizon(params.T);
  const double threshold = std::numbers::pi * params.G * params.G / 2.0;
  if (!(params.a > threshold)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "normal_knownT requires a > pi*G^2/2 = " << threshold << " (got a = " << params.a << ")";
    throw InvalidArgument(msg.str());
  }
}

void validate(const AdaptiveNormalParams& params) {
  require_positive(params.eps, "adaptive_normal eps");
  require_positive(params.a, "adaptive_normal a");
  require_positive(params.G, "G");
  const double threshold = 3.0 * std::numbers::pi * params.G * params.G / 4.0;
  if (!(params.a > threshold)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "adaptive_normal requires a > 3*pi*G^2/4 = " << threshold << " (got a = " << params.a << ")";
    throw InvalidArgument(msg.str());
  }
}

void validate(const StrategyParams& params) {
  std::visit([](const auto& p) { validate(p); }, params);
}

}  // namespace mmo
