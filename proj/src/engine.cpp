#include "mmo/engine.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "mmo/error.hpp"
#include "mmo/strategies.hpp"

namespace mmo {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_dim(const Trace& trace, const Point& u) {
  if (u.dim() != trace.config.dim) {
    throw InvalidArgument("comparator dimension " + std::to_string(u.dim()) + " does not match game dimension " +
                          std::to_string(trace.config.dim));
  }
}

}  // namespace

Point Trace::final_theta() const {
  return rounds.empty() ? Point::zeros(config.dim) : rounds.back().theta;
}

Point Trace::grad_sum() const {
  Point sum = Point::zeros(config.dim);
  for (const auto& r : rounds) sum += r.g;
  return sum;
}

Trace run_game(const StrategyParams& strategy, const AdversaryParams& adversary, const GameConfig& config,
               int rounds) {
  config.validate();
  validate(strategy);
  adversary.validate(config.dim);
  if (rounds < 0) throw InvalidArgument("rounds must be nonnegative");
  if (const auto T = strategy_horizon(strategy); T && *T != rounds) {
    throw InvalidArgument(std::string(strategy_tag(strategy)) + " was tuned for T = " + std::to_string(*T) +
                          " but the game runs " + std::to_string(rounds) + " rounds");
  }
  if (config.horizon && *config.horizon != rounds) {
    throw InvalidArgument("game horizon " + std::to_string(*config.horizon) + " differs from rounds " +
                          std::to_string(rounds));
  }
  if (adversary.G > config.grad_bound * (1.0 + 1e-12)) {
    throw InvalidArgument("adversary G exceeds the game's gradient bound");
  }

  Trace trace{config, std::string(strategy_tag(strategy)), std::string(adversary_tag(adversary.kind)), {}};
  trace.rounds.reserve(static_cast<std::size_t>(rounds));
  Adversary adv(adversary, config.dim, Rng(config.seed).split(1));
  Point theta = Point::zeros(config.dim);
  for (int t = 0; t < rounds; ++t) {
    Point w = play(strategy, t, theta);
    if (w.dim() != config.dim) throw InvalidArgument("strategy returned a play of the wrong dimension");
    Point g = adv.next(theta, w);
    theta -= g;
    const double loss = inner(w, g);
    trace.rounds.push_back({t + 1, std::move(w), std::move(g), theta, loss, std::nullopt});
  }

  if (const auto potential = potential_for(strategy)) {
    const auto eps = epsilon_ledger(trace, *potential);
    for (std::size_t i = 0; i < eps.size(); ++i) trace.rounds[i].eps = eps[i];
  }
  return trace;
}

double reward(const Trace& trace) {
  double sum = 0.0;
  for (const auto& r : trace.rounds) sum -= r.loss;
  return sum;
}

double regret(const Trace& trace, const Point& u) {
  require_dim(trace, u);
  double sum = 0.0;
  for (const auto& r : trace.rounds) sum += inner(r.g, r.w) - inner(r.g, u);
  return sum;
}

double ledger_baseline(const Potential& potential) {
  if (std::holds_alternative<PowerPotential>(potential) || std::holds_alternative<NormalKnownTPotential>(potential)) {
    return potential_value(potential, 0, 0.0);
  }
  return 0.0;
}

std::vector<double> epsilon_ledger(const Trace& trace, const Potential& potential) {
  // The baseline cancels in every difference, so unshifted values are used.
  std::vector<double> eps;
  eps.reserve(trace.rounds.size());
  double prev = potential_value(potential, 0, 0.0);
  for (const auto& r : trace.rounds) {
    const double cur = potential_value(potential, r.t, norm(r.theta));
    eps.push_back(cur - prev + r.loss);
    prev = cur;
  }
  return eps;
}

std::vector<BoundReport> verify_bound(const Trace& trace, const StrategyParams& params,
                                      const std::vector<Point>& comparators, BoundKind kind) {
  const int T = trace.length();
  if (T < 1) throw InvalidArgument("verify_bound needs a nonempty trace");
  std::vector<BoundReport> out;
  out.reserve(comparators.size());
  for (const auto& u : comparators) {
    require_dim(trace, u);
    const double actual = regret(trace, u);
    const double u_norm = norm(u);
    std::optional<double> bound;
    const auto* adaptive = std::get_if<AdaptiveNormalParams>(&params);
    if (kind == BoundKind::ledger && adaptive) {
      bound = adaptive_normal_ledger_bound(*adaptive, u_norm, T);
    } else {
      bound = regret_bound(params, u_norm, T);
    }
    if (!bound) {
      out.push_back({u, actual, kInf, kInf, true, true});
      continue;
    }
    const double slack = *bound - actual;
    out.push_back({u, actual, *bound, slack, slack >= -1e-6 * (1.0 + std::abs(*bound)), false});
  }
  return out;
}

std::vector<Point> comparator_grid(std::size_t dim, const std::vector<double>& norms, int directions_per_norm,
                                   Rng& rng) {
  std::vector<Point> grid;
  for (double n : norms) {
    if (n < 0.0) throw InvalidArgument("comparator norms must be nonnegative");
    if (n == 0.0) {
      grid.push_back(Point::zeros(dim));
      continue;
    }
    for (int k = 0; k < directions_per_norm; ++k) grid.push_back(n * random_unit_vector(dim, rng));
  }
  return grid;
}

std::vector<Point> default_comparator_grid(std::size_t dim, Rng& rng) {
  return comparator_grid(dim, {0.0, 0.1, 1.0, 10.0, 100.0}, 5, rng);
}

double potential_conjugate(const Potential& psi, int T, double u_norm) {
  if (std::holds_alternative<ZeroPotential>(psi)) return u_norm == 0.0 ? 0.0 : kInf;
  double initial = 10.0 * (u_norm + 1.0);
  if (const auto* p = std::get_if<NormalKnownTPotential>(&psi)) {
    initial = exp_conjugate_search_bound(p->params().a * p->params().T, u_norm);
  } else if (const auto* p = std::get_if<AdaptiveNormalPotential>(&psi)) {
    initial = exp_conjugate_search_bound(p->params().a * T, u_norm);
  }
  try {
    return conjugate_numeric_auto([&](double x) { return potential_value(psi, T, x); }, u_norm, initial);
  } catch (const BoundaryHit&) {
    return kInf;
  }
}

DualityWitness duality_witness(const std::vector<Trace>& traces, const Potential& psi, double eps_hat,
                               const std::vector<Point>& comparators) {
  DualityWitness out{true, true};
  if (traces.empty()) return out;
  const std::size_t dim = traces.front().config.dim;
  for (const auto& trace : traces) {
    if (trace.config.dim != dim) throw InvalidArgument("duality_witness traces must share a dimension");
    const int T = trace.length();
    const Point theta = trace.final_theta();
    const double r = norm(theta);
    const double psi_T = potential_value(psi, T, r);
    const double rew = reward(trace);
    const double scale = 1.0 + std::abs(psi_T) + std::abs(rew);
    if (rew < psi_T - eps_hat - 1e-7 * scale) out.reward_side = false;

    std::vector<Point> us = comparators;
    us.push_back(potential_derivative(psi, T, r) * unit_direction(theta));
    for (const auto& u : us) {
      const double conj = potential_conjugate(psi, T, norm(u));
      if (std::isinf(conj)) continue;
      const double reg = regret(trace, u);
      const double tol = 1e-7 * (1.0 + std::abs(conj) + std::abs(reg) + std::abs(psi_T));
      if (reg > conj + eps_hat + tol) out.regret_side = false;
    }
  }
  return out;
}

}  // namespace mmo
