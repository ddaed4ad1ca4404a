#include "mmo/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mmo/error.hpp"
#include "mmo/scalar_search.hpp"

namespace mmo {
namespace {

constexpr double kPi = std::numbers::pi;

void check_round_in(int t, int T) {
  if (t < 0 || t > T) {
    throw InvalidArgument("round index t = " + std::to_string(t) + " outside [0, " + std::to_string(T) + "]");
  }
}

}  // namespace

// ---------------------------------------------------------------- power

PowerPotential::PowerPotential(const PowerParams& params) : params_(params) { validate(params_); }

double PowerPotential::q() const {
  if (params_.p == 1.0) return std::numeric_limits<double>::infinity();
  return params_.p / (params_.p - 1.0);
}

void PowerPotential::check_round(int t) const { check_round_in(t, params_.T); }

double PowerPotential::value(int t, double x) const {
  check_round(t);
  const auto& [W, p, G, T] = params_;
  if (t == T) return (W / p) * std::pow(std::abs(x), p);
  return (W / p) * std::pow(x * x + G * G * (T - t), p / 2.0);
}

double PowerPotential::derivative(int t, double x) const {
  check_round(t);
  if (x == 0.0) return 0.0;
  const auto& [W, p, G, T] = params_;
  return W * x * std::pow(x * x + G * G * (T - t), (p - 2.0) / 2.0);
}

// ---------------------------------------------------------------- normal, known T

NormalKnownTPotential::NormalKnownTPotential(const NormalKnownTParams& params) : params_(params) {
  validate(params_);
}

void NormalKnownTPotential::check_round(int t) const { check_round_in(t, params_.T); }

double NormalKnownTPotential::exponent_scale(int t) const {
  const auto& [eps, a, G, T] = params_;
  return 2.0 * a * T - kPi * G * G * (T - t);
}

double NormalKnownTPotential::prefactor(int t) const {
  const auto& [eps, a, G, T] = params_;
  return std::pow(1.0 - kPi * G * G * (T - t) / (2.0 * a * T), -0.5);
}

double NormalKnownTPotential::value(int t, double x) const {
  check_round(t);
  const double eps = params_.eps;
  if (t == params_.T) return eps * std::exp(x * x / (2.0 * params_.a * params_.T));
  return eps * prefactor(t) * std::exp(x * x / exponent_scale(t));
}

double NormalKnownTPotential::derivative(int t, double x) const {
  check_round(t);
  const double scale = exponent_scale(t);
  return params_.eps * prefactor(t) * std::exp(x * x / scale) * 2.0 * x / scale;
}

// ---------------------------------------------------------------- adaptive normal

AdaptiveNormalPotential::AdaptiveNormalPotential(const AdaptiveNormalParams& params) : params_(params) {
  validate(params_);
}

double AdaptiveNormalPotential::beta(int t) const {
  if (t < 1) throw InvalidArgument("beta_t is defined for t >= 1");
  const double l = std::log(t + 1.0);
  return params_.eps / (l * l);
}

double AdaptiveNormalPotential::value(int t, double x) const {
  if (t < 0) throw InvalidArgument("round index must be nonnegative");
  if (t == 0) return 0.0;
  return beta(t) * std::exp(x * x / (2.0 * params_.a * t));
}

double AdaptiveNormalPotential::derivative(int t, double x) const {
  if (t < 0) throw InvalidArgument("round index must be nonnegative");
  if (t == 0) return 0.0;
  const double at = params_.a * t;
  return beta(t) * std::exp(x * x / (2.0 * at)) * x / at;
}

// ---------------------------------------------------------------- variant helpers

double potential_value(const Potential& potential, int t, double theta_norm) {
  if (std::holds_alternative<ZeroPotential>(potential)) return 0.0;
  return std::visit(
      [&](const auto& p) -> double {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, ZeroPotential>) {
          return 0.0;
        } else {
          return p.value(t, theta_norm);
        }
      },
      potential);
}

double potential_derivative(const Potential& potential, int t, double theta_norm) {
  return std::visit(
      [&](const auto& p) -> double {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, ZeroPotential>) {
          return 0.0;
        } else {
          return p.derivative(t, theta_norm);
        }
      },
      potential);
}

std::optional<Potential> potential_for(const StrategyParams& params) {
  if (const auto* ogd = std::get_if<OgdParams>(&params)) {
    if (!ogd->T) return std::nullopt;
    return Potential(PowerPotential(PowerParams{ogd->eta, 2.0, ogd->G, *ogd->T}));
  }
  if (const auto* p = std::get_if<PowerParams>(&params)) return Potential(PowerPotential(*p));
  if (const auto* p = std::get_if<NormalKnownTParams>(&params)) return Potential(NormalKnownTPotential(*p));
  return Potential(AdaptiveNormalPotential(std::get<AdaptiveNormalParams>(params)));
}

// ---------------------------------------------------------------- conjugates

double conjugate_numeric(const std::function<double(double)>& f, double u_norm, double search_bound) {
  if (!(search_bound > 0.0)) throw InvalidArgument("conjugate search bound must be positive");
  if (u_norm < 0.0) throw InvalidArgument("conjugate argument must be a nonnegative norm");
  // Pull the bound in until f is finite there; beyond that point the
  // objective is -inf and cannot hold the maximizer.
  for (int i = 0; i < 2100 && !std::isfinite(f(search_bound)); ++i) search_bound *= 0.5;
  auto objective = [&](double alpha) { return alpha * u_norm - f(alpha); };
  const double x_tol = 1e-13 * std::max(1.0, search_bound);
  ScalarOptimum best = golden_section_maximize(objective, 0.0, search_bound, x_tol, 400);
  const double at_zero = objective(0.0);
  if (at_zero >= best.value) return at_zero;
  if (search_bound - best.x <= 1e-7 * std::max(1.0, search_bound)) {
    throw BoundaryHit("conjugate maximizer reached the search bound " + std::to_string(search_bound));
  }
  return best.value;
}

double conjugate_numeric_auto(const std::function<double(double)>& f, double u_norm, double initial_bound) {
  double bound = initial_bound;
  for (int i = 0; i < 64; ++i, bound *= 2.0) {
    try {
      return conjugate_numeric(f, u_norm, bound);
    } catch (const BoundaryHit&) {
    }
  }
  throw BoundaryHit("conjugate maximizer unbounded after 64 doublings");
}

double exp_conjugate_search_bound(double alpha, double u_norm) {
  return 10.0 * (u_norm + 1.0) * (std::sqrt(alpha) + 1.0);
}

double exp_conjugate_upper_bound(double alpha, double beta, double w_norm) {
  if (!(alpha > 0.0) || !(beta > 0.0)) throw InvalidArgument("exp conjugate bound needs alpha, beta > 0");
  return w_norm * std::sqrt(2.0 * alpha * std::log(std::sqrt(alpha) * w_norm / beta + 1.0)) - beta;
}

// ---------------------------------------------------------------- regret envelopes

std::optional<double> regret_bound(const StrategyParams& params, double u_norm, int T) {
  validate(params);
  if (T < 1) throw InvalidArgument("regret_bound needs T >= 1");
  if (u_norm < 0.0) throw InvalidArgument("comparator norm must be nonnegative");
  const double rootT = std::sqrt(static_cast<double>(T));

  if (const auto* ogd = std::get_if<OgdParams>(&params)) {
    return u_norm * u_norm / (2.0 * ogd->eta) + ogd->eta / 2.0 * ogd->G * ogd->G * T;
  }
  if (const auto* pw = std::get_if<PowerParams>(&params)) {
    const double game_value = pw->W / pw->p * std::pow(pw->G * rootT, pw->p);
    if (pw->p == 1.0) {
      if (u_norm > pw->W) return std::nullopt;
      return pw->W * pw->G * rootT;
    }
    const double q = pw->p / (pw->p - 1.0);
    return std::pow(u_norm, q) / (std::pow(pw->W, q - 1.0) * q) + game_value;
  }
  if (const auto* nk = std::get_if<NormalKnownTParams>(&params)) {
    const double aT = nk->a * T;
    const double lead = u_norm * std::sqrt(2.0 * aT * std::log(std::sqrt(aT) * u_norm / nk->eps + 1.0));
    const double G2 = nk->G * nk->G;
    return lead + nk->eps * (std::pow(1.0 - kPi * G2 / (2.0 * nk->a), -0.5) - 1.0);
  }
  const auto& an = std::get<AdaptiveNormalParams>(params);
  const double aT = an.a * T;
  const double l = std::log(T + 1.0);
  const double lead = u_norm * std::sqrt(2.0 * aT * std::log(std::sqrt(aT) * u_norm * l * l / an.eps + 1.0));
  return lead + an.eps * (kPi * an.G * an.G / an.a - 1.0);
}

double adaptive_normal_ledger_bound(const AdaptiveNormalParams& params, double u_norm, int T) {
  const AdaptiveNormalPotential pot(params);
  if (T < 1) throw InvalidArgument("adaptive_normal_ledger_bound needs T >= 1");
  const double G2 = params.G * params.G;
  double harmonic = 0.0;
  for (int t = 1; t < T; ++t) {
    const double l = std::log(t + 1.0);
    harmonic += 1.0 / (t * l * l);
  }
  return exp_conjugate_upper_bound(params.a * T, pot.beta(T), u_norm) +
         pot.beta(1) * std::exp(G2 / (2.0 * params.a)) + kPi * G2 * params.eps / (4.0 * params.a) * harmonic;
}

}  // namespace mmo
