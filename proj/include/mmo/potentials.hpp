#pragma once

// Time-indexed potentials q_t(theta) = f_t(||theta||) for the power family,
// the known-horizon Normal relaxation and AdaptiveNormal, plus the Fenchel
// conjugate machinery that turns them into regret envelopes.

#include <functional>
#include <optional>
#include <variant>

#include "mmo/params.hpp"
#include "mmo/point.hpp"

namespace mmo {

/// Conditional value of the power-family game,
///   f_t(x) = (W/p) (x^2 + G^2 (T - t))^{p/2},
/// which equals the benchmark (W/p) x^p at t = T.
class PowerPotential {
 public:
  explicit PowerPotential(const PowerParams& params);

  const PowerParams& params() const { return params_; }
  /// Conjugate exponent p/(p-1); +infinity for p = 1.
  double q() const;

  /// Throws InvalidArgument unless 0 <= t <= T.
  double value(int t, double x) const;
  double derivative(int t, double x) const;

 private:
  void check_round(int t) const;
  PowerParams params_;
};

/// Gaussian-smoothed known-horizon potential
///   eps (1 - pi G^2 (T-t) / (2aT))^{-1/2} exp(x^2 / (2aT - pi G^2 (T-t))).
class NormalKnownTPotential {
 public:
  static constexpr double kSigma2 = 1.5707963267948966;  // pi / 2

  explicit NormalKnownTPotential(const NormalKnownTParams& params);

  const NormalKnownTParams& params() const { return params_; }

  double value(int t, double x) const;
  double derivative(int t, double x) const;
  /// Denominator of the exponent, 2aT - pi G^2 (T - t).
  double exponent_scale(int t) const;
  double prefactor(int t) const;

 private:
  void check_round(int t) const;
  NormalKnownTParams params_;
};

/// q_t(theta) = beta_t exp(||theta||^2 / (2at)), beta_t = eps / log^2(t+1)
/// (natural log). q_0 is identically 0.
class AdaptiveNormalPotential {
 public:
  explicit AdaptiveNormalPotential(const AdaptiveNormalParams& params);

  const AdaptiveNormalParams& params() const { return params_; }

  /// eps / log^2(t+1) for t >= 1.
  double beta(int t) const;
  /// Radial form f_t evaluated at x = ||theta||.
  double value(int t, double x) const;
  double value(int t, const Point& theta) const { return value(t, norm(theta)); }
  double derivative(int t, double x) const;

 private:
  AdaptiveNormalParams params_;
};

/// q_t = 0; reduces the slack ledger to the per-round losses.
struct ZeroPotential {};

using Potential = std::variant<ZeroPotential, PowerPotential, NormalKnownTPotential, AdaptiveNormalPotential>;

double potential_value(const Potential& potential, int t, double theta_norm);
double potential_derivative(const Potential& potential, int t, double theta_norm);

/// The potential whose minimax play the strategy implements, if it has one.
/// OGD maps to the p = 2 power potential with W = eta when its horizon is
/// known.
std::optional<Potential> potential_for(const StrategyParams& params);

/// sup_{alpha in [0, search_bound]} alpha * u_norm - f(alpha), by
/// golden-section search on the concave objective (absolute accuracy 1e-8).
/// Throws BoundaryHit when the maximizer sits at search_bound.
double conjugate_numeric(const std::function<double(double)>& f, double u_norm, double search_bound);

/// conjugate_numeric with the bound doubled on every boundary hit.
double conjugate_numeric_auto(const std::function<double(double)>& f, double u_norm,
                              double initial_bound);

/// Default search bound for exp-type potentials beta exp(x^2 / (2 alpha)).
double exp_conjugate_search_bound(double alpha, double u_norm);

/// Closed-form upper bound on the conjugate of beta exp(x^2/(2 alpha)):
///   ||w|| sqrt(2 alpha log(sqrt(alpha) ||w|| / beta + 1)) - beta.
double exp_conjugate_upper_bound(double alpha, double beta, double w_norm);

/// Published regret envelope of each algorithm at comparator norm u_norm
/// after T rounds. std::nullopt marks the vacuous case (p = 1 with
/// u_norm > W).
std::optional<double> regret_bound(const StrategyParams& params, double u_norm, int T);

/// A regret envelope for AdaptiveNormal that accounts for the first-round
/// slack q_1(theta_1) and uses -beta_T from the conjugate bound:
///   conj_bound(2aT, beta_T, u) + beta_1 exp(G^2/(2a))
///     + (pi G^2 eps / (4a)) sum_{t=1}^{T-1} 1 / (t log^2(t+1)).
double adaptive_normal_ledger_bound(const AdaptiveNormalParams& params, double u_norm, int T);

}  // namespace mmo
