#include "mmo/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mmo/error.hpp"

namespace mmo {
namespace {

constexpr double kPi = std::numbers::pi;

Point scaled_direction(const Point& theta, double magnitude) {
  if (!std::isfinite(magnitude)) throw Divergence("play magnitude overflowed; ||theta|| is too large");
  return magnitude * unit_direction(theta);
}

void check_round(int t, int T) {
  if (t < 0 || t >= T) {
    throw InvalidArgument("round index t = " + std::to_string(t) + " outside [0, " + std::to_string(T - 1) + "]");
  }
}

}  // namespace

double exp_difference(double A, double B) {
  const double m = std::max(A, B);
  return std::exp(m) * (std::exp(A - m) - std::exp(B - m));
}

Point ogd_play(double eta, const Point& theta) { return eta * theta; }

Point power_play(const PowerParams& params, int t, const Point& theta) {
  validate(params);
  check_round(t, params.T);
  const auto& [W, p, G, T] = params;
  if (theta.is_zero()) return Point::zeros(theta.dim());
  return (W * std::pow(squared_norm(theta) + G * G * (T - t), (p - 2.0) / 2.0)) * theta;
}

Point normal_knownT_play(const NormalKnownTParams& params, int t, const Point& theta) {
  validate(params);
  check_round(t, params.T);
  const auto& [eps, a, G, T] = params;
  if (theta.is_zero()) return Point::zeros(theta.dim());
  const double r = norm(theta);
  const double remaining = kPi * G * G * (T - t - 1);
  const double D = 2.0 * a * T - remaining;
  const double diff = exp_difference((r + G) * (r + G) / D, (r - G) * (r - G) / D);
  return scaled_direction(theta, eps * diff / (2.0 * G * std::sqrt(1.0 - remaining / (2.0 * a * T))));
}

Point adaptive_normal_play(const AdaptiveNormalParams& params, int t, const Point& theta) {
  validate(params);
  if (t < 0) throw InvalidArgument("round index must be nonnegative");
  const auto& [eps, a, G] = params;
  if (theta.is_zero()) return Point::zeros(theta.dim());
  const double r = norm(theta);
  const double scale = 2.0 * a * (t + 1.0);
  const double l = std::log(t + 2.0);
  const double diff = exp_difference((r + G) * (r + G) / scale, (r - G) * (r - G) / scale);
  return scaled_direction(theta, eps * diff / (2.0 * G * l * l));
}

Point play(const StrategyParams& params, int t, const Point& theta) {
  if (const auto* p = std::get_if<OgdParams>(&params)) {
    validate(*p);
    return ogd_play(p->eta, theta);
  }
  if (const auto* p = std::get_if<PowerParams>(&params)) return power_play(*p, t, theta);
  if (const auto* p = std::get_if<NormalKnownTParams>(&params)) return normal_knownT_play(*p, t, theta);
  return adaptive_normal_play(std::get<AdaptiveNormalParams>(params), t, theta);
}

bool play_is_minimax(const StrategyParams& params, std::size_t dim) {
  // Quadratic potentials (OGD, p = 2) sit on the regime boundary, where the
  // parallel solution coincides with the orthogonal one.
  const auto* power = std::get_if<PowerParams>(&params);
  return !(power && power->p < 2.0 && dim < 2);
}

}  // namespace mmo
