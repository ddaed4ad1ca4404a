#include "mmo/one_round.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mmo/error.hpp"
#include "mmo/scalar_search.hpp"
#include "mmo/tolerance.hpp"

namespace mmo {

std::string_view regime_name(Regime regime) {
  switch (regime) {
    case Regime::orthogonal:
      return "orthogonal";
    case Regime::parallel:
      return "parallel";
    case Regime::numeric:
      return "numeric";
  }
  return "numeric";
}

void OneRoundSpec::validate() const {
  if (!(G > 0.0) || !std::isfinite(G)) throw InvalidArgument("one-round game needs G > 0");
  if (!h.value) throw InvalidArgument("one-round game needs a function h");
  const double top = norm(theta) + G;
  constexpr int n = 33;
  double prev = h(0.0);
  for (int i = 1; i < n; ++i) {
    const double x = top * i / (n - 1);
    const double cur = h(x);
    if (cur < prev - 1e-12 * (1.0 + std::abs(prev))) {
      throw InvalidArgument("h must be nondecreasing on [0, ||theta|| + G]; decreases near x = " +
                            std::to_string(x));
    }
    prev = cur;
  }
}

std::vector<double> default_probe_grid(double x_max, std::size_t n) {
  if (!(x_max > 0.0)) throw InvalidArgument("probe grid needs x_max > 0");
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) grid[i] = x_max * static_cast<double>(i + 1) / static_cast<double>(n);
  return grid;
}

Regime classify_regime(const ScalarFunction& h, const std::vector<double>& probe_grid) {
  if (probe_grid.size() < 32) throw InvalidArgument("classify_regime needs at least 32 probe points");
  bool orthogonal = true;
  bool parallel = true;
  for (double x : probe_grid) {
    if (!(x > 0.0)) throw InvalidArgument("probe points must be positive");
    const double d2 = h.second_derivative(x);
    const double ratio = h.derivative(x) / x;
    const double scale = std::max(x, 1.0);
    // Finite-difference noise grows like |h| / step^2.
    const double tol = 1e-4 * (std::abs(d2) + std::abs(ratio)) + 1e-5 * std::abs(h(x)) / (scale * scale) + 1e-8;
    if (d2 > ratio + tol) orthogonal = false;
    if (d2 < ratio - tol) parallel = false;
  }
  if (parallel) return Regime::parallel;
  if (orthogonal) return Regime::orthogonal;
  return Regime::numeric;
}

OneRoundSolution solve_orthogonal(const OneRoundSpec& spec, Rng& rng) {
  if (spec.theta.dim() < 2) throw UnsupportedDimension("orthogonal solution needs d >= 2");
  const double r2 = squared_norm(spec.theta);
  const double s = std::sqrt(r2 + spec.G * spec.G);
  const double value = spec.h(s);
  const Point w = (spec.h.derivative(s) / s) * spec.theta;
  const Point g = spec.G * orthonormal_complement_sample(spec.theta, rng);
  return {value, w, g, Regime::orthogonal};
}

OneRoundSolution solve_orthogonal(const OneRoundSpec& spec) {
  Rng rng(0);
  return solve_orthogonal(spec, rng);
}

OneRoundSolution solve_parallel(const OneRoundSpec& spec, ParallelSign sign, Rng* rng) {
  const double G = spec.G;
  const double r = norm(spec.theta);
  const double up = spec.h(r + G);
  const double down = spec.h(std::abs(r - G));
  const double value = 0.5 * (up + down);
  const std::size_t dim = spec.theta.dim();
  if (r == 0.0) {
    Point dir = rng ? random_unit_vector(dim, *rng) : Point::basis(dim, 0);
    return {value, Point::zeros(dim), G * dir, Regime::parallel};
  }
  const Point dir = unit_direction(spec.theta);
  const Point w = ((up - down) / (2.0 * G)) * dir;
  const Point g = (sign == ParallelSign::shrink ? G : -G) * dir;
  return {value, w, g, Regime::parallel};
}

double solve_scalar_grid(const OneRoundSpec& spec, std::size_t grid_n) {
  if (grid_n < 101) throw InvalidArgument("solve_scalar_grid needs grid_n >= 101");
  const double G = spec.G;
  const double r = norm(spec.theta);
  const bool line = spec.theta.dim() == 1;
  const auto& h = spec.h;

  double max_slope = 0.0;
  for (std::size_t i = 0; i < grid_n; ++i) {
    const double x = (r + G) * static_cast<double>(i) / static_cast<double>(grid_n - 1);
    max_slope = std::max(max_slope, std::abs(h.derivative(x)));
  }
  const double L = max_slope > 0.0 ? 2.0 * max_slope : 1.0;

  auto payoff = [&](double alpha, double beta) {
    const double dist = line ? std::abs(r - beta) : std::sqrt(std::max(0.0, r * r - 2.0 * beta * r + G * G));
    return alpha * beta + h(dist);
  };
  auto inner = [&](double alpha) {
    return maximize_scan_refine([&](double beta) { return payoff(alpha, beta); }, -G, G, grid_n, 1e-12 * G)
        .value;
  };
  return golden_section_minimize(inner, -L, L, 1e-12 * std::max(L, 1.0), 200).value;
}

double lower_bound_value(const OneRoundSpec& spec) {
  if (spec.theta.dim() < 2) throw UnsupportedDimension("the lower bound needs d >= 2");
  return spec.h(std::sqrt(squared_norm(spec.theta) + spec.G * spec.G));
}

double best_response_value(const OneRoundSpec& spec, const Point& w, std::size_t n_angles) {
  const std::size_t dim = spec.theta.dim();
  if (w.dim() != dim) throw InvalidArgument("play and state dimensions differ");
  const double G = spec.G;
  if (dim == 1) {
    const double t = spec.theta[0];
    return std::max(w[0] * G + spec.h(std::abs(t - G)), -w[0] * G + spec.h(std::abs(t + G)));
  }
  if (dim != 2) throw UnsupportedDimension("best_response_value supports d <= 2");
  auto payoff = [&](double phi) {
    const double g0 = G * std::cos(phi);
    const double g1 = G * std::sin(phi);
    const double d0 = spec.theta[0] - g0;
    const double d1 = spec.theta[1] - g1;
    return w[0] * g0 + w[1] * g1 + spec.h(std::sqrt(d0 * d0 + d1 * d1));
  };
  return maximize_scan_refine(payoff, 0.0, 2.0 * std::numbers::pi, std::max<std::size_t>(n_angles, 8) + 1,
                              1e-13)
      .value;
}

}  // namespace mmo
