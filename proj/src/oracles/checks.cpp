#include <algorithm>
#include <cmath>
#include <numbers>

#include "mmo/error.hpp"
#include "mmo/oracles.hpp"

namespace mmo {

bool is_convex_on_grid(const RealFunction& f, double lo, double hi, std::size_t n) {
  if (n < 3 || !(hi > lo)) throw InvalidArgument("convexity grid needs n >= 3 and hi > lo");
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = f(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double second = v[i - 1] - 2.0 * v[i] + v[i + 1];
    const double scale = 1.0 + std::abs(v[i - 1]) + std::abs(v[i]) + std::abs(v[i + 1]);
    if (second < -1e-10 * scale) return false;
  }
  return true;
}

DominanceResult gaussian_dominance_check(const RealFunction& f, const std::vector<double>& breakpoints) {
  if (!is_convex_on_grid(f, -5.0, 5.0)) throw PreconditionViolated("gaussian_dominance_check needs a convex f");
  const double lhs = 0.5 * (f(1.0) + f(-1.0));
  const double rhs = gaussian_expectation(f, 0.0, std::numbers::pi / 2.0, 64, breakpoints);
  return {lhs, rhs, lhs <= rhs + 1e-8};
}

ArgmaxResult argmax_at_zero_check(double eps, double a, double G, int t, std::size_t grid_points) {
  if (t < 1) throw InvalidArgument("argmax_at_zero_check needs t >= 1");
  if (!(eps > 0.0) || !(G > 0.0)) throw InvalidArgument("eps and G must be positive");
  if (!(a > 3.0 * std::numbers::pi * G * G / 4.0)) throw PreconditionViolated("argmax_at_zero_check needs a > 3 pi G^2 / 4");
  if (grid_points < 2) throw InvalidArgument("need at least two grid points");
  const double sigma2 = std::numbers::pi / 2.0;
  auto beta = [&](int s) {
    const double l = std::log(s + 1.0);
    return eps / (l * l);
  };
  const double next = a * (t + 1.0);
  const double shrunk = next - sigma2 * G * G;
  const double lead = beta(t + 1) * std::sqrt(next / shrunk);
  const double b_t = beta(t);
  auto diff = [&](double x) {
    return lead * std::exp(x * x / (2.0 * shrunk)) - b_t * std::exp(x * x / (2.0 * a * t));
  };
  const double x_max = 10.0 * std::sqrt(a * t);
  ArgmaxResult out{0.0, diff(0.0), diff(0.0), true};
  for (std::size_t i = 1; i < grid_points; ++i) {
    const double x = x_max * static_cast<double>(i) / static_cast<double>(grid_points - 1);
    const double v = diff(x);
    if (v > out.max_value) {
      out.max_value = v;
      out.argmax = x;
    }
  }
  out.holds = out.max_value <= out.at_zero + 1e-12 * (1.0 + std::abs(out.at_zero));
  return out;
}

bool diff_exp_decreasing_check(double a, double b, double c, double x_max, std::size_t n) {
  if (!(a >= c && c > 0.0 && b >= 0.0 && b * c <= a)) {
    throw PreconditionViolated("diff_exp_decreasing_check needs a >= c > 0, b >= 0, bc <= a");
  }
  if (n < 2 || !(x_max > 0.0)) throw InvalidArgument("grid needs n >= 2 and x_max > 0");
  auto g = [&](double x) { return b * std::exp(x * x / a) - std::exp(x * x / c); };
  double prev = g(0.0);
  for (std::size_t i = 1; i < n; ++i) {
    const double cur = g(x_max * static_cast<double>(i) / static_cast<double>(n - 1));
    const double scale = std::max({1.0, std::abs(prev), std::abs(cur)});
    if (cur > prev + 1e-12 * scale) return false;
    prev = cur;
  }
  return true;
}

bool fract_bound_check(double a, double b, double t_max, std::size_t n) {
  if (!(b > 0.0 && a >= 1.5 * b)) throw PreconditionViolated("fract_bound_check needs a >= 1.5 b > 0");
  if (n < 2 || !(t_max > 0.0)) throw InvalidArgument("grid needs n >= 2 and t_max > 0");
  for (std::size_t i = 0; i < n; ++i) {
    const double t = t_max * static_cast<double>(i) / static_cast<double>(n - 1);
    const double value = std::pow(a, 1.5) * t * std::sqrt(t + 1.0) / std::pow(a * (t + 1.0) - b, 1.5);
    if (value > 1.0 + 1e-9) return false;
  }
  return true;
}

}  // namespace mmo
