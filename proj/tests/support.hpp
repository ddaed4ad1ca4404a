#pragma once

// Hand-rolled generators and reference computations for the tests. The
// references deliberately avoid the library's numerics: Simpson's rule
// instead of Gauss-Hermite, dense scans instead of golden sections.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace mmo::testing {

inline constexpr double kPi = std::numbers::pi;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
  std::vector<double> vector(std::size_t n, double scale = 1.0) {
    std::vector<double> v(n);
    for (auto& x : v) x = scale * normal();
    return v;
  }
  std::uint64_t u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

/// E f(mean + phi), phi ~ N(0, var), by composite Simpson over +-14 sigma,
/// split at the given points.
inline double simpson_gaussian(const std::function<double(double)>& f, double mean, double var,
                               std::vector<double> splits = {}, int panels = 20000) {
  const double s = std::sqrt(var);
  const double lo = mean - 14.0 * s, hi = mean + 14.0 * s;
  std::vector<double> edges{lo};
  std::sort(splits.begin(), splits.end());
  for (double b : splits)
    if (b > lo && b < hi) edges.push_back(b);
  edges.push_back(hi);
  auto density = [&](double y) {
    const double z = (y - mean) / s;
    return std::exp(-0.5 * z * z) / (s * std::sqrt(2.0 * kPi));
  };
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    const double a = edges[k], b = edges[k + 1];
    const int n = std::max(2, 2 * static_cast<int>(panels * (b - a) / (hi - lo) / 2.0 + 1.0));
    const double h = (b - a) / n;
    double acc = f(a) * density(a) + f(b) * density(b);
    for (int i = 1; i < n; ++i) {
      const double y = a + h * i;
      acc += (i % 2 ? 4.0 : 2.0) * f(y) * density(y);
    }
    total += acc * h / 3.0;
  }
  return total;
}

/// max over ||g|| = G in the plane of <w, g> + h(||theta - g||), by a dense
/// angle scan (no refinement).
inline double brute_best_response(const std::function<double(double)>& h, double t0, double t1, double w0,
                                  double w1, double G, int angles = 4000) {
  double best = -INFINITY;
  for (int k = 0; k < angles; ++k) {
    const double phi = 2.0 * kPi * k / angles;
    const double g0 = G * std::cos(phi), g1 = G * std::sin(phi);
    best = std::max(best, w0 * g0 + w1 * g1 + h(std::hypot(t0 - g0, t1 - g1)));
  }
  return best;
}

/// One-round value for theta = (r, 0): by symmetry the optimal play lies on
/// the first axis, so scan w = (alpha, 0) densely and refine once.
inline double brute_one_round(const std::function<double(double)>& h, double r, double G, double alpha_max,
                              int alphas = 801, int angles = 2000) {
  auto objective = [&](double alpha) { return brute_best_response(h, r, 0.0, alpha, 0.0, G, angles); };
  double best_alpha = 0.0, best = INFINITY;
  for (int i = 0; i < alphas; ++i) {
    const double a = -alpha_max + 2.0 * alpha_max * i / (alphas - 1);
    const double v = objective(a);
    if (v < best) best = v, best_alpha = a;
  }
  const double step = 2.0 * alpha_max / (alphas - 1);
  for (int i = -50; i <= 50; ++i) best = std::min(best, objective(best_alpha + step * i / 50.0));
  return best;
}

}  // namespace mmo::testing
