#pragma once

// One-dimensional searches shared by the conjugate machinery, the
// one-round grid oracle and the recursive game-value oracle.

#include <cmath>
#include <cstddef>

namespace mmo {

struct ScalarOptimum {
  double x;
  double value;
};

inline constexpr double kInvGoldenRatio = 0.6180339887498948482;

/// Golden-section minimization of a unimodal f on [lo, hi]. Stops when the
/// bracket is narrower than x_tol or after max_iter iterations.
template <class F>
ScalarOptimum golden_section_minimize(F&& f, double lo, double hi, double x_tol,
                                      int max_iter = 300) {
  double c = hi - kInvGoldenRatio * (hi - lo);
  double d = lo + kInvGoldenRatio * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iter && (hi - lo) > x_tol; ++i) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvGoldenRatio * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvGoldenRatio * (hi - lo);
      fd = f(d);
    }
  }
  return fc < fd ? ScalarOptimum{c, fc} : ScalarOptimum{d, fd};
}

template <class F>
ScalarOptimum golden_section_maximize(F&& f, double lo, double hi, double x_tol,
                                      int max_iter = 300) {
  ScalarOptimum r = golden_section_minimize([&](double x) { return -f(x); }, lo, hi, x_tol, max_iter);
  r.value = -r.value;
  return r;
}

/// Maximizes f on [lo, hi] by a uniform scan of n >= 2 points followed by a
/// golden-section refinement inside the two cells adjacent to the best grid
/// point. Endpoints are always candidates.
template <class F>
ScalarOptimum maximize_scan_refine(F&& f, double lo, double hi, std::size_t n, double x_tol) {
  if (n < 2) n = 2;
  const double step = (hi - lo) / static_cast<double>(n - 1);
  std::size_t best_i = 0;
  double best = f(lo);
  for (std::size_t i = 1; i < n; ++i) {
    const double x = (i + 1 == n) ? hi : lo + step * static_cast<double>(i);
    const double v = f(x);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  ScalarOptimum out{best_i + 1 == n ? hi : lo + step * static_cast<double>(best_i), best};
  const double a = best_i == 0 ? lo : lo + step * static_cast<double>(best_i - 1);
  const double b = best_i + 1 >= n ? hi : lo + step * static_cast<double>(best_i + 1);
  if (b > a) {
    const ScalarOptimum refined = golden_section_maximize(f, a, b, x_tol);
    if (refined.value > out.value) out = refined;
  }
  return out;
}

}  // namespace mmo
