#pragma once

// Independent referees for the closed forms: Gaussian and Rademacher
// expectations, lemma checks on grids, and the backward-induction game
// value.

#include <cstddef>
#include <functional>
#include <vector>

#include "mmo/one_round.hpp"
#include "mmo/rng.hpp"
#include "mmo/scalar_function.hpp"

namespace mmo {

using RealFunction = std::function<double(double)>;

// ---------------------------------------------------------------- quadrature

/// Gauss-Hermite rule for the weight exp(-x^2): nodes ascending, weights
/// summing to sqrt(pi). Nodes start from the Jacobi-matrix eigenvalues and
/// are polished by Newton on the normalized recurrence; cached per n.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussHermiteRule& gauss_hermite_rule(int n);

/// E[f(mean + phi)], phi ~ N(0, variance), with a fixed n-node rule.
double gauss_hermite_expectation(const RealFunction& f, double mean, double variance, int n);

/// E[f(mean + phi)], phi ~ N(0, variance).
///
/// Smooth f: Gauss-Hermite starting at `nodes` (in [16, 256]) and doubling
/// until two successive rules agree to 1e-8 relative; throws Divergence if
/// that fails by 256 nodes. With breakpoints (kinks of f, or any split
/// points for integrands Gauss-Hermite handles poorly), adaptive
/// Gauss-Kronrod on the pieces between them instead.
double gaussian_expectation(const RealFunction& f, double mean, double variance, int nodes = 64,
                            const std::vector<double>& breakpoints = {});

/// Sample mean of f(mean + phi) over `samples` draws; a loose third opinion.
double monte_carlo_expectation(const RealFunction& f, double mean, double variance, std::size_t samples,
                               Rng& rng);

/// sum_k C(tau, k) 2^{-tau} f(|x + (2k - tau) G|). Throws ResourceLimit for
/// tau > 30.
double rademacher_smoothing_exact(const RealFunction& f, double x, int tau, double G);

// ---------------------------------------------------------------- lemma checks

/// Discrete second differences on an n-point grid over [lo, hi] are all
/// >= -1e-10 (1 + |f|).
bool is_convex_on_grid(const RealFunction& f, double lo, double hi, std::size_t n = 401);

struct DominanceResult {
  double rademacher_side;  // (f(1) + f(-1)) / 2
  double gaussian_side;    // E f(phi), phi ~ N(0, pi/2)
  bool holds;              // rademacher_side <= gaussian_side + 1e-8
};

/// Throws PreconditionViolated unless f is convex on [-5, 5].
DominanceResult gaussian_dominance_check(const RealFunction& f, const std::vector<double>& breakpoints = {});

struct ArgmaxResult {
  double argmax;      // grid point with the largest difference
  double at_zero;     // difference at x = 0
  double max_value;   // largest difference on the grid
  bool holds;         // max_value <= at_zero + 1e-12 (1 + |at_zero|)
};

/// Scans x in [0, 10 sqrt(at)] (grid_points points) for
///   E_phi[q_{t+1}(x + phi G)] - q_t(x),  phi ~ N(0, pi/2),
/// with q_t = beta_t exp(x^2/(2at)), using the closed-form expectation.
/// Needs t >= 1 and a > 3 pi G^2 / 4.
ArgmaxResult argmax_at_zero_check(double eps, double a, double G, int t, std::size_t grid_points = 1000);

/// b exp(x^2/a) - exp(x^2/c) is nonincreasing on an n-point grid over
/// [0, x_max]. Needs a >= c > 0, b >= 0, bc <= a.
bool diff_exp_decreasing_check(double a, double b, double c, double x_max, std::size_t n = 2001);

/// a^{3/2} t sqrt(t+1) / (a(t+1) - b)^{3/2} <= 1 + 1e-9 on an n-point grid
/// over [0, t_max]. Needs a >= 1.5 b > 0.
bool fract_bound_check(double a, double b, double t_max = 1e4, std::size_t n = 20001);

// ---------------------------------------------------------------- recursion

struct RecursionSpec {
  ScalarFunction benchmark;  // B(theta) = f(||theta||)
  double G = 1.0;
  int T = 1;                 // at most 6
  std::size_t dim = 2;       // 1 or 2
  std::size_t n_r = 161;     // radial nodes per level
  std::size_t grid_n = 201;  // inner search resolution
};

/// V_t at a state of norm theta_norm by backward induction on radial grids
/// V_s(x) = min_w max_g <g, w> + V_{s+1}(||theta - g||), V_T = B, each step
/// solved by solve_scalar_grid and stored with linear interpolation. Throws
/// ResourceLimit if T > 6 or the grids exceed the work budget.
double conditional_value_recursive(const RecursionSpec& spec, int t, double theta_norm);

/// min over w in R^2 of max over ||g|| = G of <w, g> + h(||theta - g||),
/// searched directly in the plane (no radial reduction): nested golden
/// sections over the two coordinates of w, n_angles scan over g.
double minimax_value_2d(const OneRoundSpec& spec, std::size_t n_angles = 360);

}  // namespace mmo
