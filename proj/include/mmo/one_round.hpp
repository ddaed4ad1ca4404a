#pragma once

// The one-round game
//   H = min_w max_{||g|| <= G} <w, g> + h(||theta - g||)
// solved in closed form in the orthogonal and parallel regimes, and
// numerically through its scalar reduction.

#include <cstddef>
#include <string_view>
#include <vector>

#include "mmo/point.hpp"
#include "mmo/rng.hpp"
#include "mmo/scalar_function.hpp"

namespace mmo {

enum class Regime { orthogonal, parallel, numeric };

std::string_view regime_name(Regime regime);

struct OneRoundSpec {
  ScalarFunction h;  // convex, even, nondecreasing on [0, inf)
  Point theta;
  double G;

  /// Throws InvalidArgument if G <= 0 or h decreases on a probe grid over
  /// [0, ||theta|| + G].
  void validate() const;
};

struct OneRoundSolution {
  double value;
  Point player_play;
  Point adversary_play;
  Regime regime;
};

/// Which of the two minimax parallel plays g* = +G theta_hat (shrink) or
/// g* = -G theta_hat (grow) solve_parallel reports.
enum class ParallelSign { shrink, grow };

/// n points evenly spaced on (0, x_max].
std::vector<double> default_probe_grid(double x_max, std::size_t n = 64);

/// orthogonal if h'' <= h'/x + tol on every probe, parallel if
/// h'' >= h'/x - tol on every probe (checked first, so quadratics land
/// here), numeric otherwise. Needs at least 32 positive probe points.
Regime classify_regime(const ScalarFunction& h, const std::vector<double>& probe_grid);

/// H = h(sqrt(r^2 + G^2)), w* = theta h'(s)/s, g* = G v with v a random unit
/// vector orthogonal to theta. Throws UnsupportedDimension in d = 1.
OneRoundSolution solve_orthogonal(const OneRoundSpec& spec, Rng& rng);
OneRoundSolution solve_orthogonal(const OneRoundSpec& spec);

/// H = (h(r+G) + h(r-G))/2, w* = theta_hat (h(r+G) - h(r-G))/(2G).
/// At theta = 0 the adversary plays G e_1, or G times a random direction
/// when rng is given.
OneRoundSolution solve_parallel(const OneRoundSpec& spec, ParallelSign sign = ParallelSign::shrink,
                                Rng* rng = nullptr);

/// Scalar reduction
///   min_alpha max_{beta in [-G, G]} alpha beta + h(sqrt(r^2 - 2 beta r + G^2))
/// (h(|r - beta|) in d = 1), by golden section over alpha in [-L, L] and a
/// dense scan plus refinement over beta. grid_n >= 101.
double solve_scalar_grid(const OneRoundSpec& spec, std::size_t grid_n = 201);

/// h(sqrt(r^2 + G^2)); a lower bound on H whenever d >= 2.
double lower_bound_value(const OneRoundSpec& spec);

/// max_{||g|| <= G} <w, g> + h(||theta - g||) for a fixed play w, d <= 2.
/// In d = 2 the sphere ||g|| = G is scanned with n_angles points and the
/// best cell refined.
double best_response_value(const OneRoundSpec& spec, const Point& w, std::size_t n_angles = 720);

}  // namespace mmo
