#pragma once

// Players. Each maps the round index t and the state theta_t = -g_{1:t} to
// the next play w_{t+1}; all are stateless.

#include <cstddef>

#include "mmo/params.hpp"
#include "mmo/point.hpp"

namespace mmo {

/// exp(A) - exp(B) evaluated as exp(m)(exp(A - m) - exp(B - m)),
/// m = max(A, B).
double exp_difference(double A, double B);

/// w = eta theta.
Point ogd_play(double eta, const Point& theta);

/// w = theta W (||theta||^2 + G^2 (T - t))^{(p-2)/2}. Needs 0 <= t < T.
Point power_play(const PowerParams& params, int t, const Point& theta);

/// Known-horizon Normal play with D = 2aT - pi G^2 (T - t - 1):
///   eps theta_hat [exp((r+G)^2/D) - exp((r-G)^2/D)]
///     / (2G sqrt(1 - pi G^2 (T-t-1) / (2aT))).
Point normal_knownT_play(const NormalKnownTParams& params, int t, const Point& theta);

///   eps theta_hat [exp((r+G)^2/(2a(t+1))) - exp((r-G)^2/(2a(t+1)))]
///     / (2G log^2(t+2)).
Point adaptive_normal_play(const AdaptiveNormalParams& params, int t, const Point& theta);

Point play(const StrategyParams& params, int t, const Point& theta);

/// False for the power family with p < 2 in d = 1, where the play is still
/// defined but no longer minimax.
bool play_is_minimax(const StrategyParams& params, std::size_t dim);

}  // namespace mmo
