#pragma once

// Game loop and accounting: reward, regret, the per-round slack ledger and
// bound checks.

#include <optional>
#include <string>
#include <vector>

#include "mmo/adversaries.hpp"
#include "mmo/game_config.hpp"
#include "mmo/params.hpp"
#include "mmo/point.hpp"
#include "mmo/potentials.hpp"

namespace mmo {

struct RoundRecord {
  int t;           // 1-based
  Point w;         // play w_t
  Point g;         // gradient g_t
  Point theta;     // theta_t = theta_{t-1} - g_t
  double loss;     // <w_t, g_t>
  std::optional<double> eps;
};

struct Trace {
  GameConfig config;
  std::string strategy_tag;
  std::string adversary_tag;
  std::vector<RoundRecord> rounds;

  int length() const { return static_cast<int>(rounds.size()); }
  /// theta_T, or 0 for an empty trace.
  Point final_theta() const;
  /// g_{1:T}.
  Point grad_sum() const;
};

/// Plays `rounds` rounds: w_{t+1} = strategy(t, theta_t), then the adversary
/// picks g_{t+1} seeing w_{t+1}. Known-horizon strategies need rounds equal
/// to their T. When the strategy has a potential, eps is filled from
/// epsilon_ledger. The adversary draws from Rng(config.seed).split(1).
Trace run_game(const StrategyParams& strategy, const AdversaryParams& adversary, const GameConfig& config,
               int rounds);

/// -sum_t <w_t, g_t>.
double reward(const Trace& trace);

/// sum_t <g_t, w_t - u>.
double regret(const Trace& trace, const Point& u);

/// q_0(0) for potentials that define it (power, known-horizon Normal), 0
/// for AdaptiveNormal and the zero potential. The ledger works with
/// q_t - ledger_baseline, which vanishes at t = 0.
double ledger_baseline(const Potential& potential);

/// eps_t = q_t(theta_t) - q_{t-1}(theta_{t-1}) + <w_t, g_t>, t = 1..T, for the
/// shifted potential q_t - ledger_baseline (so q_0(0) = 0).
std::vector<double> epsilon_ledger(const Trace& trace, const Potential& potential);

enum class BoundKind {
  published,  // regret_bound
  ledger,     // adaptive_normal_ledger_bound for AdaptiveNormal, published otherwise
};

struct BoundReport {
  Point u;
  double regret_actual;
  double regret_bound;  // +inf when the envelope is vacuous
  double slack;         // bound - actual
  bool holds;           // slack >= -1e-6 (1 + |bound|)
  bool vacuous;
};

std::vector<BoundReport> verify_bound(const Trace& trace, const StrategyParams& params,
                                      const std::vector<Point>& comparators,
                                      BoundKind kind = BoundKind::published);

/// Norms x directions_per_norm random directions; norm 0 contributes a
/// single zero comparator.
std::vector<Point> comparator_grid(std::size_t dim, const std::vector<double>& norms,
                                   int directions_per_norm, Rng& rng);

/// The default grid: norms {0, 0.1, 1, 10, 100}, 5 directions each.
std::vector<Point> default_comparator_grid(std::size_t dim, Rng& rng);

struct DualityWitness {
  bool reward_side;  // Reward >= Psi(theta_T) - eps_hat on every trace
  bool regret_side;  // Regret(u) <= Psi*(u) + eps_hat on every trace and comparator
  /// The two sides agree, as the duality theorem requires.
  bool consistent() const { return reward_side == regret_side; }
  bool holds() const { return reward_side && regret_side; }
};

/// Psi is the radial potential at time T of each trace. Comparators are the
/// induced u = grad Psi(theta_T) of every trace plus the given grid.
DualityWitness duality_witness(const std::vector<Trace>& traces, const Potential& psi, double eps_hat,
                               const std::vector<Point>& comparators);

/// Psi*(u) for a radial potential at time T, via conjugate_numeric; +inf
/// where the conjugate is unbounded.
double potential_conjugate(const Potential& psi, int T, double u_norm);

}  // namespace mmo
