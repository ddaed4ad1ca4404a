#include <array>
#include <cmath>

#include <gtest/gtest.h>

#include "mmo/engine.hpp"
#include "mmo/error.hpp"
#include "mmo/strategies.hpp"
#include "support.hpp"

namespace mmo {
namespace {

using testing::kPi;

GameConfig config(std::size_t dim, double G, std::uint64_t seed, std::optional<int> horizon = std::nullopt) {
  GameConfig c;
  c.dim = dim;
  c.grad_bound = G;
  c.seed = seed;
  c.horizon = horizon;
  return c;
}

bool same_trace(const Trace& a, const Trace& b) {
  if (a.rounds.size() != b.rounds.size()) return false;
  for (std::size_t i = 0; i < a.rounds.size(); ++i) {
    const auto& x = a.rounds[i];
    const auto& y = b.rounds[i];
    if (x.t != y.t || !(x.w == y.w) || !(x.g == y.g) || !(x.theta == y.theta) || x.loss != y.loss || x.eps != y.eps)
      return false;
  }
  return true;
}

std::vector<AdversaryParams> adversary_pool(double G) {
  AdversaryParams greedy{AdversaryKind::greedy_vs_comparator, G};
  greedy.comparator = Point{3, -1};
  AdversaryParams alt{AdversaryKind::parallel_minimax, G};
  alt.sign_policy = SignPolicy::alternating;
  return {{AdversaryKind::orthogonal_minimax, G}, {AdversaryKind::parallel_minimax, G}, alt,
          {AdversaryKind::rademacher_line, G},    {AdversaryKind::gaussian_random, G},  greedy};
}

TEST(RunGame, OgdAgainstFixedDirection) {
  const double eta = 0.25;
  const int T = 12;
  AdversaryParams fixed{AdversaryKind::fixed_direction, 1.0};
  fixed.direction = Point{1, 0};
  const Trace trace = run_game(OgdParams{eta, 1.0, std::nullopt}, fixed, config(2, 1.0, 0), T);
  ASSERT_EQ(trace.length(), T);
  EXPECT_EQ(trace.rounds.back().w, (Point{-eta * (T - 1), 0}));
  EXPECT_NEAR(regret(trace, Point{0, 0}), -eta * T * (T - 1) / 2.0, 1e-12);
  EXPECT_EQ(trace.final_theta(), (Point{-12, 0}));
  EXPECT_FALSE(trace.rounds.front().eps.has_value());
}

TEST(RunGame, EmptyTrace) {
  const Trace trace = run_game(AdaptiveNormalParams{}, {AdversaryKind::gaussian_random, 1.0}, config(3, 1, 0), 0);
  EXPECT_EQ(trace.length(), 0);
  EXPECT_EQ(reward(trace), 0.0);
  EXPECT_TRUE(trace.final_theta().is_zero());
  EXPECT_EQ(regret(trace, Point{1, 2, 3}), 0.0);
}

TEST(RunGame, PowerOneOrthogonalDuel) {
  const Trace trace =
      run_game(PowerParams{1, 1, 1, 16}, {AdversaryKind::orthogonal_minimax, 1.0}, config(2, 1, 5), 16);
  EXPECT_NEAR(reward(trace), 0.0, 1e-12 * 17);
  EXPECT_NEAR(norm(trace.final_theta()), 4.0, 1e-12);
}

TEST(RunGame, Preconditions) {
  EXPECT_THROW(run_game(PowerParams{1, 2, 1, 10}, {AdversaryKind::gaussian_random, 1}, config(2, 1, 0), 9),
               InvalidArgument);
  EXPECT_THROW(run_game(OgdParams{}, {AdversaryKind::gaussian_random, 1}, config(2, 1, 0, 5), 6), InvalidArgument);
  EXPECT_THROW(run_game(OgdParams{}, {AdversaryKind::gaussian_random, 2}, config(2, 1, 0), 6), InvalidArgument);
  EXPECT_THROW(run_game(OgdParams{}, {AdversaryKind::orthogonal_minimax, 1}, config(1, 1, 0), 6),
               UnsupportedDimension);
  AdversaryParams wrong{AdversaryKind::fixed_direction, 1};
  wrong.direction = Point{1, 0, 0};
  EXPECT_THROW(run_game(OgdParams{}, wrong, config(2, 1, 0), 6), InvalidArgument);
  EXPECT_THROW(run_game(AdaptiveNormalParams{1, 1, 1}, {AdversaryKind::gaussian_random, 1}, config(2, 1, 0), 6),
               InvalidArgument);
}

TEST(RunGame, Deterministic) {
  for (const auto& adv : adversary_pool(1.0)) {
    const auto a = run_game(AdaptiveNormalParams{1, 3, 1}, adv, config(2, 1, 99), 200);
    const auto b = run_game(AdaptiveNormalParams{1, 3, 1}, adv, config(2, 1, 99), 200);
    EXPECT_TRUE(same_trace(a, b)) << adversary_tag(adv.kind);
  }
  const auto c = run_game(AdaptiveNormalParams{1, 3, 1}, {AdversaryKind::gaussian_random, 1}, config(2, 1, 1), 50);
  const auto d = run_game(AdaptiveNormalParams{1, 3, 1}, {AdversaryKind::gaussian_random, 1}, config(2, 1, 2), 50);
  EXPECT_FALSE(same_trace(c, d));
}

TEST(Regret, Examples) {
  Trace one{config(2, 1, 0), "manual", "manual", {}};
  one.rounds.push_back({1, Point{1, 0}, Point{1, 0}, Point{-1, 0}, 1.0, std::nullopt});
  EXPECT_EQ(regret(one, Point{0, 0}), 1.0);
  EXPECT_EQ(reward(one), -1.0);
  EXPECT_THROW(regret(one, Point{0, 0, 0}), InvalidArgument);
}

TEST(Regret, IdentityOnRandomTraces) {
  testing::Gen gen(51);
  const std::vector<StrategyParams> strategies{OgdParams{0.05, 1, std::nullopt}, PowerParams{0.1, 1.5, 1, 300},
                                               NormalKnownTParams{1, 2, 1, 300}, AdaptiveNormalParams{1, 3, 1}};
  for (const auto& s : strategies) {
    for (const auto& adv : adversary_pool(1.0)) {
      const Trace trace = run_game(s, adv, config(2, 1, gen.u64()), 300);
      const double rew = reward(trace);
      const Point gsum = trace.grad_sum();
      // Exponential potentials reach |Reward| ~ 1e30 here; the summation
      // error of T terms then dominates any absolute tolerance.
      double loss_mass = 0.0;
      for (const auto& r : trace.rounds) loss_mass += std::abs(r.loss);
      const double rounding = 1e-13 * loss_mass;
      for (int k = 0; k < 20; ++k) {
        const Point u(gen.vector(2, gen.log_uniform(0.01, 100)));
        ASSERT_LE(std::abs(regret(trace, u) + rew + inner(gsum, u)), 1e-9 * (1 + 300) + rounding)
            << trace.strategy_tag << " vs " << trace.adversary_tag << " rew=" << rew;
      }
      // Along theta_T the regret is affine in the scale with slope ||theta_T||.
      const Point dir = unit_direction(trace.final_theta());
      const double r0 = regret(trace, Point{0, 0});
      const double slope = regret(trace, dir) - r0;
      ASSERT_NEAR(slope, norm(trace.final_theta()), 1e-9 * 300 + rounding);
      ASSERT_NEAR(regret(trace, 7.0 * dir), r0 + 7.0 * slope, 1e-9 * 300 * 7 + 8 * rounding);
    }
  }
}

TEST(Ledger, ZeroPotentialGivesLosses) {
  const Trace trace = run_game(OgdParams{0.1, 1, std::nullopt}, {AdversaryKind::gaussian_random, 1}, config(3, 1, 4), 40);
  const auto eps = epsilon_ledger(trace, ZeroPotential{});
  for (std::size_t i = 0; i < eps.size(); ++i) EXPECT_EQ(eps[i], trace.rounds[i].loss);
}

TEST(Ledger, Telescopes) {
  testing::Gen gen(52);
  const int T = 250;
  const std::vector<StrategyParams> strategies{PowerParams{0.3, 1.3, 1, T}, PowerParams{0.1, 2, 1, T},
                                               NormalKnownTParams{0.5, 2.2, 1, T}, AdaptiveNormalParams{1, 3, 1},
                                               OgdParams{0.05, 1, T}};
  for (const auto& s : strategies) {
    for (const auto& adv : adversary_pool(1.0)) {
      const Trace trace = run_game(s, adv, config(2, 1, gen.u64()), T);
      const Potential pot = *potential_for(s);
      double sum = 0.0;
      for (const auto& r : trace.rounds) sum += *r.eps;
      const double qT = potential_value(pot, T, norm(trace.final_theta())) - ledger_baseline(pot);
      ASSERT_NEAR(qT - sum, reward(trace), 1e-9 * T * (1 + std::abs(qT))) << strategy_tag(s) << " " << adversary_tag(adv.kind);
    }
  }
}

TEST(Ledger, QuadraticIsExactAgainstUnitNormGradients) {
  // For the p = 2 potential every unit-norm gradient leaves zero slack, so
  // Reward = B(theta_T) - f(G sqrt T).
  const int T = 300;
  const PowerParams pp{0.2, 2, 1.5, T};
  for (const auto& adv : adversary_pool(1.5)) {
    if (adv.kind == AdversaryKind::greedy_vs_comparator) continue;
    const Trace trace = run_game(pp, adv, config(2, 1.5, 8), T);
    const PowerPotential pot(pp);
    const double expected = pot.value(T, norm(trace.final_theta())) - pot.value(0, 0.0);
    EXPECT_NEAR(reward(trace), expected, 1e-9 * T) << adversary_tag(adv.kind);
  }
}

TEST(Ledger, MinimaxDuelReproducesGameValue) {
  for (double p : {1.0, 1.25, 1.5, 1.75, 2.0}) {
    const int T = 400;
    const PowerParams pp{1, p, 1, T};
    const Trace trace = run_game(pp, {AdversaryKind::orthogonal_minimax, 1}, config(3, 1, 3), T);
    const PowerPotential pot(pp);
    const double expected = pot.value(T, norm(trace.final_theta())) - pot.value(0, 0.0);
    EXPECT_NEAR(reward(trace), expected, 1e-9 * T) << "p=" << p;
    for (const auto& r : trace.rounds) ASSERT_NEAR(*r.eps, 0.0, 1e-9);
  }
}

TEST(Ledger, KnownHorizonNormalIsAdmissible) {
  const int T = 200;
  const NormalKnownTParams params{1, kPi / 2 + 0.5, 1, T};
  for (const auto& adv : adversary_pool(1.0)) {
    const Trace trace = run_game(params, adv, config(2, 1, 17), T);
    for (const auto& r : trace.rounds) ASSERT_LE(*r.eps, 1e-8) << adversary_tag(adv.kind) << " t=" << r.t;
  }
}

TEST(Ledger, AdaptiveNormalPerRoundSlack) {
  const int T = 1000;
  const AdaptiveNormalParams params{1, 3, 1};
  const AdaptiveNormalPotential pot(params);
  for (const auto& adv : adversary_pool(1.0)) {
    const Trace trace = run_game(params, adv, config(2, 1, 23), T);
    // Ledger entry t + 1 is the slack of the step from round t.
    for (int t = 1; t < T; ++t) {
      const double cap = kPi * pot.beta(t) / (4.0 * params.a * t) + 1e-8;
      ASSERT_LE(*trace.rounds[t].eps, cap) << adversary_tag(adv.kind) << " t=" << t;
    }
  }
}

TEST(VerifyBound, Examples) {
  const int T = 1000;
  const double a = 3 * kPi / 4 + 0.1;
  const Trace trace = run_game(AdaptiveNormalParams{1, a, 1}, {AdversaryKind::orthogonal_minimax, 1}, config(2, 1, 1), T);
  const auto rep = verify_bound(trace, AdaptiveNormalParams{1, a, 1}, {Point{0, 0}});
  ASSERT_EQ(rep.size(), 1u);
  EXPECT_NEAR(rep[0].regret_bound, kPi / a - 1.0, 1e-14);
  EXPECT_TRUE(rep[0].holds);
  EXPECT_DOUBLE_EQ(rep[0].slack, rep[0].regret_bound - rep[0].regret_actual);

  const int T2 = 100;
  const PowerParams pp{1.0 / std::sqrt(T2), 2, 1, T2};
  const Trace t2 = run_game(pp, {AdversaryKind::gaussian_random, 1}, config(2, 1, 1), T2);
  EXPECT_NEAR(verify_bound(t2, pp, {Point{0, 0}})[0].regret_bound, 0.5 * std::sqrt(T2), 1e-12);

  const PowerParams p1{1, 1, 1, T2};
  const Trace t3 = run_game(p1, {AdversaryKind::gaussian_random, 1}, config(2, 1, 1), T2);
  const auto vac = verify_bound(t3, p1, {Point{2, 0}});
  EXPECT_TRUE(vac[0].vacuous);
  EXPECT_TRUE(std::isinf(vac[0].regret_bound));
  EXPECT_THROW(verify_bound(Trace{config(2, 1, 0), "", "", {}}, p1, {Point{0, 0}}), InvalidArgument);
}

TEST(VerifyBound, HoldsAcrossSeedsAndComparators) {
  const int T = 300;
  const std::vector<StrategyParams> strategies{PowerParams{1.0 / std::sqrt(T), 2, 1, T}, PowerParams{1, 1, 1, T},
                                               NormalKnownTParams{1, kPi / 2 + 0.5, 1, T}};
  for (const auto& s : strategies) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      for (const auto& adv : adversary_pool(1.0)) {
        const Trace trace = run_game(s, adv, config(2, 1, seed), T);
        Rng rng(seed, 7);
        for (const auto& rep : verify_bound(trace, s, default_comparator_grid(2, rng)))
          ASSERT_TRUE(rep.holds) << strategy_tag(s) << " " << adversary_tag(adv.kind) << " |u|=" << norm(rep.u);
      }
    }
  }
}

TEST(ComparatorGrid, Shape) {
  Rng rng(0);
  const auto grid = default_comparator_grid(3, rng);
  ASSERT_EQ(grid.size(), 21u);
  EXPECT_TRUE(grid[0].is_zero());
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double expected = std::array<double, 4>{0.1, 1, 10, 100}[(i - 1) / 5];
    EXPECT_NEAR(norm(grid[i]), expected, 1e-12 * expected);
  }
  EXPECT_THROW(comparator_grid(2, {-1.0}, 1, rng), InvalidArgument);
}

TEST(Duality, ZeroPotential) {
  Rng rng(1);
  const Trace trace = run_game(OgdParams{0.1, 1, std::nullopt}, {AdversaryKind::orthogonal_minimax, 1}, config(2, 1, 0), 20);
  const auto w = duality_witness({trace}, ZeroPotential{}, 0.0, {Point{0, 0}});
  EXPECT_TRUE(w.consistent());
  EXPECT_EQ(potential_conjugate(ZeroPotential{}, 5, 0.0), 0.0);
  EXPECT_TRUE(std::isinf(potential_conjugate(ZeroPotential{}, 5, 1.0)));
}

TEST(Duality, AdaptiveNormalTracesWithLedgerSlack) {
  const int T = 500;
  const AdaptiveNormalParams params{1, 3, 1};
  std::vector<Trace> traces;
  double eps_hat = 0.0;
  for (const auto& adv : adversary_pool(1.0)) {
    traces.push_back(run_game(params, adv, config(2, 1, 31), T));
    double s = 0.0;
    for (const auto& r : traces.back().rounds) s += *r.eps;
    eps_hat = std::max(eps_hat, s);
  }
  Rng rng(2);
  const auto w = duality_witness(traces, AdaptiveNormalPotential(params), eps_hat, default_comparator_grid(2, rng));
  EXPECT_TRUE(w.reward_side);
  EXPECT_TRUE(w.regret_side);
  EXPECT_TRUE(w.consistent());
}

TEST(Duality, CounterexampleFailsBothSides) {
  // A player that bets heavily into every gradient loses reward, and the
  // induced comparator exposes the regret.
  Trace bad{config(2, 1, 0), "manual", "manual", {}};
  Point theta{0, 0};
  for (int t = 1; t <= 10; ++t) {
    const Point w{5, 0}, g{1, 0};
    theta -= g;
    bad.rounds.push_back({t, w, g, theta, inner(w, g), std::nullopt});
  }
  Rng rng(3);
  const auto w =
      duality_witness({bad}, AdaptiveNormalPotential({1, 3, 1}), 0.0, default_comparator_grid(2, rng));
  EXPECT_FALSE(w.reward_side);
  EXPECT_FALSE(w.regret_side);
  EXPECT_TRUE(w.consistent());
}

TEST(Duality, PotentialConjugateMatchesClosedForm) {
  // Power potential at T: (W/p) x^p has conjugate u^q / (q W^{q-1}).
  const PowerPotential pot({2.0, 1.5, 1, 10});
  for (double u : {0.0, 0.5, 3.0}) {
    const double expected = std::pow(u, 3.0) / (3.0 * std::pow(2.0, 2.0));
    EXPECT_NEAR(potential_conjugate(pot, 10, u), expected, 1e-8 * (1 + expected));
  }
  EXPECT_TRUE(std::isinf(potential_conjugate(PowerPotential({1, 1, 1, 10}), 10, 2.0)));
}

}  // namespace
}  // namespace mmo
