#include <cmath>

#include <gtest/gtest.h>

#include "mmo/error.hpp"
#include "mmo/one_round.hpp"
#include "mmo/potentials.hpp"
#include "mmo/strategies.hpp"
#include "support.hpp"

namespace mmo {
namespace {

using testing::kPi;

void expect_points_near(const Point& a, const Point& b, double tol) {
  ASSERT_EQ(a.dim(), b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) EXPECT_NEAR(a[i], b[i], tol) << "coordinate " << i;
}

Point random_theta(testing::Gen& gen, std::size_t d, double scale) { return Point(gen.vector(d, scale)); }

TEST(ExpDifference, StableForLargeArguments) {
  EXPECT_NEAR(exp_difference(1.0, 0.0), std::exp(1.0) - 1.0, 1e-15);
  EXPECT_EQ(exp_difference(3.0, 3.0), 0.0);
  EXPECT_TRUE(std::isinf(exp_difference(800.0, 0.0)));
  EXPECT_NEAR(exp_difference(-700.0, -701.0) / std::exp(-700.0), 1.0 - std::exp(-1.0), 1e-12);
}

TEST(OgdPlay, Examples) {
  EXPECT_EQ(ogd_play(0.1, Point{2, 0}), (Point{0.2, 0}));
  EXPECT_TRUE(ogd_play(0.3, Point{0, 0, 0}).is_zero());
  const double T = 400, G = 2;
  const Point theta{1.5, -3};
  expect_points_near(ogd_play(1.0 / (G * std::sqrt(T)), theta), (1.0 / 40.0) * theta, 1e-16);
}

TEST(PowerPlay, Examples) {
  expect_points_near(power_play({1, 1, 1, 4}, 1, Point{1, 0}), Point{0.5, 0}, 1e-15);
  expect_points_near(power_play({0.25, 2, 1, 9}, 3, Point{2, -1}), Point{0.5, -0.25}, 1e-15);
  for (double p : {1.0, 1.3, 2.0}) EXPECT_TRUE(power_play({1, p, 1, 5}, 0, Point{0, 0}).is_zero());
  EXPECT_THROW(power_play({1, 1, 1, 4}, 4, Point{1, 0}), InvalidArgument);
}

TEST(PowerPlay, EqualsOrthogonalSolutionOfNextValue) {
  testing::Gen gen(41);
  for (int trial = 0; trial < 100; ++trial) {
    const PowerParams pp{gen.uniform(0.1, 3), gen.uniform(1, 2), gen.uniform(0.2, 3), gen.integer(2, 50)};
    const int t = gen.integer(0, pp.T - 1);
    const Point theta = random_theta(gen, 2, gen.uniform(0.1, 10));
    const PowerPotential pot(pp);
    const ScalarFunction h([&](double x) { return pot.value(t + 1, x); },
                           [&](double x) { return pot.derivative(t + 1, x); }, {});
    const auto sol = solve_orthogonal({h, theta, pp.G});
    expect_points_near(power_play(pp, t, theta), sol.player_play, 1e-12 * (1 + norm(sol.player_play)));
  }
}

TEST(PowerPlay, UnitBallForPEqualsOne) {
  testing::Gen gen(42);
  for (int trial = 0; trial < 300; ++trial) {
    const PowerParams pp{gen.uniform(0.1, 5), 1.0, gen.uniform(0.1, 3), gen.integer(1, 1000)};
    const Point theta = random_theta(gen, gen.integer(1, 6), gen.log_uniform(1e-6, 1e6));
    ASSERT_LE(norm(power_play(pp, gen.integer(0, pp.T - 1), theta)), pp.W + 1e-12);
  }
}

TEST(NormalKnownTPlay, Examples) {
  const NormalKnownTParams params{1, 2, 1, 2};
  EXPECT_TRUE(normal_knownT_play(params, 1, Point{0, 0}).is_zero());
  const Point w = normal_knownT_play(params, 1, Point{1, 0});
  EXPECT_NEAR(w[0], (std::exp(0.5) - 1.0) / 2.0, 1e-15);
  EXPECT_NEAR(w[0], 0.3244, 1e-4);
  EXPECT_EQ(w[1], 0.0);
  const Point w2 = normal_knownT_play({2, 2, 1, 2}, 1, Point{1, 0});
  EXPECT_NEAR(w2[0], 2.0 * w[0], 1e-15);
}

TEST(NormalKnownTPlay, EqualsParallelSolutionOfNextPotential) {
  testing::Gen gen(43);
  for (int trial = 0; trial < 100; ++trial) {
    const double G = gen.uniform(0.2, 2);
    const NormalKnownTParams params{gen.uniform(0.1, 3), kPi * G * G / 2.0 * gen.uniform(1.01, 5), G,
                                    gen.integer(1, 200)};
    const int t = gen.integer(0, params.T - 1);
    const Point theta = random_theta(gen, gen.integer(1, 4), gen.uniform(0, 2) * G * std::sqrt(params.T));
    const NormalKnownTPotential pot(params);
    const ScalarFunction h([&](double x) { return pot.value(t + 1, x); });
    const auto sol = solve_parallel({h, theta, G});
    expect_points_near(normal_knownT_play(params, t, theta), sol.player_play, 1e-9 * (1 + norm(sol.player_play)));
  }
}

TEST(AdaptiveNormalPlay, Examples) {
  const AdaptiveNormalParams params{1, 3, 1};
  EXPECT_TRUE(adaptive_normal_play(params, 0, Point{0, 0}).is_zero());
  // Independent evaluation of the displayed formula at t = 0, theta = (1, 0).
  const double l2 = std::log(2.0);
  const double expected = (std::exp(4.0 / 6.0) - 1.0) / (2.0 * l2 * l2);
  const Point w = adaptive_normal_play(params, 0, Point{1, 0});
  EXPECT_NEAR(w[0], expected, 1e-14);
  EXPECT_NEAR(w[0], 0.98629, 1e-5);
  EXPECT_EQ(w[1], 0.0);
}

TEST(AdaptiveNormalPlay, OddSymmetryAndParallelConsistency) {
  testing::Gen gen(44);
  for (int trial = 0; trial < 100; ++trial) {
    const double G = gen.uniform(0.2, 2);
    const AdaptiveNormalParams params{gen.uniform(0.1, 3), 3 * kPi * G * G / 4 * gen.uniform(1.01, 4), G};
    const int t = gen.integer(0, 5000);
    const Point theta = random_theta(gen, gen.integer(1, 5), gen.uniform(0, 3) * G * std::sqrt(t + 1.0));
    const Point w = adaptive_normal_play(params, t, theta);
    expect_points_near(adaptive_normal_play(params, t, -theta), -w, 0.0);
    const AdaptiveNormalPotential pot(params);
    const ScalarFunction h([&](double x) { return pot.value(t + 1, x); });
    expect_points_near(w, solve_parallel({h, theta, G}).player_play, 1e-9 * (1 + norm(w)));
  }
}

TEST(Play, OddSymmetryForEveryStrategy) {
  testing::Gen gen(45);
  const std::vector<StrategyParams> strategies{OgdParams{0.1, 1, std::nullopt}, PowerParams{1, 1.5, 1, 100},
                                               NormalKnownTParams{1, 2, 1, 100}, AdaptiveNormalParams{1, 3, 1}};
  for (const auto& s : strategies) {
    for (int trial = 0; trial < 50; ++trial) {
      const Point theta = random_theta(gen, 3, 5.0);
      const int t = gen.integer(0, 99);
      expect_points_near(play(s, t, -theta), -play(s, t, theta), 0.0);
    }
  }
}

TEST(Play, OverflowIsReported) {
  EXPECT_THROW(adaptive_normal_play({1, 3, 1}, 0, Point{1e3, 0}), Divergence);
}

TEST(Play, MinimaxFlag) {
  EXPECT_FALSE(play_is_minimax(PowerParams{1, 1.5, 1, 10}, 1));
  EXPECT_TRUE(play_is_minimax(PowerParams{1, 1.5, 1, 10}, 2));
  EXPECT_TRUE(play_is_minimax(PowerParams{1, 2, 1, 10}, 1));
  EXPECT_TRUE(play_is_minimax(AdaptiveNormalParams{}, 1));
  EXPECT_TRUE(play_is_minimax(OgdParams{}, 1));
}

}  // namespace
}  // namespace mmo
