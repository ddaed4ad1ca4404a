#include <cmath>

#include <gtest/gtest.h>

#include "mmo/adversaries.hpp"
#include "mmo/error.hpp"
#include "support.hpp"

namespace mmo {
namespace {

TEST(Tags, RoundTrip) {
  for (auto kind : {AdversaryKind::orthogonal_minimax, AdversaryKind::parallel_minimax, AdversaryKind::rademacher_line,
                    AdversaryKind::gaussian_random, AdversaryKind::fixed_direction,
                    AdversaryKind::greedy_vs_comparator}) {
    EXPECT_EQ(parse_adversary_tag(adversary_tag(kind)), kind);
  }
  for (auto policy : {SignPolicy::grow, SignPolicy::shrink, SignPolicy::alternating, SignPolicy::random})
    EXPECT_EQ(parse_sign_policy(sign_policy_name(policy)), policy);
  EXPECT_FALSE(parse_adversary_tag("nope").has_value());
  EXPECT_FALSE(parse_sign_policy("sideways").has_value());
}

TEST(OrthogonalMinimax, Examples) {
  Rng rng(1);
  const Point g = orthogonal_minimax_grad(Point{1, 0}, 2.0, rng);
  EXPECT_EQ(g[0], 0.0);
  EXPECT_NEAR(norm(g), 2.0, 1e-12);
  EXPECT_NEAR(norm(orthogonal_minimax_grad(Point{0, 0}, 1.5, rng)), 1.5, 1e-12);
}

TEST(OrthogonalMinimax, NormGrowsLikeSqrtT) {
  Adversary adv({AdversaryKind::orthogonal_minimax, 0.7}, 3, Rng(9));
  Point theta = Point::zeros(3);
  for (int t = 1; t <= 500; ++t) {
    theta -= adv.next(theta, Point::zeros(3));
    ASSERT_NEAR(norm(theta), 0.7 * std::sqrt(t), 1e-9 * std::sqrt(t));
  }
}

TEST(ParallelMinimax, Examples) {
  Rng rng(2);
  const double G = 1.5;
  EXPECT_EQ(parallel_minimax_grad(Point{0, 3}, G, SignPolicy::shrink, 1, rng), (Point{0, G}));
  EXPECT_EQ(parallel_minimax_grad(Point{0, 3}, G, SignPolicy::grow, 1, rng), (Point{0, -G}));
  EXPECT_EQ(parallel_minimax_grad(Point{0, 0, 0}, G, SignPolicy::grow, 1, rng, Point{1, 0, 0}),
            (Point{G, 0, 0}));
  EXPECT_NEAR(norm(parallel_minimax_grad(Point{0, 0}, G, SignPolicy::grow, 1, rng)), G, 1e-12);
}

TEST(ParallelMinimax, AlternatingStaysBounded) {
  AdversaryParams params{AdversaryKind::parallel_minimax, 1.0};
  params.sign_policy = SignPolicy::alternating;
  Adversary adv(params, 2, Rng(3));
  Point theta = Point::zeros(2);
  for (int t = 1; t <= 200; ++t) {
    theta -= adv.next(theta, Point::zeros(2));
    ASSERT_LE(norm(theta), 2.0 + 1e-12);
    if (t % 2 == 0) ASSERT_LE(norm(theta), 1e-12);
  }
}

TEST(GreedyVsComparator, Examples) {
  EXPECT_EQ(greedy_vs_comparator_grad(Point{1, 0}, Point{0, 0}, 1.0), (Point{1, 0}));
  EXPECT_TRUE(greedy_vs_comparator_grad(Point{2, 3}, Point{2, 3}, 1.0).is_zero());
  testing::Gen gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Point w(gen.vector(4, 3.0)), u(gen.vector(4, 3.0));
    const double G = gen.uniform(0.1, 5);
    const Point g = greedy_vs_comparator_grad(w, u, G);
    ASSERT_NEAR(inner(g, w - u), G * norm(w - u), 1e-12 * (1 + G * norm(w - u)));
  }
}

TEST(Adversary, EveryKindRespectsTheGradientBound) {
  testing::Gen gen(6);
  for (auto kind : {AdversaryKind::orthogonal_minimax, AdversaryKind::parallel_minimax, AdversaryKind::rademacher_line,
                    AdversaryKind::gaussian_random, AdversaryKind::fixed_direction,
                    AdversaryKind::greedy_vs_comparator}) {
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t d = gen.integer(2, 6);
      AdversaryParams params{kind, gen.uniform(0.1, 4)};
      params.direction = Point(gen.vector(d));
      params.comparator = Point(gen.vector(d));
      params.sign_policy = static_cast<SignPolicy>(gen.integer(0, 3));
      Adversary adv(params, d, Rng(gen.u64()));
      Point theta = Point::zeros(d);
      for (int t = 0; t < 50; ++t) {
        const Point g = adv.next(theta, Point(gen.vector(d)));
        ASSERT_LE(norm(g), params.G * (1 + 1e-12)) << adversary_tag(kind);
        theta -= g;
      }
    }
  }
}

TEST(Adversary, FixedAndRademacherStayOnTheLine) {
  AdversaryParams fixed{AdversaryKind::fixed_direction, 2.0};
  fixed.direction = Point{0, 3};
  Adversary a(fixed, 2, Rng(0));
  EXPECT_EQ(a.next(Point{5, 5}, Point{1, 1}), (Point{0, 2}));
  Adversary r({AdversaryKind::rademacher_line, 1.0}, 2, Rng(0));
  for (int t = 0; t < 20; ++t) {
    const Point g = r.next(Point{0, 0}, Point{0, 0});
    EXPECT_EQ(g[1], 0.0);
    EXPECT_EQ(std::abs(g[0]), 1.0);
  }
}

TEST(Adversary, Validation) {
  EXPECT_THROW(Adversary({AdversaryKind::orthogonal_minimax, 1.0}, 1, Rng(0)), UnsupportedDimension);
  EXPECT_THROW(Adversary({AdversaryKind::fixed_direction, 0.0}, 2, Rng(0)), InvalidArgument);
  AdversaryParams zero_dir{AdversaryKind::fixed_direction, 1.0};
  zero_dir.direction = Point{0, 0};
  EXPECT_THROW(Adversary(zero_dir, 2, Rng(0)), InvalidArgument);
  AdversaryParams wrong_dim{AdversaryKind::greedy_vs_comparator, 1.0};
  wrong_dim.comparator = Point{1, 2, 3};
  EXPECT_THROW(Adversary(wrong_dim, 2, Rng(0)), InvalidArgument);
  Adversary ok({AdversaryKind::gaussian_random, 1.0}, 2, Rng(0));
  EXPECT_THROW(ok.next(Point{1, 2, 3}, Point{1, 2, 3}), InvalidArgument);
}

TEST(Adversary, SeededStreamsAreReproducible) {
  for (auto kind : {AdversaryKind::orthogonal_minimax, AdversaryKind::gaussian_random, AdversaryKind::rademacher_line}) {
    Adversary a({kind, 1.0}, 3, Rng(77)), b({kind, 1.0}, 3, Rng(77));
    Point theta = Point::zeros(3);
    for (int t = 0; t < 30; ++t) {
      const Point ga = a.next(theta, theta), gb = b.next(theta, theta);
      ASSERT_EQ(ga, gb);
      theta -= ga;
    }
  }
}

}  // namespace
}  // namespace mmo
