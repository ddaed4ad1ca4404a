#pragma once

// Gradient generators. An adversary sees the state theta_t and the
// player's fresh play w_{t+1} before choosing g_{t+1}.

#include <cstddef>
#include <optional>
#include <string_view>

#include "mmo/point.hpp"
#include "mmo/rng.hpp"

namespace mmo {

enum class AdversaryKind {
  orthogonal_minimax,
  parallel_minimax,
  rademacher_line,
  gaussian_random,
  fixed_direction,
  greedy_vs_comparator,
};

/// grow plays g = -G theta_hat (theta_{t+1} = theta_t - g moves away from
/// 0), shrink plays +G theta_hat. alternating grows on odd rounds and
/// shrinks on even ones; random flips a fair coin.
enum class SignPolicy { grow, shrink, alternating, random };

std::string_view adversary_tag(AdversaryKind kind);
std::optional<AdversaryKind> parse_adversary_tag(std::string_view tag);
std::string_view sign_policy_name(SignPolicy policy);
std::optional<SignPolicy> parse_sign_policy(std::string_view name);

struct AdversaryParams {
  AdversaryKind kind = AdversaryKind::orthogonal_minimax;
  double G = 1.0;
  /// Line for rademacher_line and fixed_direction, and the fallback
  /// direction of parallel_minimax at theta = 0. Defaults to e_1.
  std::optional<Point> direction;
  /// u for greedy_vs_comparator; defaults to 0.
  std::optional<Point> comparator;
  SignPolicy sign_policy = SignPolicy::grow;

  /// Throws InvalidArgument on G <= 0, a zero direction, or dimension
  /// mismatch with dim.
  void validate(std::size_t dim) const;
};

/// G times a unit vector orthogonal to theta. Needs d >= 2.
Point orthogonal_minimax_grad(const Point& theta, double G, Rng& rng);

/// +-G theta_hat per the policy; G times zero_direction (or a random unit
/// vector if none is given) at theta = 0. round is 1-based.
Point parallel_minimax_grad(const Point& theta, double G, SignPolicy policy, int round, Rng& rng,
                            const std::optional<Point>& zero_direction = std::nullopt);

/// G (w - u)/||w - u||, or 0 when w = u.
Point greedy_vs_comparator_grad(const Point& w, const Point& u, double G);

class Adversary {
 public:
  Adversary(AdversaryParams params, std::size_t dim, Rng rng);

  const AdversaryParams& params() const { return params_; }
  std::string_view tag() const { return adversary_tag(params_.kind); }

  /// Gradient for the next round given the current state and the play.
  Point next(const Point& theta, const Point& w);

 private:
  AdversaryParams params_;
  std::size_t dim_;
  Rng rng_;
  Point line_;
  int round_ = 0;
};

}  // namespace mmo
