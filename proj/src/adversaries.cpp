#include "mmo/adversaries.hpp"

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "mmo/error.hpp"

namespace mmo {
namespace {

constexpr std::array<std::pair<AdversaryKind, std::string_view>, 6> kTags{{
    {AdversaryKind::orthogonal_minimax, "orthogonal_minimax"},
    {AdversaryKind::parallel_minimax, "parallel_minimax"},
    {AdversaryKind::rademacher_line, "rademacher_line"},
    {AdversaryKind::gaussian_random, "gaussian_random"},
    {AdversaryKind::fixed_direction, "fixed_direction"},
    {AdversaryKind::greedy_vs_comparator, "greedy_vs_comparator"},
}};

constexpr std::array<std::pair<SignPolicy, std::string_view>, 4> kPolicies{{
    {SignPolicy::grow, "grow"},
    {SignPolicy::shrink, "shrink"},
    {SignPolicy::alternating, "alternating"},
    {SignPolicy::random, "random"},
}};

}  // namespace

std::string_view adversary_tag(AdversaryKind kind) {
  for (const auto& [k, name] : kTags) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<AdversaryKind> parse_adversary_tag(std::string_view tag) {
  for (const auto& [k, name] : kTags) {
    if (name == tag) return k;
  }
  return std::nullopt;
}

std::string_view sign_policy_name(SignPolicy policy) {
  for (const auto& [p, name] : kPolicies) {
    if (p == policy) return name;
  }
  return "unknown";
}

std::optional<SignPolicy> parse_sign_policy(std::string_view name) {
  for (const auto& [p, n] : kPolicies) {
    if (n == name) return p;
  }
  return std::nullopt;
}

void AdversaryParams::validate(std::size_t dim) const {
  if (!(G > 0.0) || !std::isfinite(G)) throw InvalidArgument("adversary G must be a positive finite number");
  if (direction) {
    if (direction->dim() != dim) throw InvalidArgument("adversary direction has the wrong dimension");
    if (direction->is_zero()) throw InvalidArgument("adversary direction must be nonzero");
  }
  if (comparator && comparator->dim() != dim) throw InvalidArgument("adversary comparator has the wrong dimension");
  if (kind == AdversaryKind::orthogonal_minimax && dim < 2) {
    throw UnsupportedDimension("orthogonal_minimax needs d >= 2");
  }
}

Point orthogonal_minimax_grad(const Point& theta, double G, Rng& rng) {
  return G * orthonormal_complement_sample(theta, rng);
}

Point parallel_minimax_grad(const Point& theta, double G, SignPolicy policy, int round, Rng& rng,
                            const std::optional<Point>& zero_direction) {
  if (theta.is_zero()) {
    return G * (zero_direction ? unit_direction(*zero_direction) : random_unit_vector(theta.dim(), rng));
  }
  bool grow = true;
  switch (policy) {
    case SignPolicy::grow:
      grow = true;
      break;
    case SignPolicy::shrink:
      grow = false;
      break;
    case SignPolicy::alternating:
      grow = round % 2 == 1;
      break;
    case SignPolicy::random:
      grow = rng.coin();
      break;
  }
  return (grow ? -G : G) * unit_direction(theta);
}

Point greedy_vs_comparator_grad(const Point& w, const Point& u, double G) {
  const Point diff = w - u;
  if (diff.is_zero()) return Point::zeros(w.dim());
  return G * unit_direction(diff);
}

Adversary::Adversary(AdversaryParams params, std::size_t dim, Rng rng)
    : params_(std::move(params)), dim_(dim), rng_(std::move(rng)), line_(Point::basis(dim, 0)) {
  params_.validate(dim_);
  if (params_.direction) line_ = unit_direction(*params_.direction);
}

Point Adversary::next(const Point& theta, const Point& w) {
  if (theta.dim() != dim_ || w.dim() != dim_) throw InvalidArgument("adversary received a point of the wrong dimension");
  ++round_;
  const double G = params_.G;
  switch (params_.kind) {
    case AdversaryKind::orthogonal_minimax:
      return orthogonal_minimax_grad(theta, G, rng_);
    case AdversaryKind::parallel_minimax:
      return parallel_minimax_grad(theta, G, params_.sign_policy, round_, rng_, line_);
    case AdversaryKind::rademacher_line:
      return (rng_.coin() ? G : -G) * line_;
    case AdversaryKind::gaussian_random:
      return G * random_unit_vector(dim_, rng_);
    case AdversaryKind::fixed_direction:
      return G * line_;
    case AdversaryKind::greedy_vs_comparator:
      return greedy_vs_comparator_grad(w, params_.comparator.value_or(Point::zeros(dim_)), G);
  }
  throw InvalidArgument("unknown adversary kind");
}

}  // namespace mmo
