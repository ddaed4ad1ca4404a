#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "mmo/error.hpp"
#include "mmo/kernels.hpp"
#include "mmo/oracles.hpp"

namespace mmo {
namespace {

GaussHermiteRule build_rule(int n) {
  // Golub-Welsch eigenvalues seed the nodes; Newton on the orthonormal
  // recurrence then polishes each node and yields weights 2 / H'_n(x)^2 with
  // full relative accuracy in the tails.
  constexpr double kPiM4 = 0.7511255444649425;  // pi^{-1/4}
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(k / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Divergence("Gauss-Hermite eigenvalue solve failed");

  std::vector<double> x(n), w(n);
  for (int i = 0; i < n; ++i) {
    double z = solver.eigenvalues()[i];
    double pp = 0.0;
    for (int it = 0; it < 20; ++it) {
      double p1 = kPiM4;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1.0)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1.0)) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double step = p1 / pp;
      z -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    x[i] = z;
    w[i] = 2.0 / (pp * pp);
  }
  // Symmetrize so odd moments vanish exactly.
  for (int i = 0; i < n / 2; ++i) {
    const double node = 0.5 * (x[n - 1 - i] - x[i]);
    const double weight = 0.5 * (w[i] + w[n - 1 - i]);
    x[i] = -node;
    x[n - 1 - i] = node;
    w[i] = w[n - 1 - i] = weight;
  }
  if (n % 2 == 1) x[n / 2] = 0.0;
  return {std::move(x), std::move(w)};
}

double weighted_sum(const GaussHermiteRule& rule, const RealFunction& f, double mean, double spread,
                    double* abs_sum) {
  const std::size_t n = rule.nodes.size();
  std::vector<double> values(n), magnitudes(n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = f(mean + spread * rule.nodes[i]);
    magnitudes[i] = std::abs(values[i]);
  }
  if (abs_sum) *abs_sum = kernels::dot(rule.weights, magnitudes) / std::sqrt(std::numbers::pi);
  return kernels::dot(rule.weights, values) / std::sqrt(std::numbers::pi);
}

}  // namespace

const GaussHermiteRule& gauss_hermite_rule(int n) {
  if (n < 1 || n > 1024) throw InvalidArgument("Gauss-Hermite rule size must lie in [1, 1024]");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussHermiteRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussHermiteRule>(build_rule(n));
  return *slot;
}

double gauss_hermite_expectation(const RealFunction& f, double mean, double variance, int n) {
  if (!(variance > 0.0)) throw InvalidArgument("variance must be positive");
  return weighted_sum(gauss_hermite_rule(n), f, mean, std::sqrt(2.0 * variance), nullptr);
}

double gaussian_expectation(const RealFunction& f, double mean, double variance, int nodes,
                            const std::vector<double>& breakpoints) {
  if (!(variance > 0.0)) throw InvalidArgument("variance must be positive");
  if (nodes < 16 || nodes > 256) throw InvalidArgument("node count must lie in [16, 256]");
  const double sd = std::sqrt(variance);

  if (!breakpoints.empty()) {
    const double norm_const = 1.0 / (sd * std::sqrt(2.0 * std::numbers::pi));
    auto integrand = [&](double phi) {
      const double density = norm_const * std::exp(-0.5 * (phi / sd) * (phi / sd));
      return density == 0.0 ? 0.0 : f(mean + phi) * density;
    };
    std::vector<double> cuts;
    for (double k : breakpoints) cuts.push_back(k - mean);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    using Kronrod = boost::math::quadrature::gauss_kronrod<double, 61>;
    double total = 0.0;
    double lo = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i <= cuts.size(); ++i) {
      const double hi = i < cuts.size() ? cuts[i] : std::numeric_limits<double>::infinity();
      double error = 0.0;
      total += Kronrod::integrate(integrand, lo, hi, 20, 1e-13, &error);
      lo = hi;
    }
    return total;
  }

  const double spread = std::sqrt(2.0) * sd;
  double abs_sum = 0.0;
  double prev = weighted_sum(gauss_hermite_rule(nodes == 256 ? 128 : nodes), f, mean, spread, &abs_sum);
  for (int n = nodes == 256 ? 256 : 2 * nodes; n <= 256; n *= 2) {
    const double cur = weighted_sum(gauss_hermite_rule(n), f, mean, spread, &abs_sum);
    if (!std::isfinite(cur)) break;
    if (std::abs(cur - prev) <= 1e-8 * std::max(std::abs(cur), abs_sum * 1e-3)) return cur;
    prev = cur;
  }
  throw Divergence("Gauss-Hermite expectation did not stabilize by 256 nodes (mean " + std::to_string(mean) +
                   ", variance " + std::to_string(variance) + ")");
}

double monte_carlo_expectation(const RealFunction& f, double mean, double variance, std::size_t samples,
                               Rng& rng) {
  if (samples == 0) throw InvalidArgument("need at least one sample");
  const double sd = std::sqrt(variance);
  double sum = 0.0;
  for (std::size_t i = 0; i < samples; ++i) sum += f(mean + sd * rng.normal());
  return sum / static_cast<double>(samples);
}

double rademacher_smoothing_exact(const RealFunction& f, double x, int tau, double G) {
  if (tau < 0) throw InvalidArgument("tau must be nonnegative");
  if (tau > 30) throw ResourceLimit("exact Rademacher smoothing is limited to tau <= 30");
  std::vector<double> weights(tau + 1), values(tau + 1);
  double c = 1.0;
  const double scale = std::ldexp(1.0, -tau);
  for (int k = 0; k <= tau; ++k) {
    weights[k] = c * scale;
    values[k] = f(std::abs(x + (2.0 * k - tau) * G));
    c = c * (tau - k) / (k + 1.0);
  }
  return kernels::dot(weights, values);
}

}  // namespace mmo
