#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "mmo/error.hpp"
#include "mmo/oracles.hpp"
#include "mmo/scalar_search.hpp"

namespace mmo {
namespace {

// Piecewise-linear table of an even function on [0, range].
class RadialTable {
 public:
  RadialTable(double range, std::vector<double> values) : range_(range), values_(std::move(values)) {}

  double operator()(double x) const {
    x = std::abs(x);
    const std::size_t n = values_.size();
    const double pos = range_ > 0.0 ? x / range_ * static_cast<double>(n - 1) : 0.0;
    std::size_t i = static_cast<std::size_t>(std::min(pos, static_cast<double>(n - 2)));
    const double frac = pos - static_cast<double>(i);
    return values_[i] + frac * (values_[i + 1] - values_[i]);
  }

 private:
  double range_;
  std::vector<double> values_;
};

}  // namespace

double conditional_value_recursive(const RecursionSpec& spec, int t, double theta_norm) {
  if (spec.T < 1) throw InvalidArgument("recursion needs T >= 1");
  if (spec.T > 6) throw ResourceLimit("recursive game value is limited to T <= 6");
  if (spec.dim != 1 && spec.dim != 2) throw UnsupportedDimension("recursive game value supports d in {1, 2}");
  if (t < 0 || t > spec.T) throw InvalidArgument("round index outside [0, T]");
  if (!(spec.G > 0.0)) throw InvalidArgument("G must be positive");
  if (theta_norm < 0.0) throw InvalidArgument("state norm must be nonnegative");
  if (spec.n_r < 2 || spec.grid_n < 101) throw InvalidArgument("recursion grids too coarse");
  const double levels = static_cast<double>(std::max(spec.T - t - 1, 0));
  if (levels * static_cast<double>(spec.n_r) * static_cast<double>(spec.grid_n) > 2e7) {
    throw ResourceLimit("recursion grid exceeds the work budget");
  }

  const auto& f = spec.benchmark;
  if (t == spec.T) return f(theta_norm);

  auto state = [&](double r) {
    std::vector<double> c(spec.dim, 0.0);
    c[0] = r;
    return Point(std::move(c));
  };

  // next(x) is V_{s+1}; starts as the benchmark at s + 1 = T.
  std::shared_ptr<const RadialTable> table;
  auto next_value = [&]() -> ScalarFunction {
    if (!table) return f;
    auto tab = table;
    return ScalarFunction([tab](double x) { return (*tab)(x); });
  };

  for (int s = spec.T - 1; s > t; --s) {
    const double range = theta_norm + (s - t) * spec.G;
    const ScalarFunction h = next_value();
    std::vector<double> values(spec.n_r);
    for (std::size_t j = 0; j < spec.n_r; ++j) {
      const double x = range * static_cast<double>(j) / static_cast<double>(spec.n_r - 1);
      values[j] = solve_scalar_grid({h, state(x), spec.G}, spec.grid_n);
    }
    table = std::make_shared<const RadialTable>(range, std::move(values));
  }
  return solve_scalar_grid({next_value(), state(theta_norm), spec.G}, spec.grid_n);
}

double minimax_value_2d(const OneRoundSpec& spec, std::size_t n_angles) {
  if (spec.theta.dim() != 2) throw UnsupportedDimension("minimax_value_2d needs d = 2");
  const double top = norm(spec.theta) + spec.G;
  double max_slope = 0.0;
  for (int i = 0; i <= 200; ++i) max_slope = std::max(max_slope, std::abs(spec.h.derivative(top * i / 200.0)));
  const double L = max_slope > 0.0 ? 2.0 * max_slope : 1.0;
  const double tol = 1e-10 * std::max(L, 1.0);
  auto inner = [&](double w0) {
    return golden_section_minimize(
               [&](double w1) { return best_response_value(spec, Point{w0, w1}, n_angles); }, -L, L, tol, 200)
        .value;
  };
  return golden_section_minimize(inner, -L, L, tol, 200).value;
}

}  // namespace mmo
