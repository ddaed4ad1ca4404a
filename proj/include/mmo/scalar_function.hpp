#pragma once

#include <functional>
#include <utility>

namespace mmo {

/// A scalar function handle with optional analytic first and second
/// derivatives. Callers fall back to finite differences when a derivative
/// handle is empty.
struct ScalarFunction {
  std::function<double(double)> value;
  std::function<double(double)> first;
  std::function<double(double)> second;

  ScalarFunction() = default;
  ScalarFunction(std::function<double(double)> f) : value(std::move(f)) {}  // NOLINT
  ScalarFunction(std::function<double(double)> f, std::function<double(double)> d1,
                 std::function<double(double)> d2)
      : value(std::move(f)), first(std::move(d1)), second(std::move(d2)) {}

  double operator()(double x) const { return value(x); }
  double derivative(double x) const;
  double second_derivative(double x) const;
};

}  // namespace mmo
