#include "mmo/calculus.hpp"

#include <algorithm>
#include <cmath>

#include "mmo/error.hpp"
#include "mmo/scalar_function.hpp"

namespace mmo {

double finite_difference(const std::function<double(double)>& f, double x, int order) {
  const double h = 1e-5 * std::max(std::abs(x), 1.0);
  switch (order) {
    case 1:
      return (f(x + h) - f(x - h)) / (2.0 * h);
    case 2:
      return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    default:
      throw InvalidArgument("finite_difference order must be 1 or 2");
  }
}

double ScalarFunction::derivative(double x) const {
  return first ? first(x) : finite_difference(value, x, 1);
}

double ScalarFunction::second_derivative(double x) const {
  return second ? second(x) : finite_difference(value, x, 2);
}

}  // namespace mmo
