#pragma once

#include <functional>

namespace mmo {

/// Central finite difference of order 1 or 2 with step
/// h = 1e-5 * max(|x|, 1); O(h^2) accurate.
double finite_difference(const std::function<double(double)>& f, double x, int order);

}  // namespace mmo
