#include "mmo/point.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mmo/error.hpp"
#include "mmo/kernels.hpp"

namespace mmo {
namespace {

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw InvalidArgument("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()));
  }
}

}  // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InvalidArgument("Point requires dim >= 1");
  check_finite();
}

Point::Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

Point Point::zeros(std::size_t dim) { return Point(std::vector<double>(dim, 0.0)); }

Point Point::basis(std::size_t dim, std::size_t axis, double scale) {
  if (axis >= dim) throw InvalidArgument("basis axis out of range");
  std::vector<double> c(dim, 0.0);
  c[axis] = scale;
  return Point(std::move(c));
}

bool Point::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](double x) { return x == 0.0; });
}

void Point::check_finite() const {
  for (double x : coords_) {
    if (!std::isfinite(x)) throw InvalidArgument("Point coordinates must be finite");
  }
}

Point& Point::operator+=(const Point& other) {
  require_same_dim(*this, other);
  kernels::axpy(1.0, other.coords_, coords_);
  check_finite();
  return *this;
}

Point& Point::operator-=(const Point& other) {
  require_same_dim(*this, other);
  kernels::sub(coords_, other.coords_, coords_);
  check_finite();
  return *this;
}

Point& Point::operator*=(double s) {
  kernels::scale(s, coords_, coords_);
  check_finite();
  return *this;
}

Point operator+(const Point& a, const Point& b) {
  Point out = a;
  out += b;
  return out;
}

Point operator-(const Point& a, const Point& b) {
  require_same_dim(a, b);
  Point out(std::vector<double>(a.dim()), Point::Unchecked{});
  kernels::sub(a.coords_, b.coords_, out.coords_);
  out.check_finite();
  return out;
}

Point operator-(const Point& a) { return -1.0 * a; }

Point operator*(double s, const Point& a) {
  Point out(std::vector<double>(a.dim()), Point::Unchecked{});
  kernels::scale(s, a.coords_, out.coords_);
  out.check_finite();
  return out;
}

double inner(const Point& a, const Point& b) {
  require_same_dim(a, b);
  return kernels::dot(a.coords(), b.coords());
}

double squared_norm(const Point& a) { return kernels::squared_norm(a.coords()); }

double norm(const Point& a) { return std::sqrt(squared_norm(a)); }

Point unit_direction(const Point& theta) {
  const double n = norm(theta);
  if (n == 0.0) return Point::zeros(theta.dim());
  return (1.0 / n) * theta;
}

Point random_unit_vector(std::size_t dim, Rng& rng) {
  for (;;) {
    std::vector<double> c(dim);
    for (double& x : c) x = rng.normal();
    Point v(std::move(c));
    const double n = norm(v);
    if (n > 1e-8) return (1.0 / n) * v;
  }
}

Point orthonormal_complement_sample(const Point& theta, Rng& rng) {
  if (theta.dim() < 2) {
    throw UnsupportedDimension("orthonormal complement needs dim >= 2, got " +
                               std::to_string(theta.dim()));
  }
  const double theta_norm = norm(theta);
  if (theta_norm == 0.0) return random_unit_vector(theta.dim(), rng);
  const Point axis = (1.0 / theta_norm) * theta;
  for (;;) {
    Point v = random_unit_vector(theta.dim(), rng);
    // Two Gram-Schmidt passes bring the residual component to rounding level.
    for (int pass = 0; pass < 2; ++pass) v -= inner(v, axis) * axis;
    const double n = norm(v);
    if (n < 1e-6) continue;
    v *= 1.0 / n;
    if (std::abs(inner(v, theta)) <= 1e-12 * theta_norm) return v;
  }
}

}  // namespace mmo
