#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "mmo/rng.hpp"

namespace mmo {

/// A vector in R^d: plays w, gradients g, cumulative state theta = -g_{1:t},
/// comparators u. Always non-empty with finite coordinates.
class Point {
 public:
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  static Point zeros(std::size_t dim);
  static Point basis(std::size_t dim, std::size_t axis, double scale = 1.0);

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }
  const std::vector<double>& values() const { return coords_; }

  bool is_zero() const;

  Point& operator+=(const Point& other);
  Point& operator-=(const Point& other);
  Point& operator*=(double s);

  friend bool operator==(const Point&, const Point&) = default;

 private:
  struct Unchecked {};
  Point(std::vector<double> coords, Unchecked) : coords_(std::move(coords)) {}
  void check_finite() const;

  std::vector<double> coords_;

  friend Point operator+(const Point& a, const Point& b);
  friend Point operator-(const Point& a, const Point& b);
  friend Point operator*(double s, const Point& a);
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator-(const Point& a);
Point operator*(double s, const Point& a);
inline Point operator*(const Point& a, double s) { return s * a; }

/// Sum_i a_i b_i. Throws InvalidArgument on dimension mismatch.
double inner(const Point& a, const Point& b);
double squared_norm(const Point& a);
double norm(const Point& a);

/// theta/||theta|| for nonzero theta, the zero vector otherwise.
Point unit_direction(const Point& theta);

/// A unit vector v with |<v, theta>| <= 1e-12 ||theta||, drawn from rng.
/// Any unit vector when theta = 0. Requires dim >= 2.
Point orthonormal_complement_sample(const Point& theta, Rng& rng);

/// Uniformly distributed unit vector in R^dim.
Point random_unit_vector(std::size_t dim, Rng& rng);

}  // namespace mmo
