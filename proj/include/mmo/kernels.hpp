#pragma once

// Dense double-precision vector kernels with a scalar reference
// implementation and SIMD variants selected at runtime.
//
// Reductions (dot, squared_norm) may differ from the scalar reference by
// summation-order rounding. Elementwise kernels (axpy, scale, sub) are
// bit-identical across backends.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace mmo::kernels {

enum class Backend { scalar, avx2, neon };

struct KernelTable {
  Backend backend;
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*squared_norm)(const double* a, std::size_t n);
  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // out[i] = alpha * x[i]
  void (*scale)(double alpha, const double* x, double* out, std::size_t n);
  // out[i] = a[i] - b[i]
  void (*sub)(const double* a, const double* b, double* out, std::size_t n);
};

std::string_view backend_name(Backend backend);

/// Backends compiled in and supported by the running CPU. Always contains
/// Backend::scalar.
std::vector<Backend> available_backends();

/// The table for a specific backend; throws std::invalid_argument if the
/// backend is unavailable on this machine.
const KernelTable& table(Backend backend);

/// Backend used by the dispatching functions below. Defaults to the widest
/// available backend; the MMO_KERNELS environment variable (scalar, avx2,
/// neon) overrides it at first use.
Backend active_backend();
void set_backend(Backend backend);

double dot(std::span<const double> a, std::span<const double> b);
double squared_norm(std::span<const double> a);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void scale(double alpha, std::span<const double> x, std::span<double> out);
void sub(std::span<const double> a, std::span<const double> b, std::span<double> out);

}  // namespace mmo::kernels
