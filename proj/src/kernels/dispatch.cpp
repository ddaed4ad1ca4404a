#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels/kernels_internal.hpp"

namespace mmo::kernels {
namespace {

bool cpu_supports(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(MMO_HAVE_AVX2_KERNELS)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Backend::neon:
#if defined(MMO_HAVE_NEON_KERNELS)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table_unchecked(Backend backend) {
  switch (backend) {
#if defined(MMO_HAVE_AVX2_KERNELS)
    case Backend::avx2:
      return detail::avx2_table();
#endif
#if defined(MMO_HAVE_NEON_KERNELS)
    case Backend::neon:
      return detail::neon_table();
#endif
    default:
      return detail::scalar_table();
  }
}

const KernelTable* initial_table() {
  if (const char* env = std::getenv("MMO_KERNELS")) {
    const std::string requested(env);
    for (Backend b : available_backends()) {
      if (requested == backend_name(b)) return &table_unchecked(b);
    }
  }
  return &table_unchecked(available_backends().back());
}

std::atomic<const KernelTable*>& active() {
  static std::atomic<const KernelTable*> current{initial_table()};
  return current;
}

const KernelTable& current() { return *active().load(std::memory_order_relaxed); }

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("kernel operands differ in length");
}

}  // namespace

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
    case Backend::neon:
      return "neon";
  }
  return "unknown";
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out{Backend::scalar};
  for (Backend b : {Backend::avx2, Backend::neon}) {
    if (cpu_supports(b)) out.push_back(b);
  }
  return out;
}

const KernelTable& table(Backend backend) {
  if (!cpu_supports(backend)) {
    throw std::invalid_argument("kernel backend unavailable: " + std::string(backend_name(backend)));
  }
  return table_unchecked(backend);
}

Backend active_backend() { return current().backend; }

void set_backend(Backend backend) { active().store(&table(backend), std::memory_order_relaxed); }

double dot(std::span<const double> a, std::span<const double> b) {
  require_same_size(a.size(), b.size());
  return current().dot(a.data(), b.data(), a.size());
}

double squared_norm(std::span<const double> a) { return current().squared_norm(a.data(), a.size()); }

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  require_same_size(x.size(), y.size());
  current().axpy(alpha, x.data(), y.data(), x.size());
}

void scale(double alpha, std::span<const double> x, std::span<double> out) {
  require_same_size(x.size(), out.size());
  current().scale(alpha, x.data(), out.data(), x.size());
}

void sub(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  require_same_size(a.size(), b.size());
  require_same_size(a.size(), out.size());
  current().sub(a.data(), b.data(), out.data(), a.size());
}

}  // namespace mmo::kernels
