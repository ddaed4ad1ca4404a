#pragma once

#include "mmo/kernels.hpp"

namespace mmo::kernels::detail {

const KernelTable& scalar_table();

#if defined(__x86_64__) || defined(_M_X64)
#define MMO_HAVE_AVX2_KERNELS 1
const KernelTable& avx2_table();
#endif

#if defined(__aarch64__) || defined(_M_ARM64)
#define MMO_HAVE_NEON_KERNELS 1
const KernelTable& neon_table();
#endif

}  // namespace mmo::kernels::detail
