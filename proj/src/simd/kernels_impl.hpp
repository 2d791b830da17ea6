#pragma once

#include "clusel/simd/kernels.hpp"

namespace clusel::simd::detail {

void squared_distances_scalar(const double* query, const double* columns,
                              std::size_t stride, std::size_t cols,
                              std::size_t begin, std::size_t end, double* out);
void distances_scalar(const double* query, const double* columns,
                      std::size_t stride, std::size_t cols, std::size_t begin,
                      std::size_t end, double* out);
std::size_t count_within_scalar(const double* query, const double* columns,
                                std::size_t stride, std::size_t cols,
                                std::size_t begin, std::size_t end, double radius);

extern const KernelTable kScalarKernels;
#if defined(CLUSEL_HAVE_AVX2_KERNELS)
extern const KernelTable kAvx2Kernels;
#endif
#if defined(CLUSEL_HAVE_NEON_KERNELS)
extern const KernelTable kNeonKernels;
#endif

}  // namespace clusel::simd::detail
