// Compiled with -mavx2 only; callers reach it through the dispatch table after
// a CPU feature check.

#include <immintrin.h>

#include <cmath>

#include "kernels_impl.hpp"

namespace clusel::simd::detail {
namespace {

inline __m256d squared_lane(const double* query, const double* columns,
                            std::size_t stride, std::size_t cols, std::size_t j) {
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t f = 0; f < cols; ++f) {
    const __m256d q = _mm256_set1_pd(query[f]);
    const __m256d x = _mm256_loadu_pd(columns + f * stride + j);
    const __m256d d = _mm256_sub_pd(q, x);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
  }
  return acc;
}

void squared_distances_avx2(const double* query, const double* columns,
                            std::size_t stride, std::size_t cols, std::size_t begin,
                            std::size_t end, double* out) {
  std::size_t j = begin;
  for (; j + 4 <= end; j += 4) {
    _mm256_storeu_pd(out + (j - begin), squared_lane(query, columns, stride, cols, j));
  }
  squared_distances_scalar(query, columns, stride, cols, j, end, out + (j - begin));
}

void distances_avx2(const double* query, const double* columns, std::size_t stride,
                    std::size_t cols, std::size_t begin, std::size_t end, double* out) {
  std::size_t j = begin;
  for (; j + 4 <= end; j += 4) {
    const __m256d acc = squared_lane(query, columns, stride, cols, j);
    _mm256_storeu_pd(out + (j - begin), _mm256_sqrt_pd(acc));
  }
  distances_scalar(query, columns, stride, cols, j, end, out + (j - begin));
}

std::size_t count_within_avx2(const double* query, const double* columns,
                              std::size_t stride, std::size_t cols, std::size_t begin,
                              std::size_t end, double radius) {
  const __m256d r = _mm256_set1_pd(radius);
  std::size_t count = 0;
  std::size_t j = begin;
  for (; j + 4 <= end; j += 4) {
    const __m256d dist = _mm256_sqrt_pd(squared_lane(query, columns, stride, cols, j));
    const int mask = _mm256_movemask_pd(_mm256_cmp_pd(dist, r, _CMP_LE_OQ));
    count += static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(mask)));
  }
  return count + count_within_scalar(query, columns, stride, cols, j, end, radius);
}

}  // namespace

const KernelTable kAvx2Kernels{Isa::Avx2, "avx2", &squared_distances_avx2,
                               &distances_avx2, &count_within_avx2};

}  // namespace clusel::simd::detail
