// AArch64 variant; NEON is architecturally guaranteed there, so no runtime
// probe is needed beyond the build-time guard.

#include <arm_neon.h>

#include "kernels_impl.hpp"

namespace clusel::simd::detail {
namespace {

inline float64x2_t squared_lane(const double* query, const double* columns,
                                std::size_t stride, std::size_t cols, std::size_t j) {
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t f = 0; f < cols; ++f) {
    const float64x2_t q = vdupq_n_f64(query[f]);
    const float64x2_t x = vld1q_f64(columns + f * stride + j);
    const float64x2_t d = vsubq_f64(q, x);
    acc = vaddq_f64(acc, vmulq_f64(d, d));
  }
  return acc;
}

void squared_distances_neon(const double* query, const double* columns,
                            std::size_t stride, std::size_t cols, std::size_t begin,
                            std::size_t end, double* out) {
  std::size_t j = begin;
  for (; j + 2 <= end; j += 2) {
    vst1q_f64(out + (j - begin), squared_lane(query, columns, stride, cols, j));
  }
  squared_distances_scalar(query, columns, stride, cols, j, end, out + (j - begin));
}

void distances_neon(const double* query, const double* columns, std::size_t stride,
                    std::size_t cols, std::size_t begin, std::size_t end, double* out) {
  std::size_t j = begin;
  for (; j + 2 <= end; j += 2) {
    vst1q_f64(out + (j - begin), vsqrtq_f64(squared_lane(query, columns, stride, cols, j)));
  }
  distances_scalar(query, columns, stride, cols, j, end, out + (j - begin));
}

std::size_t count_within_neon(const double* query, const double* columns,
                              std::size_t stride, std::size_t cols, std::size_t begin,
                              std::size_t end, double radius) {
  const float64x2_t r = vdupq_n_f64(radius);
  std::size_t count = 0;
  std::size_t j = begin;
  for (; j + 2 <= end; j += 2) {
    const float64x2_t dist = vsqrtq_f64(squared_lane(query, columns, stride, cols, j));
    const uint64x2_t le = vcleq_f64(dist, r);
    count += (vgetq_lane_u64(le, 0) ? 1 : 0) + (vgetq_lane_u64(le, 1) ? 1 : 0);
  }
  return count + count_within_scalar(query, columns, stride, cols, j, end, radius);
}

}  // namespace

const KernelTable kNeonKernels{Isa::Neon, "neon", &squared_distances_neon,
                               &distances_neon, &count_within_neon};

}  // namespace clusel::simd::detail
