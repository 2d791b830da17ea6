#include <cmath>

#include "clusel/simd/kernels.hpp"
#include "kernels_impl.hpp"

namespace clusel::simd::detail {

void squared_distances_scalar(const double* query, const double* columns,
                              std::size_t stride, std::size_t cols,
                              std::size_t begin, std::size_t end, double* out) {
  for (std::size_t j = begin; j < end; ++j) {
    double acc = 0.0;
    for (std::size_t f = 0; f < cols; ++f) {
      const double d = query[f] - columns[f * stride + j];
      acc = acc + d * d;
    }
    out[j - begin] = acc;
  }
}

void distances_scalar(const double* query, const double* columns,
                      std::size_t stride, std::size_t cols, std::size_t begin,
                      std::size_t end, double* out) {
  squared_distances_scalar(query, columns, stride, cols, begin, end, out);
  for (std::size_t j = begin; j < end; ++j) out[j - begin] = std::sqrt(out[j - begin]);
}

std::size_t count_within_scalar(const double* query, const double* columns,
                                std::size_t stride, std::size_t cols,
                                std::size_t begin, std::size_t end, double radius) {
  std::size_t count = 0;
  for (std::size_t j = begin; j < end; ++j) {
    double acc = 0.0;
    for (std::size_t f = 0; f < cols; ++f) {
      const double d = query[f] - columns[f * stride + j];
      acc = acc + d * d;
    }
    if (std::sqrt(acc) <= radius) ++count;
  }
  return count;
}

const KernelTable kScalarKernels{Isa::Scalar, "scalar", &squared_distances_scalar,
                                 &distances_scalar, &count_within_scalar};

}  // namespace clusel::simd::detail
