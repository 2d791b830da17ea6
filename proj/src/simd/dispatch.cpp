#include <cstdlib>
#include <string_view>

#include "clusel/core/dataset.hpp"
#include "clusel/simd/kernels.hpp"
#include "kernels_impl.hpp"

namespace clusel::simd {

ColumnBlock::ColumnBlock(const Dataset& data)
    : ColumnBlock(data.values(), data.rows(), data.cols()) {}

ColumnBlock::ColumnBlock(std::span<const double> row_major, std::size_t rows,
                         std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t f = 0; f < cols; ++f) data_[f * rows + i] = row_major[i * cols + f];
  }
}

const KernelTable& scalar_kernels() noexcept { return detail::kScalarKernels; }

std::vector<const KernelTable*> available_kernels() {
  std::vector<const KernelTable*> out;
#if defined(CLUSEL_HAVE_AVX2_KERNELS)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) out.push_back(&detail::kAvx2Kernels);
#endif
#if defined(CLUSEL_HAVE_NEON_KERNELS)
  out.push_back(&detail::kNeonKernels);
#endif
  return out;
}

namespace {

const KernelTable& select_kernels() {
  const auto vector_variants = available_kernels();
  const char* env = std::getenv("CLUSEL_SIMD");
  if (env != nullptr) {
    const std::string_view wanted(env);
    if (wanted == "scalar") return scalar_kernels();
    for (const auto* table : vector_variants) {
      if (table->name == wanted) return *table;
    }
  }
  if (!vector_variants.empty()) return *vector_variants.front();
  return scalar_kernels();
}

}  // namespace

const KernelTable& active_kernels() {
  static const KernelTable& table = select_kernels();
  return table;
}

void squared_distances(std::span<const double> query, const ColumnBlock& block,
                       std::size_t begin, std::size_t end, std::span<double> out) {
  active_kernels().squared_distances(query.data(), block.data(), block.stride(),
                                     block.cols(), begin, end, out.data());
}

void distances(std::span<const double> query, const ColumnBlock& block,
               std::size_t begin, std::size_t end, std::span<double> out) {
  active_kernels().distances(query.data(), block.data(), block.stride(), block.cols(),
                             begin, end, out.data());
}

std::size_t count_within(std::span<const double> query, const ColumnBlock& block,
                         double radius) {
  return active_kernels().count_within(query.data(), block.data(), block.stride(),
                                       block.cols(), 0, block.rows(), radius);
}

}  // namespace clusel::simd
