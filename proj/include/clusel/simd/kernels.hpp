#pragma once

// Distance kernels shared by every module. Each kernel exists as a scalar
// reference and as vector variants selected at runtime; all variants
// accumulate features in the same order without fused multiply-add, so they
// return bit-identical results.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace clusel {
class Dataset;
}

namespace clusel::simd {

/// Feature-major copy of a row-major block: feature f of row j lives at
/// data()[f * stride() + j]. Lane loads over consecutive rows are contiguous.
class ColumnBlock {
 public:
  ColumnBlock() = default;
  explicit ColumnBlock(const Dataset& data);
  ColumnBlock(std::span<const double> row_major, std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t stride() const noexcept { return rows_; }
  const double* data() const noexcept { return data_.data(); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

enum class Isa { Scalar, Avx2, Neon };

struct KernelTable {
  Isa isa;
  std::string_view name;
  // out[j - begin] = sum_f (query[f] - x_j[f])^2 for rows j in [begin, end).
  void (*squared_distances)(const double* query, const double* columns,
                            std::size_t stride, std::size_t cols,
                            std::size_t begin, std::size_t end, double* out);
  // As above, followed by a correctly rounded square root.
  void (*distances)(const double* query, const double* columns,
                    std::size_t stride, std::size_t cols, std::size_t begin,
                    std::size_t end, double* out);
  // Number of rows j in [begin, end) with sqrt(squared distance) <= radius.
  std::size_t (*count_within)(const double* query, const double* columns,
                              std::size_t stride, std::size_t cols,
                              std::size_t begin, std::size_t end, double radius);
};

const KernelTable& scalar_kernels() noexcept;

/// Vector variants compiled into this binary and supported by the running CPU.
std::vector<const KernelTable*> available_kernels();

/// The table used by the library. Picks the widest supported variant unless
/// the CLUSEL_SIMD environment variable names another ("scalar", "avx2",
/// "neon").
const KernelTable& active_kernels();

// Convenience wrappers over active_kernels().
void squared_distances(std::span<const double> query, const ColumnBlock& block,
                       std::size_t begin, std::size_t end, std::span<double> out);
void distances(std::span<const double> query, const ColumnBlock& block,
               std::size_t begin, std::size_t end, std::span<double> out);
std::size_t count_within(std::span<const double> query, const ColumnBlock& block,
                         double radius);

}  // namespace clusel::simd
