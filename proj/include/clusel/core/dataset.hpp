#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace clusel {

/// Dense row-major matrix of samples (rows) by features (columns).
/// Every entry is finite; rows() >= 1 and cols() >= 1.
class Dataset {
 public:
  Dataset(std::size_t rows, std::size_t cols, std::vector<double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::span<const double> row(std::size_t i) const noexcept {
    return {values_.data() + i * cols_, cols_};
  }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return values_[i * cols_ + j];
  }
  std::span<const double> values() const noexcept { return values_; }

  /// Rows selected by index, in the given order.
  Dataset select_rows(std::span<const std::size_t> indices) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> values_;
};

/// Per-sample cluster labels. Non-negative ids are clusters, -1 is noise.
/// Construction normalises ids to 0..k-1 in ascending order of the raw ids;
/// any negative raw label becomes noise.
class Partition {
 public:
  static constexpr int kNoise = -1;

  explicit Partition(std::vector<int> raw_labels);

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t cluster_count() const noexcept { return k_; }
  std::size_t noise_count() const noexcept;
  int operator[](std::size_t i) const noexcept { return labels_[i]; }
  const std::vector<int>& labels() const noexcept { return labels_; }

  /// Member row indices for each cluster, ascending.
  std::vector<std::vector<std::size_t>> members() const;
  std::vector<std::size_t> cluster_sizes() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> labels_;
  std::size_t k_ = 0;
};

/// True when both partitions group rows identically (ids may differ).
bool same_grouping(const Partition& a, const Partition& b);

struct ClusterStats {
  std::vector<double> centroid;
  std::vector<double> variance_vector;  // sample variance per feature
  double variance_norm = 0.0;
  std::size_t size = 0;
};

/// Symmetric n x n Euclidean distance matrix with zero diagonal.
class DistanceMatrix {
 public:
  DistanceMatrix(std::size_t n, std::vector<double> entries)
      : n_(n), entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * n_ + j];
  }
  std::span<const double> row(std::size_t i) const noexcept {
    return {entries_.data() + i * n_, n_};
  }

 private:
  std::size_t n_;
  std::vector<double> entries_;
};

/// Column means and sample standard deviations (divisor n-1; 0 when n == 1).
std::vector<double> column_means(const Dataset& data);
std::vector<double> column_sample_stddev(const Dataset& data);

/// Column-wise z-score with the sample standard deviation.
/// Throws ZeroVarianceColumn(column index) for constant columns.
Dataset zscore(const Dataset& data);

DistanceMatrix pairwise_distances(const Dataset& data);

/// One entry per non-noise cluster, indexed by cluster id. Noise is ignored.
std::vector<ClusterStats> cluster_stats(const Dataset& data, const Partition& part);

/// Throws LengthMismatch when the partition does not cover every row.
void require_aligned(const Dataset& data, const Partition& part);

}  // namespace clusel
