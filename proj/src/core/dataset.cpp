#include "clusel/core/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "clusel/error.hpp"
#include "clusel/simd/kernels.hpp"

namespace clusel {

Dataset::Dataset(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(Errc::EmptyDataset, "dataset needs at least one row and one column");
  }
  if (values_.size() != rows_ * cols_) {
    throw Error(Errc::InvalidArgument, "value count does not match rows x cols");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw Error(Errc::ParseError, "non-finite value", i / cols_ + 1, i % cols_);
    }
  }
}

Dataset Dataset::select_rows(std::span<const std::size_t> indices) const {
  std::vector<double> out;
  out.reserve(indices.size() * cols_);
  for (std::size_t i : indices) {
    const auto r = row(i);
    out.insert(out.end(), r.begin(), r.end());
  }
  return Dataset(indices.size(), cols_, std::move(out));
}

Partition::Partition(std::vector<int> raw_labels) : labels_(std::move(raw_labels)) {
  std::map<int, int> remap;
  for (int label : labels_) {
    if (label >= 0) remap.emplace(label, 0);
  }
  int next = 0;
  for (auto& [raw, id] : remap) id = next++;
  for (int& label : labels_) label = label >= 0 ? remap[label] : kNoise;
  k_ = remap.size();
}

std::size_t Partition::noise_count() const noexcept {
  return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), kNoise));
}

std::vector<std::vector<std::size_t>> Partition::members() const {
  std::vector<std::vector<std::size_t>> out(k_);
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] >= 0) out[static_cast<std::size_t>(labels_[i])].push_back(i);
  }
  return out;
}

std::vector<std::size_t> Partition::cluster_sizes() const {
  std::vector<std::size_t> out(k_, 0);
  for (int label : labels_) {
    if (label >= 0) ++out[static_cast<std::size_t>(label)];
  }
  return out;
}

bool same_grouping(const Partition& a, const Partition& b) {
  if (a.size() != b.size() || a.cluster_count() != b.cluster_count()) return false;
  std::map<int, int> forward;
  std::map<int, int> backward;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int x = a[i];
    const int y = b[i];
    if ((x < 0) != (y < 0)) return false;
    if (x < 0) continue;
    auto [fit, fnew] = forward.emplace(x, y);
    auto [bit, bnew] = backward.emplace(y, x);
    if (fit->second != y || bit->second != x) return false;
  }
  return true;
}

std::vector<double> column_means(const Dataset& data) {
  std::vector<double> mean(data.cols(), 0.0);
  for (std::size_t i = 0; i < data.rows(); ++i) {
    for (std::size_t j = 0; j < data.cols(); ++j) mean[j] += data(i, j);
  }
  for (double& v : mean) v /= static_cast<double>(data.rows());
  return mean;
}

std::vector<double> column_sample_stddev(const Dataset& data) {
  const auto mean = column_means(data);
  std::vector<double> ss(data.cols(), 0.0);
  for (std::size_t i = 0; i < data.rows(); ++i) {
    for (std::size_t j = 0; j < data.cols(); ++j) {
      const double d = data(i, j) - mean[j];
      ss[j] += d * d;
    }
  }
  const double denom = data.rows() > 1 ? static_cast<double>(data.rows() - 1) : 1.0;
  for (double& v : ss) v = std::sqrt(v / denom);
  return ss;
}

Dataset zscore(const Dataset& data) {
  const auto mean = column_means(data);
  const auto sd = column_sample_stddev(data);
  for (std::size_t j = 0; j < data.cols(); ++j) {
    if (!(sd[j] > 0.0)) {
      throw Error(Errc::ZeroVarianceColumn, "column " + std::to_string(j) + " is constant",
                  std::nullopt, j);
    }
  }
  std::vector<double> out(data.values().begin(), data.values().end());
  for (std::size_t i = 0; i < data.rows(); ++i) {
    for (std::size_t j = 0; j < data.cols(); ++j) {
      auto& v = out[i * data.cols() + j];
      v = (v - mean[j]) / sd[j];
    }
  }
  return Dataset(data.rows(), data.cols(), std::move(out));
}

DistanceMatrix pairwise_distances(const Dataset& data) {
  const std::size_t n = data.rows();
  const simd::ColumnBlock block(data);
  std::vector<double> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    simd::distances(data.row(i), block, 0, n, {entries.data() + i * n, n});
    entries[i * n + i] = 0.0;
  }
  return DistanceMatrix(n, std::move(entries));
}

void require_aligned(const Dataset& data, const Partition& part) {
  if (part.size() != data.rows()) {
    throw Error(Errc::LengthMismatch, "partition has " + std::to_string(part.size()) +
                                          " labels for " + std::to_string(data.rows()) +
                                          " rows");
  }
}

std::vector<ClusterStats> cluster_stats(const Dataset& data, const Partition& part) {
  require_aligned(data, part);
  const std::size_t m = data.cols();
  const auto groups = part.members();
  std::vector<ClusterStats> out;
  out.reserve(groups.size());
  for (std::size_t c = 0; c < groups.size(); ++c) {
    const auto& rows = groups[c];
    if (rows.empty()) {
      throw Error(Errc::EmptyCluster, "cluster " + std::to_string(c) + " has no members");
    }
    ClusterStats s;
    s.size = rows.size();
    s.centroid.assign(m, 0.0);
    for (std::size_t i : rows) {
      for (std::size_t j = 0; j < m; ++j) s.centroid[j] += data(i, j);
    }
    for (double& v : s.centroid) v /= static_cast<double>(rows.size());
    s.variance_vector.assign(m, 0.0);
    if (rows.size() > 1) {
      for (std::size_t i : rows) {
        for (std::size_t j = 0; j < m; ++j) {
          const double d = data(i, j) - s.centroid[j];
          s.variance_vector[j] += d * d;
        }
      }
      for (double& v : s.variance_vector) v /= static_cast<double>(rows.size() - 1);
    }
    double norm_sq = 0.0;
    for (double v : s.variance_vector) norm_sq += v * v;
    s.variance_norm = std::sqrt(norm_sq);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace clusel
