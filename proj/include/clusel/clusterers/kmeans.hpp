#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "clusel/core/dataset.hpp"

namespace clusel::clusterers {

struct KMeansConfig {
  std::size_t k = 2;
  std::size_t max_iters = 300;
  std::uint64_t seed = 0;
  std::size_t restarts = 10;
};

struct KMeansResult {
  Partition partition;
  std::vector<std::vector<double>> centroids;  // indexed by cluster id
  double wcss = 0.0;
  std::vector<double> wcss_history;  // winning run, one entry per Lloyd iteration
  std::size_t iterations = 0;
  bool converged = false;
};

/// Lloyd's algorithm from k-means++ seeds, best of `restarts` runs by within-
/// cluster sum of squares. A cluster left empty is re-seeded at the point
/// farthest from its own centroid, so the result always has exactly k
/// non-empty clusters. Throws KTooLarge when k > n.
KMeansResult kmeans_fit(const Dataset& data, const KMeansConfig& config);
Partition kmeans(const Dataset& data, const KMeansConfig& config);

double within_cluster_ss(const Dataset& data, const Partition& part);

}  // namespace clusel::clusterers
