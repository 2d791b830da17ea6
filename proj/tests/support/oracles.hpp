#pragma once

// Reference implementations used only by tests. They favour the obvious
// formula over speed and share no code with the library beyond Dataset.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "clusel/core/dataset.hpp"

namespace oracle {

double euclid(std::span<const double> a, std::span<const double> b);

/// O(n^2) silhouette straight from the definition.
std::optional<double> naive_silhouette(const clusel::Dataset& data, const clusel::Partition& part);

struct DbcvOracle {
  std::vector<double> dsc;
  std::vector<double> dspc_matrix;  // k x k
};

/// Minimum spanning tree (edges ordered by weight, then endpoints) by
/// exhaustive Pruefer enumeration for clusters of at most 8 members, Kruskal
/// otherwise; separation by scanning every pair of internal nodes. Core distances are taken as given (one vector per cluster,
/// in member order).
DbcvOracle dbcv_oracle(const clusel::Dataset& data, const clusel::Partition& part,
                       const std::vector<std::vector<double>>& core);

/// Core distance from the textbook formula.
std::vector<double> naive_core_distances(const clusel::Dataset& members);

clusel::Dataset random_dataset(std::mt19937_64& rng, std::size_t n, std::size_t m);

/// Labels in [0, k) with every cluster of at least `min_size` members,
/// optionally with some noise rows.
clusel::Partition random_partition(std::mt19937_64& rng, std::size_t n, std::size_t k,
                                   std::size_t min_size, double noise_fraction = 0.0);

/// Shuffles rows and renames clusters; returns the permuted pair.
std::pair<clusel::Dataset, clusel::Partition> permute(std::mt19937_64& rng,
                                                      const clusel::Dataset& data,
                                                      const clusel::Partition& part);

clusel::Dataset scaled(const clusel::Dataset& data, double factor);

}  // namespace oracle
