#pragma once

#include <cstddef>
#include <vector>

#include "clusel/core/dataset.hpp"

namespace clusel {

/// A (dataset, partition) pair rewritten into an order that depends only on
/// the multiset of (point, cluster) pairs. Clusters are ranked by their sorted
/// member coordinates; rows are sorted by coordinates, then canonical cluster.
/// Every index evaluates on this form, so results are exactly invariant under
/// row permutation and cluster relabelling.
struct CanonicalForm {
  Dataset data;
  Partition partition;
  std::vector<std::size_t> original_row;  // original_row[canonical] = input row
  std::vector<int> cluster_rank;          // cluster_rank[input id] = canonical id
};

CanonicalForm canonicalize(const Dataset& data, const Partition& part);

/// Lexicographic comparison of two equal-length coordinate rows.
bool row_less(std::span<const double> a, std::span<const double> b) noexcept;

}  // namespace clusel
