#pragma once

#include <cstddef>

#include "clusel/core/dataset.hpp"

namespace clusel::clusterers {

struct DbscanConfig {
  double eps = 0.1;
  std::size_t min_pts = 2;  // the point itself counts
};

/// Density-based clustering; rows reachable from no core point are noise.
/// Rows are scanned in lexicographic coordinate order and cluster ids follow
/// first touch in that order, so the grouping does not depend on input order.
Partition dbscan(const Dataset& data, const DbscanConfig& config);

}  // namespace clusel::clusterers
