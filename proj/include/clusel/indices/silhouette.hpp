#pragma once

#include <optional>
#include <vector>

#include "clusel/core/dataset.hpp"
#include "clusel/indices/score.hpp"

namespace clusel::indices {

struct SilhouetteResult {
  /// s(x_i) per row; empty for noise rows and when the index is undefined.
  std::vector<std::optional<double>> per_point;
  /// Mean of the defined per-point values; empty when fewer than two clusters.
  std::optional<double> average;
};

/// Average silhouette over non-noise rows, from a precomputed distance matrix.
/// a(x) is the mean distance to the other members of x's cluster, b(x) the
/// smallest mean distance to another cluster. A singleton's sole member scores
/// 0. Needs at least two clusters.
SilhouetteResult silhouette(const DistanceMatrix& dist, const Partition& part);

/// Evaluates on the canonical row order, so the result is bit-identical under
/// row permutation and relabelling. per_point is reported in input order.
SilhouetteResult silhouette(const Dataset& data, const Partition& part);

IndexScore silhouette_score(const Dataset& data, const Partition& part);

}  // namespace clusel::indices
