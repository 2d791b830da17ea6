#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clusel/core/dataset.hpp"
#include "clusel/geometry/alpha_shape.hpp"
#include "clusel/geometry/mvee.hpp"

namespace clusel::geometry {

struct ConvexityOptions {
  double tau = 0.7;
  std::optional<double> alpha;  // default: smallest alpha giving one region over all points
  MveeOptions mvee;
};

struct ClusterConvexity {
  std::size_t cluster = 0;
  std::size_t size = 0;
  double ratio = 0.0;
  double boundary_volume = 0.0;
  double ellipsoid_volume = 0.0;
  double alpha = 0.0;
  std::size_t mvee_iterations = 0;
  AlphaShape shape;
};

struct SkippedCluster {
  std::size_t cluster = 0;
  std::size_t size = 0;
  std::string reason;
};

/// ratio = V_B / V_E, where V_B is the volume enclosed by the alpha shape and
/// V_E the volume of the minimum enclosing ellipsoid of its boundary points.
/// A single-cluster report is convex iff ratio >= tau; a dataset report iff
/// the mean over evaluated clusters is >= tau.
struct ConvexityReport {
  double ratio = 0.0;
  double tau = 0.7;
  bool is_convex = false;
  std::vector<ClusterConvexity> per_cluster;
  std::vector<SkippedCluster> skipped;
};

ConvexityReport estimate_convexity_cluster(const Dataset& points,
                                           const ConvexityOptions& options = {});

/// Clusters the data with k-means and averages the per-cluster ratios.
/// Clusters with fewer than m + 1 points, or flat ones, are skipped and listed;
/// throws ClusterTooSmall when no cluster can be evaluated.
ConvexityReport estimate_convexity_dataset(const Dataset& data, std::size_t k, std::uint64_t seed,
                                           const ConvexityOptions& options = {});

/// Projection onto the two leading principal components (signs fixed so the
/// largest-magnitude loading of each component is positive).
Dataset project_pca2d(const Dataset& data);

}  // namespace clusel::geometry
