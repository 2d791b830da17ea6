#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clusel/core/dataset.hpp"
#include "clusel/indices/score.hpp"

namespace clusel::indices {

struct CdbwOptions {
  std::size_t representatives = 10;
  std::vector<double> shrink_factors{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
};

/// Multi-representative density-based validity, higher is better:
///
///   cdbw = cohesion * sc,  cohesion = compactness / (1 + intra_change),
///   sc = separation * compactness.
///
/// Each cluster contributes up to `representatives` points chosen by
/// farthest-first traversal (seeded at the member nearest the centroid).
/// Separation uses mutually closest representative pairs between clusters and
/// the density around their midpoints; compactness and intra_change track the
/// density around representatives shrunk toward the centroid by each factor.
/// Densities count points within `stdev`, the root mean of the clusters'
/// total variances. Noise rows are ignored.
struct CdbwComponents {
  std::optional<double> value;
  double separation = 0.0;
  double compactness = 0.0;
  double intra_change = 0.0;
  double cohesion = 0.0;
  double inter_density = 0.0;
  double stdev = 0.0;
  std::vector<double> intra_density;  // one per shrink factor
  std::string undefined_reason;
};

CdbwComponents cdbw_components(const Dataset& data, const Partition& part,
                               const CdbwOptions& options = {});
IndexScore cdbw(const Dataset& data, const Partition& part, const CdbwOptions& options = {});

/// Farthest-first representative rows of one cluster (indices into `members`).
std::vector<std::size_t> select_representatives(const Dataset& members, std::size_t count);

}  // namespace clusel::indices
