#pragma once

#include <optional>
#include <string>

#include "clusel/core/dataset.hpp"
#include "clusel/indices/score.hpp"

namespace clusel::indices {

/// Scattering plus inter-cluster density. Lower is better.
///
///   scat    = (1/k) sum_j ||var(C_j)|| / ||var(X)||
///   stdev   = (1/k) sqrt(sum_j ||var(C_j)||)
///   dens_bw = 1/(k(k-1)) sum_{j != m} dens(u_jm) / max(dens(c_j), dens(c_m))
///
/// where var(.) is the per-feature sample variance vector, c_j the centroid,
/// u_jm the midpoint of c_j and c_m, and dens(u) the number of points of
/// C_j and C_m within stdev of u. Pairs whose centroid densities are both zero
/// contribute 0. Noise rows are ignored.
struct SdbwComponents {
  std::optional<double> scat;
  std::optional<double> dens_bw;
  double stdev = 0.0;
  std::optional<double> value;
  std::string undefined_reason;
};

SdbwComponents sdbw_components(const Dataset& data, const Partition& part);
IndexScore sdbw(const Dataset& data, const Partition& part);

}  // namespace clusel::indices
