#include "clusel/indices/sdbw.hpp"

#include <algorithm>
#include <cmath>

#include "clusel/core/canonical.hpp"
#include "clusel/core/io.hpp"
#include "clusel/simd/kernels.hpp"

namespace clusel::indices {
SdbwComponents sdbw_components(const Dataset& data, const Partition& part) {
  require_aligned(data, part);
  SdbwComponents out;
  const std::size_t k = part.cluster_count();
  if (k < 2) {
    out.undefined_reason = "needs at least two clusters";
    return out;
  }
  const auto canon = canonicalize(data, part);
  const auto groups = canon.partition.members();
  std::vector<std::size_t> clustered;
  for (const auto& g : groups) clustered.insert(clustered.end(), g.begin(), g.end());
  std::sort(clustered.begin(), clustered.end());
  const Dataset points = canon.data.select_rows(clustered);

  const auto stats = cluster_stats(canon.data, canon.partition);
  const Partition whole(std::vector<int>(points.rows(), 0));
  const double spread = cluster_stats(points, whole).front().variance_norm;
  if (!(spread > 0.0)) {
    out.undefined_reason = "all clustered points coincide";
    return out;
  }

  double sum_norms = 0.0;
  for (const auto& s : stats) sum_norms += s.variance_norm;
  const double kd = static_cast<double>(k);
  out.scat = (sum_norms / kd) / spread;
  out.stdev = std::sqrt(sum_norms) / kd;

  const std::size_t m = data.cols();
  std::vector<simd::ColumnBlock> blocks;
  blocks.reserve(k);
  for (const auto& g : groups) {
    const Dataset members = canon.data.select_rows(g);
    blocks.emplace_back(members);
  }
  auto density = [&](const std::vector<double>& u, std::size_t a, std::size_t b) {
    return simd::count_within(u, blocks[a], out.stdev) + simd::count_within(u, blocks[b], out.stdev);
  };

  double ratio_sum = 0.0;
  std::vector<double> mid(m);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b) continue;
      for (std::size_t f = 0; f < m; ++f) {
        mid[f] = 0.5 * (stats[a].centroid[f] + stats[b].centroid[f]);
      }
      const auto at_mid = density(mid, a, b);
      const auto at_centroids =
          std::max(density(stats[a].centroid, a, b), density(stats[b].centroid, a, b));
      if (at_centroids > 0) {
        ratio_sum += static_cast<double>(at_mid) / static_cast<double>(at_centroids);
      }
    }
  }
  out.dens_bw = ratio_sum / (kd * (kd - 1.0));
  out.value = *out.scat + *out.dens_bw;
  return out;
}

IndexScore sdbw(const Dataset& data, const Partition& part) {
  const auto c = sdbw_components(data, part);
  IndexScore score{"sdbw", c.value, Direction::LowerBetter, c.undefined_reason, {}};
  if (c.value) {
    score.parameters = {{"stdev", format_double(c.stdev)},
                        {"scat", format_double(*c.scat)},
                        {"dens_bw", format_double(*c.dens_bw)}};
  }
  return score;
}

}  // namespace clusel::indices
