#include "clusel/indices/dunn.hpp"

#include <algorithm>
#include <limits>

#include "clusel/error.hpp"

namespace clusel::indices {

IndexScore dunn(const DistanceMatrix& dist, const Partition& part, DunnInter, DunnIntra) {
  if (part.size() != dist.size()) {
    throw Error(Errc::LengthMismatch, "partition and distance matrix sizes differ");
  }
  IndexScore score{"dunn", std::nullopt, Direction::HigherBetter, {},
                   {{"inter", "single_linkage"}, {"intra", "diameter"}}};
  const std::size_t k = part.cluster_count();
  if (k < 2) {
    score.undefined_reason = "needs at least two clusters";
    return score;
  }
  const std::size_t n = dist.size();
  double max_diameter = 0.0;
  // Separation between each cluster pair, flattened upper triangle.
  std::vector<double> separation(k * k, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i) {
    if (part[i] < 0) continue;
    const auto ci = static_cast<std::size_t>(part[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (part[j] < 0) continue;
      const auto cj = static_cast<std::size_t>(part[j]);
      const double d = dist(i, j);
      if (ci == cj) {
        max_diameter = std::max(max_diameter, d);
      } else {
        auto& s = separation[std::min(ci, cj) * k + std::max(ci, cj)];
        s = std::min(s, d);
      }
    }
  }
  if (!(max_diameter > 0.0)) {
    throw Error(Errc::DegenerateDiameter, "every cluster has zero diameter");
  }
  double min_sep = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) min_sep = std::min(min_sep, separation[a * k + b]);
  }
  score.value = min_sep / max_diameter;
  return score;
}

IndexScore dunn(const Dataset& data, const Partition& part) {
  require_aligned(data, part);
  return dunn(pairwise_distances(data), part);
}

}  // namespace clusel::indices
