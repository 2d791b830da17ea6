#include "clusel/indices/silhouette.hpp"

#include <algorithm>
#include <limits>

#include "clusel/core/canonical.hpp"
#include "clusel/error.hpp"

namespace clusel::indices {

std::string_view direction_name(Direction d) noexcept {
  return d == Direction::HigherBetter ? "higher_better" : "lower_better";
}

SilhouetteResult silhouette(const DistanceMatrix& dist, const Partition& part) {
  const std::size_t n = dist.size();
  if (part.size() != n) {
    throw Error(Errc::LengthMismatch, "partition and distance matrix sizes differ");
  }
  SilhouetteResult result;
  result.per_point.assign(n, std::nullopt);
  const std::size_t k = part.cluster_count();
  if (k < 2) return result;

  const auto sizes = part.cluster_sizes();
  std::vector<double> sums(k);
  double total = 0.0;
  std::size_t counted = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int own = part[i];
    if (own < 0) continue;
    const auto own_c = static_cast<std::size_t>(own);
    double s = 0.0;
    if (sizes[own_c] > 1) {
      std::fill(sums.begin(), sums.end(), 0.0);
      const auto row = dist.row(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (part[j] >= 0) sums[static_cast<std::size_t>(part[j])] += row[j];
      }
      const double a = sums[own_c] / static_cast<double>(sizes[own_c] - 1);
      double b = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < k; ++c) {
        if (c != own_c) b = std::min(b, sums[c] / static_cast<double>(sizes[c]));
      }
      const double denom = std::max(a, b);
      s = denom > 0.0 ? (b - a) / denom : 0.0;
    }
    result.per_point[i] = s;
    total += s;
    ++counted;
  }
  result.average = total / static_cast<double>(counted);
  return result;
}

SilhouetteResult silhouette(const Dataset& data, const Partition& part) {
  const auto canon = canonicalize(data, part);
  const auto inner = silhouette(pairwise_distances(canon.data), canon.partition);
  SilhouetteResult out;
  out.average = inner.average;
  out.per_point.assign(data.rows(), std::nullopt);
  for (std::size_t i = 0; i < canon.original_row.size(); ++i) {
    out.per_point[canon.original_row[i]] = inner.per_point[i];
  }
  return out;
}

IndexScore silhouette_score(const Dataset& data, const Partition& part) {
  IndexScore score{"silhouette", std::nullopt, Direction::HigherBetter, {}, {{"metric", "euclidean"}}};
  if (part.cluster_count() < 2) {
    require_aligned(data, part);
    score.undefined_reason = "needs at least two clusters";
    return score;
  }
  score.value = silhouette(data, part).average;
  return score;
}

}  // namespace clusel::indices
