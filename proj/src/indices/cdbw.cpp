#include "clusel/indices/cdbw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "clusel/core/canonical.hpp"
#include "clusel/core/io.hpp"
#include "clusel/error.hpp"
#include "clusel/simd/kernels.hpp"

namespace clusel::indices {
namespace {

double distance(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t f = 0; f < a.size(); ++f) {
    const double d = a[f] - b[f];
    acc = acc + d * d;
  }
  return std::sqrt(acc);
}

struct ClusterView {
  Dataset members;
  simd::ColumnBlock block;
  std::vector<double> centroid;
  std::vector<std::size_t> reps;  // rows of `members`
};

}  // namespace

std::vector<std::size_t> select_representatives(const Dataset& members, std::size_t count) {
  const std::size_t n = members.rows();
  count = std::min(count, n);
  if (count == 0) return {};
  const auto centroid = column_means(members);
  const simd::ColumnBlock block(members);
  std::vector<double> d(n);
  simd::distances(centroid, block, 0, n, d);
  const auto seed = static_cast<std::size_t>(std::min_element(d.begin(), d.end()) - d.begin());

  std::vector<std::size_t> reps{seed};
  std::vector<double> nearest(n);
  simd::distances(members.row(seed), block, 0, n, nearest);
  while (reps.size() < count) {
    const auto next =
        static_cast<std::size_t>(std::max_element(nearest.begin(), nearest.end()) - nearest.begin());
    reps.push_back(next);
    simd::distances(members.row(next), block, 0, n, d);
    for (std::size_t j = 0; j < n; ++j) nearest[j] = std::min(nearest[j], d[j]);
  }
  return reps;
}

CdbwComponents cdbw_components(const Dataset& data, const Partition& part,
                               const CdbwOptions& options) {
  require_aligned(data, part);
  if (options.representatives == 0) {
    throw Error(Errc::InvalidArgument, "representative count must be at least 1");
  }
  if (options.shrink_factors.empty()) {
    throw Error(Errc::InvalidArgument, "at least one shrink factor is required");
  }
  CdbwComponents out;
  const std::size_t k = part.cluster_count();
  if (k < 2) {
    out.undefined_reason = "needs at least two clusters";
    return out;
  }
  const auto canon = canonicalize(data, part);
  const std::size_t m = data.cols();
  const auto stats = cluster_stats(canon.data, canon.partition);
  const auto groups = canon.partition.members();

  double total_variance = 0.0;
  for (const auto& s : stats) {
    for (double v : s.variance_vector) total_variance += v;
  }
  const double kd = static_cast<double>(k);
  out.stdev = std::sqrt(total_variance / kd);
  if (!(out.stdev > 0.0)) {
    out.undefined_reason = "every cluster has zero variance";
    return out;
  }
  const double stdev = out.stdev;

  std::vector<ClusterView> clusters;
  clusters.reserve(k);
  for (std::size_t c = 0; c < k; ++c) {
    Dataset members = canon.data.select_rows(groups[c]);
    simd::ColumnBlock block(members);
    auto reps = select_representatives(members, options.representatives);
    clusters.push_back({std::move(members), std::move(block), stats[c].centroid, std::move(reps)});
  }

  // Mutually closest representative pairs, their mean distance and density.
  std::vector<double> pair_dist(k * k, 0.0);
  std::vector<double> pair_dens(k * k, 0.0);
  std::vector<double> mid(m);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const auto& A = clusters[a];
      const auto& B = clusters[b];
      auto closest_in = [](const ClusterView& to, std::span<const double> p) {
        std::size_t best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t r = 0; r < to.reps.size(); ++r) {
          const double d = distance(p, to.members.row(to.reps[r]));
          if (d < best_d) {
            best_d = d;
            best = r;
          }
        }
        return best;
      };
      double dist_sum = 0.0;
      double dens_sum = 0.0;
      std::size_t pairs = 0;
      const double union_size = static_cast<double>(A.members.rows() + B.members.rows());
      for (std::size_t ra = 0; ra < A.reps.size(); ++ra) {
        const auto pa = A.members.row(A.reps[ra]);
        const std::size_t rb = closest_in(B, pa);
        const auto pb = B.members.row(B.reps[rb]);
        if (closest_in(A, pb) != ra) continue;
        const double d = distance(pa, pb);
        for (std::size_t f = 0; f < m; ++f) mid[f] = 0.5 * (pa[f] + pb[f]);
        const auto around = simd::count_within(mid, A.block, stdev) +
                            simd::count_within(mid, B.block, stdev);
        dist_sum += d;
        dens_sum += d / (2.0 * stdev) * (static_cast<double>(around) / union_size);
        ++pairs;
      }
      const double np = static_cast<double>(pairs);
      pair_dist[a * k + b] = pair_dist[b * k + a] = dist_sum / np;
      pair_dens[a * k + b] = pair_dens[b * k + a] = dens_sum / np;
    }
  }

  double inter_density = 0.0;
  double min_dist_sum = 0.0;
  for (std::size_t a = 0; a < k; ++a) {
    double max_dens = 0.0;
    double min_dist = std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b) continue;
      max_dens = std::max(max_dens, pair_dens[a * k + b]);
      min_dist = std::min(min_dist, pair_dist[a * k + b]);
    }
    inter_density += max_dens;
    min_dist_sum += min_dist;
  }
  out.inter_density = inter_density / kd;
  out.separation = (min_dist_sum / kd) / (1.0 + out.inter_density);

  std::vector<double> shrunk(m);
  for (double s : options.shrink_factors) {
    double dens_cl = 0.0;
    for (const auto& c : clusters) {
      double card_sum = 0.0;
      for (std::size_t r : c.reps) {
        const auto v = c.members.row(r);
        for (std::size_t f = 0; f < m; ++f) shrunk[f] = v[f] + s * (c.centroid[f] - v[f]);
        card_sum += static_cast<double>(simd::count_within(shrunk, c.block, stdev)) /
                    static_cast<double>(c.members.rows());
      }
      dens_cl += card_sum / static_cast<double>(c.reps.size());
    }
    out.intra_density.push_back(dens_cl / (kd * stdev));
  }
  const auto& intra = out.intra_density;
  double sum = 0.0;
  for (double v : intra) sum += v;
  out.compactness = sum / static_cast<double>(intra.size());
  double change = 0.0;
  for (std::size_t l = 1; l < intra.size(); ++l) change += std::abs(intra[l] - intra[l - 1]);
  out.intra_change = intra.size() > 1 ? change / static_cast<double>(intra.size() - 1) : 0.0;
  out.cohesion = out.compactness / (1.0 + out.intra_change);
  out.value = out.cohesion * out.separation * out.compactness;
  return out;
}

IndexScore cdbw(const Dataset& data, const Partition& part, const CdbwOptions& options) {
  const auto c = cdbw_components(data, part, options);
  IndexScore score{"cdbw", c.value, Direction::HigherBetter, c.undefined_reason, {}};
  std::string factors;
  for (double s : options.shrink_factors) {
    if (!factors.empty()) factors += ' ';
    factors += format_double(s);
  }
  score.parameters = {{"representatives", std::to_string(options.representatives)},
                      {"shrink_factors", factors},
                      {"representative_selection", "farthest_first_from_nearest_to_centroid"}};
  return score;
}

}  // namespace clusel::indices
