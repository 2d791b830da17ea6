#include "clusel/clusterers/dbscan.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "clusel/core/canonical.hpp"
#include "clusel/error.hpp"
#include "clusel/simd/kernels.hpp"

namespace clusel::clusterers {

Partition dbscan(const Dataset& data, const DbscanConfig& config) {
  if (!(config.eps > 0.0) || !std::isfinite(config.eps)) {
    throw Error(Errc::InvalidArgument, "eps must be positive");
  }
  if (config.min_pts == 0) throw Error(Errc::InvalidArgument, "min_pts must be at least 1");

  const std::size_t n = data.rows();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return row_less(data.row(a), data.row(b));
  });
  const Dataset sorted = data.select_rows(order);
  const simd::ColumnBlock block(sorted);

  std::vector<double> d(n);
  auto neighbours = [&](std::size_t i) {
    simd::distances(sorted.row(i), block, 0, n, d);
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < n; ++j) {
      if (d[j] <= config.eps) out.push_back(j);
    }
    return out;
  };

  constexpr int kUnvisited = -2;
  std::vector<int> label(n, kUnvisited);
  int next_id = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (label[i] != kUnvisited) continue;
    auto seeds = neighbours(i);
    if (seeds.size() < config.min_pts) {
      label[i] = Partition::kNoise;
      continue;
    }
    const int id = next_id++;
    label[i] = id;
    std::vector<std::size_t> frontier;
    for (std::size_t j : seeds) {
      if (label[j] == kUnvisited || label[j] == Partition::kNoise) {
        const bool fresh = label[j] == kUnvisited;
        label[j] = id;
        if (fresh) frontier.push_back(j);
      }
    }
    for (std::size_t f = 0; f < frontier.size(); ++f) {
      const auto reach = neighbours(frontier[f]);
      if (reach.size() < config.min_pts) continue;
      for (std::size_t j : reach) {
        if (label[j] == kUnvisited || label[j] == Partition::kNoise) {
          const bool fresh = label[j] == kUnvisited;
          label[j] = id;
          if (fresh) frontier.push_back(j);
        }
      }
    }
  }

  std::vector<int> out(n);
  for (std::size_t s = 0; s < n; ++s) out[order[s]] = label[s];
  return Partition(std::move(out));
}

}  // namespace clusel::clusterers
