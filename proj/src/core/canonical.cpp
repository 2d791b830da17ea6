#include "clusel/core/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace clusel {

bool row_less(std::span<const double> a, std::span<const double> b) noexcept {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

CanonicalForm canonicalize(const Dataset& data, const Partition& part) {
  require_aligned(data, part);
  const std::size_t n = data.rows();
  auto by_coords = [&](std::size_t a, std::size_t b) { return row_less(data.row(a), data.row(b)); };

  // Rank clusters by their sorted member lists.
  auto groups = part.members();
  for (auto& g : groups) std::stable_sort(g.begin(), g.end(), by_coords);
  std::vector<std::size_t> cluster_order(groups.size());
  std::iota(cluster_order.begin(), cluster_order.end(), 0);
  std::stable_sort(cluster_order.begin(), cluster_order.end(), [&](std::size_t x, std::size_t y) {
    const auto& gx = groups[x];
    const auto& gy = groups[y];
    return std::lexicographical_compare(
        gx.begin(), gx.end(), gy.begin(), gy.end(),
        [&](std::size_t a, std::size_t b) { return row_less(data.row(a), data.row(b)); });
  });
  std::vector<int> rank(groups.size());
  for (std::size_t r = 0; r < cluster_order.size(); ++r) {
    rank[cluster_order[r]] = static_cast<int>(r);
  }
  auto canonical_label = [&](std::size_t row) {
    return part[row] < 0 ? Partition::kNoise : rank[static_cast<std::size_t>(part[row])];
  };

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (row_less(data.row(a), data.row(b))) return true;
    if (row_less(data.row(b), data.row(a))) return false;
    return canonical_label(a) < canonical_label(b);
  });

  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = canonical_label(order[i]);
  return CanonicalForm{data.select_rows(order), Partition(std::move(labels)), std::move(order),
                       std::move(rank)};
}

}  // namespace clusel
