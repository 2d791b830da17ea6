#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "doctest.h"

#include "clusel/clusterers/dbscan.hpp"
#include "clusel/clusterers/generators.hpp"
#include "clusel/clusterers/kmeans.hpp"
#include "clusel/error.hpp"
#include "oracles.hpp"

using namespace clusel;
using namespace clusel::clusterers;

namespace {

// Smallest WCSS over every labelling with exactly k non-empty clusters.
double best_wcss(const Dataset& d, std::size_t k) {
  const std::size_t n = d.rows();
  std::vector<int> l(n, 0);
  double best = INFINITY;
  for (;;) {
    std::vector<bool> used(k, false);
    for (int x : l) used[static_cast<std::size_t>(x)] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) {
      best = std::min(best, within_cluster_ss(d, Partition(l)));
    }
    std::size_t i = 0;
    while (i < n && ++l[i] == static_cast<int>(k)) l[i++] = 0;
    if (i == n) break;
  }
  return best;
}

}  // namespace

TEST_CASE("k-means on the unit square") {
  const Dataset sq(4, 2, {0, 0, 1, 0, 0, 1, 1, 1});
  const auto r = kmeans_fit(sq, {2, 300, 0, 10});
  CHECK(r.wcss == doctest::Approx(1.0));
  CHECK(r.partition.cluster_count() == 2);
  CHECK(kmeans_fit(sq, {4, 300, 0, 10}).wcss == 0.0);
}

TEST_CASE("k-means against enumeration on small sets") {
  // Lloyd from k-means++ seeds is a local method: never below the optimum,
  // and on these sizes it usually reaches it.
  std::mt19937_64 rng(61);
  int hits = 0, runs = 0;
  for (int t = 0; t < 10; ++t) {
    const auto d = oracle::random_dataset(rng, 8, 2);
    for (std::size_t k : {2, 3}) {
      const auto r = kmeans_fit(d, {k, 300, static_cast<std::uint64_t>(t), 10});
      const double best = best_wcss(d, k);
      CHECK(r.wcss >= best - 1e-12);
      hits += r.wcss <= best * (1.0 + 1e-9);
      ++runs;
    }
  }
  MESSAGE("k-means reached the optimum in " << hits << "/" << runs);
  CHECK(hits >= 15);
}

TEST_CASE("k-means history is non-increasing and runs are reproducible") {
  std::mt19937_64 rng(62);
  const auto d = oracle::random_dataset(rng, 200, 3);
  const auto a = kmeans_fit(d, {5, 300, 9, 4});
  for (std::size_t i = 1; i < a.wcss_history.size(); ++i) {
    CHECK(a.wcss_history[i] <= a.wcss_history[i - 1] + 1e-12);
  }
  CHECK(a.partition == kmeans_fit(d, {5, 300, 9, 4}).partition);
  CHECK(a.partition.cluster_count() == 5);
  CHECK(within_cluster_ss(d, a.partition) == doctest::Approx(a.wcss));
}

TEST_CASE("k-means rejects k > n") {
  try {
    kmeans(Dataset(2, 1, {0, 1}), {3, 300, 0, 1});
    FAIL("expected KTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::KTooLarge);
  }
}

TEST_CASE("dbscan") {
  const Dataset d(6, 1, {5, 0, 1.05, 0.05, 1, 0.1});
  const auto p = dbscan(d, {0.1, 2});
  CHECK(same_grouping(p, Partition({-1, 0, 1, 0, 1, 0})));
  // Three in reach are needed with min_pts 3, so {1, 1.05} becomes noise.
  CHECK(same_grouping(dbscan(d, {0.1, 3}), Partition({-1, 0, -1, 0, -1, 0})));
}

TEST_CASE("dbscan does not depend on row order") {
  std::mt19937_64 rng(63);
  const auto d = oracle::random_dataset(rng, 120, 2);
  const Partition none(std::vector<int>(120, 0));
  const auto [pd, pp] = oracle::permute(rng, d, none);
  (void)pp;
  const auto a = dbscan(d, {0.15, 4});
  const auto b = dbscan(pd, {0.15, 4});
  // Compare through coordinates: the permuted row i is some original row.
  std::map<std::vector<double>, int> la, lb;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    la[{d.row(i).begin(), d.row(i).end()}] = a[i];
    lb[{pd.row(i).begin(), pd.row(i).end()}] = b[i];
  }
  std::vector<int> x, y;
  for (const auto& [k, v] : la) {
    x.push_back(v);
    y.push_back(lb[k]);
  }
  CHECK(Partition(x) == Partition(y));
}

TEST_CASE("two-ring generator") {
  const auto [d, p] = generate_two_ring_dataset(300, 3);
  CHECK(d.rows() == 300);
  CHECK(p.cluster_sizes() == std::vector<std::size_t>{150, 150});
  for (std::size_t i = 0; i < d.rows(); ++i) {
    const double r = std::hypot(d(i, 0) - 0.5, d(i, 1) - 0.5);
    CHECK(std::abs(r - (p[i] == 0 ? 0.25 : 0.5)) < 0.06);
  }
  CHECK(generate_two_ring_dataset(300, 3).first == d);
}

TEST_CASE("other generators") {
  const auto cloud = generate_uniform_cloud(100, 3, 1);
  CHECK(cloud.cols() == 3);
  for (double v : cloud.values()) CHECK((v >= 0.0 && v <= 1.0));
  const auto ring = generate_annulus(500, 0.8, 1.0, 2);
  for (std::size_t i = 0; i < ring.rows(); ++i) {
    const double r = std::hypot(ring(i, 0), ring(i, 1));
    CHECK((r >= 0.8 && r <= 1.0));
  }
  const auto [blobs, bp] = generate_gaussian_blobs({{0, 0}, {5, 5}}, 30, 0.1, 4);
  CHECK(blobs.rows() == 60);
  CHECK(bp.cluster_count() == 2);
}
