#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"

#include "clusel/core/canonical.hpp"
#include "clusel/error.hpp"
#include "clusel/indices/cdbw.hpp"
#include "clusel/indices/dbcv.hpp"
#include "clusel/indices/dunn.hpp"
#include "clusel/indices/registry.hpp"
#include "clusel/indices/sdbw.hpp"
#include "clusel/indices/silhouette.hpp"
#include "oracles.hpp"

using namespace clusel;
using namespace clusel::indices;

namespace {

// 1-D: {0, 1} and {4, 5}.
const Dataset kLine(4, 1, {0, 1, 4, 5});
const Partition kLineParts({0, 0, 1, 1});

}  // namespace

TEST_CASE("silhouette by hand") {
  const auto r = silhouette(kLine, kLineParts);
  REQUIRE(r.average);
  CHECK(*r.average == doctest::Approx(47.0 / 63.0).epsilon(1e-15));
  CHECK(*r.per_point[0] == doctest::Approx(7.0 / 9.0));
  CHECK(*r.per_point[1] == doctest::Approx(5.0 / 7.0));
}

TEST_CASE("silhouette against the naive formula") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 5 + rng() % 60;
    const auto d = oracle::random_dataset(rng, n, 1 + rng() % 4);
    const auto p = oracle::random_partition(rng, n, 2 + rng() % 3, 1, 0.1);
    const auto want = oracle::naive_silhouette(d, p);
    const auto got = silhouette(d, p).average;
    REQUIRE(want);
    REQUIRE(got);
    CHECK(*got == doctest::Approx(*want).epsilon(1e-12));
  }
}

TEST_CASE("silhouette of a singleton is zero, one cluster is undefined") {
  const auto r = silhouette(Dataset(3, 1, {0, 1, 9}), Partition({0, 0, 1}));
  CHECK(*r.per_point[2] == 0.0);
  CHECK_FALSE(silhouette(kLine, Partition({0, 0, 0, 0})).average);
}

TEST_CASE("dunn by hand") {
  const auto s = dunn(kLine, kLineParts);
  REQUIRE(s.value);
  CHECK(*s.value == doctest::Approx(3.0));
  CHECK_FALSE(dunn(kLine, Partition({0, 0, 0, 0})).value);
  try {
    dunn(Dataset(2, 1, {0, 1}), Partition({0, 1}));
    FAIL("expected DegenerateDiameter");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegenerateDiameter);
  }
}

TEST_CASE("s_dbw by hand") {
  // var(A) = var(B) = 0.5, var(X) = 17/3, stdev = 0.5; the midpoint 2.5 has
  // no point within 0.5, so only scattering remains.
  const auto c = sdbw_components(kLine, kLineParts);
  REQUIRE(c.value);
  CHECK(*c.scat == doctest::Approx(3.0 / 34.0));
  CHECK(c.stdev == doctest::Approx(0.5));
  CHECK(*c.dens_bw == 0.0);
  CHECK(*c.value == doctest::Approx(3.0 / 34.0));
}

TEST_CASE("s_dbw sees density between touching clusters") {
  const Dataset d(6, 1, {0, 1, 2, 3, 4, 5});
  const auto c = sdbw_components(d, Partition({0, 0, 0, 1, 1, 1}));
  REQUIRE(c.dens_bw);
  CHECK(*c.dens_bw > 0.0);
}

TEST_CASE("cdbw basics") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> g(0.0, 0.1);
  std::vector<double> v;
  std::vector<int> l;
  for (int c = 0; c < 2; ++c) {
    for (int i = 0; i < 40; ++i) {
      v.push_back(c * 3.0 + g(rng));
      v.push_back(g(rng));
      l.push_back(c);
    }
  }
  const Dataset d(80, 2, v);
  const Partition p(l);
  const auto good = cdbw(d, p);
  REQUIRE(good.value);
  CHECK(*good.value > 0.0);
  CHECK_FALSE(cdbw(d, Partition(std::vector<int>(80, 0))).value);

  const auto reps = select_representatives(d.select_rows(p.members()[0]), 10);
  CHECK(reps.size() == 10);
  CHECK(std::set<std::size_t>(reps.begin(), reps.end()).size() == 10);
}

TEST_CASE("dbcv by hand") {
  // Two members per cluster in 1-D: core = 1, DSC = 1, DSPC = 3.
  const auto r = dbcv(kLine, kLineParts);
  REQUIRE(r.total);
  CHECK(r.dsc[0] == doctest::Approx(1.0));
  CHECK(r.dspc[0] == doctest::Approx(3.0));
  CHECK(*r.total == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("dbcv core distance against the textbook formula") {
  std::mt19937_64 rng(41);
  for (std::size_t m : {1, 2, 5, 40}) {
    const auto d = oracle::random_dataset(rng, 12, m);
    const auto got = all_points_core_distances(d);
    const auto want = oracle::naive_core_distances(d);
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
    }
  }
  const auto dup = all_points_core_distances(Dataset(3, 1, {0, 0, 1}));
  CHECK(dup[0] == 0.0);
  CHECK(dup[1] == 0.0);
  CHECK(dup[2] > 0.0);
}

TEST_CASE("dbcv against the brute-force oracle") {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 40; ++t) {
    const std::size_t k = 2 + rng() % 2;
    const std::size_t n = 2 * k + rng() % 10;
    const std::size_t m = 1 + rng() % 3;
    const auto raw = oracle::random_dataset(rng, n, m);
    const auto raw_part = oracle::random_partition(rng, n, k, 2, 0.1);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return row_less(raw.row(a), raw.row(b));
    });
    std::vector<int> labels;
    for (auto i : order) labels.push_back(raw_part[i]);
    const auto d = raw.select_rows(order);
    const Partition p(labels);
    std::vector<std::vector<double>> core;
    for (const auto& g : p.members()) core.push_back(all_points_core_distances(d.select_rows(g)));
    const auto want = oracle::dbcv_oracle(d, p, core);
    const auto got = dbcv(d, p);
    CHECK(got.dsc == want.dsc);
    CHECK(got.dspc_matrix == want.dspc_matrix);
  }
}

TEST_CASE("internal structure rules") {
  // Star on four nodes: no internal edge, so every edge counts.
  const std::vector<TreeEdge> star{{0, 1, 1.0}, {0, 2, 2.0}, {0, 3, 3.0}};
  const auto s = internal_structure(4, star);
  CHECK(s.internal_node == std::vector<bool>{true, false, false, false});
  CHECK(s.internal_edges.size() == 3);

  const std::vector<TreeEdge> path{{0, 1, 1.0}, {1, 2, 5.0}, {2, 3, 1.0}};
  const auto p = internal_structure(4, path);
  REQUIRE(p.internal_edges.size() == 1);
  CHECK(p.internal_edges[0].weight == 5.0);

  CHECK(internal_structure(3, {{0, 1, 1.0}, {1, 2, 1.0}}).internal_node ==
        std::vector<bool>{true, true, true});
}

TEST_CASE("dbcv needs two members per cluster") {
  const auto r = dbcv(Dataset(3, 1, {0, 1, 5}), Partition({0, 0, 1}));
  CHECK_FALSE(r.total);
  CHECK_FALSE(r.undefined_reason.empty());
}

TEST_CASE("registry") {
  for (auto name : kIndexNames) {
    const auto s = compute_index(name, kLine, kLineParts);
    CHECK(s.name == name);
    CHECK(s.value);
  }
  CHECK(compute_index("S_Dbw", kLine, kLineParts).name == "sdbw");
  CHECK(compute_index("Silhouette", kLine, kLineParts).direction == Direction::HigherBetter);
  CHECK(compute_index("sdbw", kLine, kLineParts).direction == Direction::LowerBetter);
  try {
    compute_index("davies-bouldin", kLine, kLineParts);
    FAIL("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidArgument);
  }
}

TEST_CASE("every index is undefined for one cluster") {
  for (auto name : kIndexNames) {
    CHECK_FALSE(compute_index(name, kLine, Partition({0, 0, 0, 0})).value);
  }
}
