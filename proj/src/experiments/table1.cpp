#include "clusel/experiments/table1.hpp"

#include <algorithm>

#include "clusel/clusterers/dbscan.hpp"
#include "clusel/clusterers/generators.hpp"
#include "clusel/clusterers/kmeans.hpp"
#include "clusel/core/io.hpp"
#include "clusel/indices/cdbw.hpp"
#include "clusel/indices/registry.hpp"
#include "clusel/indices/sdbw.hpp"
#include "clusel/indices/silhouette.hpp"

namespace clusel::experiments {
namespace {

Table1Row score(std::string description, const Dataset& data, Partition part) {
  Table1Row row{std::move(description), part, indices::silhouette_score(data, part),
                indices::sdbw(data, part), indices::cdbw(data, part)};
  return row;
}

std::string show(const indices::IndexScore& s) {
  return s.value ? format_double(*s.value) : std::string("undefined");
}

// Compares ground truth against k-means rows k = 2..5 (rows 2..5).
OrderingCheck compare(std::string id, std::string text, const Table1Report& r,
                      indices::IndexScore Table1Row::*field, bool truth_should_be_lower) {
  OrderingCheck c{std::move(id), std::move(text), true, ""};
  const auto& truth = r.rows[0].*field;
  for (std::size_t i = 2; i <= 5; ++i) {
    const auto& other = r.rows[i].*field;
    bool ok = truth.value && other.value;
    if (ok) ok = truth_should_be_lower ? *truth.value < *other.value : *truth.value > *other.value;
    if (!ok) {
      c.passed = false;
      if (!c.detail.empty()) c.detail += "; ";
      c.detail += "k=" + std::to_string(i) + ": " + show(other) + " vs truth " + show(truth);
    }
  }
  if (c.passed) c.detail = "all k in 2..5";
  return c;
}

}  // namespace

Table1Report reproduce_table1(std::uint64_t seed, std::size_t n) {
  Table1Report r;
  r.seed = seed;
  r.n = n;
  auto [data, truth] = clusterers::generate_two_ring_dataset(n, seed);
  r.data = data;
  r.rows.push_back(score("ground truth", data, truth));
  for (std::size_t k = 1; k <= 5; ++k) {
    r.rows.push_back(score("k-means k=" + std::to_string(k), data,
                           clusterers::kmeans(data, {k, 300, seed, 10})));
  }
  r.rows.push_back(score("dbscan eps=0.1 minPts=2", data, clusterers::dbscan(data, {0.1, 2})));

  r.checks.push_back(compare("a", "silhouette: every k-means partition beats ground truth", r,
                             &Table1Row::silhouette, true));
  r.checks.push_back(compare("b", "s_dbw: every k-means partition beats ground truth", r,
                             &Table1Row::sdbw, false));
  r.checks.push_back(compare("c", "cdbw: ground truth beats every k-means partition", r,
                             &Table1Row::cdbw, false));
  {
    const bool same = same_grouping(r.rows[6].partition, truth);
    r.checks.push_back({"d", "dbscan matches ground truth up to renaming", same,
                        same ? "identical grouping"
                             : std::to_string(r.rows[6].partition.cluster_count()) + " clusters, " +
                                   std::to_string(r.rows[6].partition.noise_count()) + " noise"});
  }
  {
    std::string defined;
    for (auto name : indices::kIndexNames) {
      if (indices::compute_index(name, data, r.rows[1].partition).value) {
        defined += (defined.empty() ? "" : ", ") + std::string(name);
      }
    }
    r.checks.push_back({"e", "k=1 row undefined for every index", defined.empty(),
                        defined.empty() ? "all five undefined" : "defined: " + defined});
  }
  r.passed = std::all_of(r.checks.begin(), r.checks.end(),
                         [](const OrderingCheck& c) { return c.passed; });
  return r;
}

}  // namespace clusel::experiments
