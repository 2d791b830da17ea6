#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "clusel/core/dataset.hpp"
#include "clusel/indices/score.hpp"

namespace clusel::experiments {

struct Table1Row {
  std::string description;
  Partition partition;
  indices::IndexScore silhouette;
  indices::IndexScore sdbw;
  indices::IndexScore cdbw;
};

struct OrderingCheck {
  std::string id;  // "a" .. "e"
  std::string description;
  bool passed = false;
  std::string detail;
};

/// Two-ring data, k-means k = 1..5 (10 restarts each) and DBSCAN(0.1, 2),
/// scored with Silhouette, S_Dbw and CDbw. Rows: ground truth, k = 1..5,
/// DBSCAN.
struct Table1Report {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  Dataset data{1, 1, {0.0}};
  std::vector<Table1Row> rows;
  std::vector<OrderingCheck> checks;
  bool passed = false;
};

Table1Report reproduce_table1(std::uint64_t seed, std::size_t n = 300);

}  // namespace clusel::experiments
