#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clusel/core/dataset.hpp"
#include "clusel/indices/score.hpp"

namespace clusel::indices {

/// Density-based clustering validation. Per-cluster vectors are indexed by the
/// partition's cluster id.
struct DbcvResult {
  std::optional<double> total;
  std::vector<double> per_cluster_validity;  // V_C in [-1, 1]
  std::vector<double> dsc;                   // density sparseness
  std::vector<double> dspc;                  // min density separation to any other cluster
  std::vector<double> dspc_matrix;           // k x k, row-major, diagonal 0
  std::string undefined_reason;
};

DbcvResult dbcv(const Dataset& data, const Partition& part);
IndexScore dbcv_score(const Dataset& data, const Partition& part);

// Building blocks, exposed for verification.

/// All-points core distance of every member of one cluster:
///   core(o) = ((1/(n-1)) sum_{x != o} (1/d(o,x))^m)^(-1/m),  m = feature count.
/// A duplicate of o gives core(o) = 0. Needs at least two members.
std::vector<double> all_points_core_distances(const Dataset& members);

struct TreeEdge {
  std::size_t a;
  std::size_t b;
  double weight;
};

/// Prim's MST of one cluster under mutual reachability
/// max(core(a), core(b), d(a, b)). Equal weights are ordered by the lower,
/// then the higher member index, so the tree is unique.
std::vector<TreeEdge> mutual_reachability_mst(const Dataset& members,
                                              const std::vector<double>& core);

/// Internal nodes have MST degree > 1 and internal edges join two internal
/// nodes. Trees of three or fewer nodes count every node and edge; a tree with
/// no internal edge (a star) falls back to all of its edges.
struct InternalStructure {
  std::vector<bool> internal_node;
  std::vector<TreeEdge> internal_edges;
};
InternalStructure internal_structure(std::size_t node_count, const std::vector<TreeEdge>& mst);

}  // namespace clusel::indices
