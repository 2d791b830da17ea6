#include "clusel/indices/dbcv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "clusel/core/canonical.hpp"
#include "clusel/error.hpp"
#include "clusel/simd/kernels.hpp"

namespace clusel::indices {

std::vector<double> all_points_core_distances(const Dataset& members) {
  const std::size_t n = members.rows();
  if (n < 2) throw Error(Errc::InvalidArgument, "core distance needs at least two members");
  const double dim = static_cast<double>(members.cols());
  const simd::ColumnBlock block(members);
  std::vector<double> core(n);
  std::vector<double> d(n);
  for (std::size_t o = 0; o < n; ++o) {
    simd::distances(members.row(o), block, 0, n, d);
    // Scale by the nearest neighbour so the powers stay finite in any dimension.
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t x = 0; x < n; ++x) {
      if (x != o) nearest = std::min(nearest, d[x]);
    }
    if (nearest == 0.0) {
      core[o] = 0.0;
      continue;
    }
    double acc = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      if (x != o) acc += std::pow(nearest / d[x], dim);
    }
    const double mean = acc / static_cast<double>(n - 1);
    core[o] = nearest * std::pow(mean, -1.0 / dim);
  }
  return core;
}

std::vector<TreeEdge> mutual_reachability_mst(const Dataset& members,
                                              const std::vector<double>& core) {
  const std::size_t n = members.rows();
  std::vector<TreeEdge> edges;
  if (n < 2) return edges;
  const simd::ColumnBlock block(members);
  std::vector<bool> in_tree(n, false);
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> parent(n, 0);
  std::vector<double> d(n);
  // Ties in weight are common (core distances dominate), so edges are ordered
  // by (weight, lower endpoint, higher endpoint) to make the tree unique.
  auto key = [](double w, std::size_t a, std::size_t b) {
    return std::tuple(w, std::min(a, b), std::max(a, b));
  };
  std::size_t current = 0;
  in_tree[0] = true;
  for (std::size_t added = 1; added < n; ++added) {
    simd::distances(members.row(current), block, 0, n, d);
    for (std::size_t j = 0; j < n; ++j) {
      if (in_tree[j]) continue;
      const double w = std::max({core[current], core[j], d[j]});
      if (key(w, current, j) < key(best[j], parent[j], j)) {
        best[j] = w;
        parent[j] = current;
      }
    }
    std::size_t next = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (!in_tree[j] &&
          (next == n || key(best[j], parent[j], j) < key(best[next], parent[next], next))) {
        next = j;
      }
    }
    in_tree[next] = true;
    edges.push_back({parent[next], next, best[next]});
    current = next;
  }
  return edges;
}

InternalStructure internal_structure(std::size_t node_count, const std::vector<TreeEdge>& mst) {
  InternalStructure out;
  if (node_count <= 3) {
    out.internal_node.assign(node_count, true);
    out.internal_edges = mst;
    return out;
  }
  std::vector<std::size_t> degree(node_count, 0);
  for (const auto& e : mst) {
    ++degree[e.a];
    ++degree[e.b];
  }
  out.internal_node.resize(node_count);
  for (std::size_t i = 0; i < node_count; ++i) out.internal_node[i] = degree[i] > 1;
  for (const auto& e : mst) {
    if (out.internal_node[e.a] && out.internal_node[e.b]) out.internal_edges.push_back(e);
  }
  if (out.internal_edges.empty()) out.internal_edges = mst;
  return out;
}

DbcvResult dbcv(const Dataset& data, const Partition& part) {
  require_aligned(data, part);
  DbcvResult out;
  const std::size_t k = part.cluster_count();
  if (k < 2) {
    out.undefined_reason = "needs at least two clusters";
    return out;
  }
  const auto canon = canonicalize(data, part);
  const auto groups = canon.partition.members();
  for (const auto& g : groups) {
    if (g.size() < 2) {
      out.undefined_reason = "every cluster needs at least two members";
      return out;
    }
  }

  struct ClusterTree {
    Dataset members;
    std::vector<double> core;
    std::vector<std::size_t> internal;  // rows of `members`
    double dsc = 0.0;
  };
  std::vector<ClusterTree> trees;
  trees.reserve(k);
  for (const auto& g : groups) {
    Dataset members = canon.data.select_rows(g);
    auto core = all_points_core_distances(members);
    const auto mst = mutual_reachability_mst(members, core);
    const auto structure = internal_structure(members.rows(), mst);
    ClusterTree t{std::move(members), std::move(core), {}, 0.0};
    for (std::size_t i = 0; i < structure.internal_node.size(); ++i) {
      if (structure.internal_node[i]) t.internal.push_back(i);
    }
    for (const auto& e : structure.internal_edges) t.dsc = std::max(t.dsc, e.weight);
    trees.push_back(std::move(t));
  }

  std::vector<double> dspc(k * k, 0.0);
  std::vector<double> d;
  for (std::size_t a = 0; a < k; ++a) {
    const auto& A = trees[a];
    for (std::size_t b = a + 1; b < k; ++b) {
      const auto& B = trees[b];
      const Dataset b_internal = B.members.select_rows(B.internal);
      const simd::ColumnBlock block(b_internal);
      d.resize(B.internal.size());
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t ia : A.internal) {
        simd::distances(A.members.row(ia), block, 0, B.internal.size(), d);
        for (std::size_t t = 0; t < B.internal.size(); ++t) {
          best = std::min(best, std::max({A.core[ia], B.core[B.internal[t]], d[t]}));
        }
      }
      dspc[a * k + b] = dspc[b * k + a] = best;
    }
  }

  // Report per-cluster values under the caller's cluster ids.
  out.per_cluster_validity.assign(k, 0.0);
  out.dsc.assign(k, 0.0);
  out.dspc.assign(k, 0.0);
  out.dspc_matrix.assign(k * k, 0.0);
  double total = 0.0;
  const double n = static_cast<double>(data.rows());
  for (std::size_t c = 0; c < k; ++c) {
    double min_sep = std::numeric_limits<double>::infinity();
    for (std::size_t o = 0; o < k; ++o) {
      if (o != c) min_sep = std::min(min_sep, dspc[c * k + o]);
    }
    const double dsc = trees[c].dsc;
    const double denom = std::max(min_sep, dsc);
    const double validity = denom > 0.0 ? (min_sep - dsc) / denom : 0.0;
    total += static_cast<double>(trees[c].members.rows()) / n * validity;

    const auto external = static_cast<std::size_t>(
        std::find(canon.cluster_rank.begin(), canon.cluster_rank.end(), static_cast<int>(c)) -
        canon.cluster_rank.begin());
    out.per_cluster_validity[external] = validity;
    out.dsc[external] = dsc;
    out.dspc[external] = min_sep;
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const auto ca = static_cast<std::size_t>(canon.cluster_rank[a]);
      const auto cb = static_cast<std::size_t>(canon.cluster_rank[b]);
      out.dspc_matrix[a * k + b] = dspc[ca * k + cb];
    }
  }
  out.total = total;
  return out;
}

IndexScore dbcv_score(const Dataset& data, const Partition& part) {
  const auto r = dbcv(data, part);
  return IndexScore{"dbcv", r.total, Direction::HigherBetter, r.undefined_reason,
                    {{"core_distance", "all_points"}, {"noise_weighting", "counts_in_total"}}};
}

}  // namespace clusel::indices
