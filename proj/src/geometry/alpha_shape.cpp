#include "clusel/geometry/alpha_shape.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "clusel/error.hpp"
#include "clusel/geometry/delaunay.hpp"

namespace clusel::geometry {
namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
  std::vector<std::size_t> parent;
};

template <int D>
AlphaShape build(const Dataset& data, std::optional<double> alpha) {
  std::vector<std::array<double, D>> pts(data.rows());
  for (std::size_t i = 0; i < data.rows(); ++i) {
    for (int f = 0; f < D; ++f) pts[i][f] = data(i, static_cast<std::size_t>(f));
  }
  const auto tri = delaunay<D>(std::span<const std::array<double, D>>(pts));
  const std::size_t ns = tri.simplices.size();
  const std::size_t nv = tri.vertices.size();
  constexpr std::size_t kNone = Triangulation<D>::kNone;

  auto corners = [&](std::size_t s) {
    std::array<std::array<double, D>, D + 1> q;
    for (int i = 0; i <= D; ++i) q[i] = tri.vertices[tri.simplices[s][i]];
    return q;
  };
  std::vector<double> radius(ns);
  for (std::size_t s = 0; s < ns; ++s) radius[s] = circumradius<D>(corners(s));

  std::vector<char> included(ns, 0);
  double chosen = 0.0;
  if (alpha) {
    chosen = *alpha;
    for (std::size_t s = 0; s < ns; ++s) included[s] = radius[s] <= chosen;
  } else {
    std::vector<std::size_t> order(ns);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return radius[a] < radius[b]; });
    UnionFind uf(ns);
    std::vector<char> covered(nv, 0);
    std::size_t covered_count = 0;
    std::size_t components = 0;
    bool done = false;
    for (std::size_t at = 0; at < ns && !done;) {
      const double r = radius[order[at]];
      for (; at < ns && radius[order[at]] == r; ++at) {
        const std::size_t s = order[at];
        included[s] = 1;
        ++components;
        for (int i = 0; i <= D; ++i) {
          const std::size_t o = tri.neighbours[s][i];
          if (o != kNone && included[o] && uf.unite(o, s)) --components;
          const std::size_t v = tri.simplices[s][i];
          if (!covered[v]) {
            covered[v] = 1;
            ++covered_count;
          }
        }
      }
      if (components == 1 && covered_count == nv) {
        chosen = r;
        done = true;
      }
    }
    if (!done) throw Error(Errc::DegenerateGeometry, "no alpha connects every point");
  }

  AlphaShape shape;
  shape.dimension = D;
  shape.alpha = chosen;
  for (const auto& v : tri.vertices) shape.vertices.emplace_back(v.begin(), v.end());
  std::vector<char> on_boundary(nv, 0);
  for (std::size_t s = 0; s < ns; ++s) {
    if (!included[s]) continue;
    const auto& sv = tri.simplices[s];
    shape.simplices.emplace_back(sv.begin(), sv.end());
    shape.volume += simplex_volume<D>(corners(s));
    for (int i = 0; i <= D; ++i) {
      const std::size_t o = tri.neighbours[s][i];
      if (o != kNone && included[o]) continue;
      std::vector<std::size_t> facet;
      // Cyclic order after the opposite vertex keeps the region on the left in 2-D.
      for (int j = 1; j <= D; ++j) facet.push_back(sv[(i + j) % (D + 1)]);
      for (std::size_t v : facet) on_boundary[v] = 1;
      shape.boundary.push_back(std::move(facet));
    }
  }
  for (std::size_t v = 0; v < nv; ++v) {
    if (on_boundary[v]) shape.boundary_vertices.push_back(v);
  }

  if constexpr (D == 2) {
    std::multimap<std::size_t, std::size_t> next;
    for (const auto& e : shape.boundary) next.emplace(e[0], e[1]);
    while (!next.empty()) {
      auto it = next.begin();
      const std::size_t start = it->first;
      std::vector<std::size_t> loop{start};
      std::size_t to = it->second;
      next.erase(it);
      while (to != start) {
        loop.push_back(to);
        auto nx = next.find(to);
        if (nx == next.end()) break;
        to = nx->second;
        next.erase(nx);
      }
      shape.loops.push_back(std::move(loop));
    }
  }
  return shape;
}

}  // namespace

AlphaShape alpha_shape(const Dataset& points, std::optional<double> alpha) {
  if (points.cols() == 2) return build<2>(points, alpha);
  if (points.cols() == 3) return build<3>(points, alpha);
  throw Error(Errc::DimensionUnsupported,
              "alpha shapes need 2 or 3 features, got " + std::to_string(points.cols()));
}

Dataset boundary_points(const AlphaShape& shape) {
  std::vector<double> values;
  for (std::size_t v : shape.boundary_vertices) {
    values.insert(values.end(), shape.vertices[v].begin(), shape.vertices[v].end());
  }
  return Dataset(shape.boundary_vertices.size(), shape.dimension, std::move(values));
}

}  // namespace clusel::geometry
