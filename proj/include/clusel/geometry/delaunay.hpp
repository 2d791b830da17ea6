#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace clusel::geometry {

/// Delaunay triangulation (D = 2) or tetrahedralisation (D = 3) built by
/// Bowyer-Watson insertion with exact predicates. Duplicate input points are
/// merged; `vertex_of[i]` maps input point i to its vertex.
template <int D>
struct Triangulation {
  using Point = std::array<double, D>;
  using Simplex = std::array<std::size_t, D + 1>;

  std::vector<Point> vertices;
  std::vector<std::size_t> vertex_of;
  std::vector<Simplex> simplices;  // positively oriented
  /// neighbours[s][i] is the simplex across the facet opposite vertex i,
  /// or kNone on the convex hull.
  std::vector<std::array<std::size_t, D + 1>> neighbours;

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
};

/// Throws DegenerateGeometry when fewer than D + 1 affinely independent
/// points are given.
template <int D>
Triangulation<D> delaunay(std::span<const std::array<double, D>> points);

/// Signed volume of a simplex (area for D = 2); positive when positively
/// oriented.
template <int D>
double simplex_volume(const std::array<std::array<double, D>, D + 1>& v);

/// Circumradius; +infinity for a flat simplex.
template <int D>
double circumradius(const std::array<std::array<double, D>, D + 1>& v);

}  // namespace clusel::geometry
