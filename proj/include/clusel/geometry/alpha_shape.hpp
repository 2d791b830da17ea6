#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "clusel/core/dataset.hpp"

namespace clusel::geometry {

/// Alpha shape of a 2-D or 3-D point set: the union of Delaunay simplices
/// whose circumradius is at most alpha.
struct AlphaShape {
  std::size_t dimension = 0;
  double alpha = 0.0;
  double volume = 0.0;  // area in 2-D
  /// Vertex coordinates of the underlying triangulation (duplicates merged).
  std::vector<std::vector<double>> vertices;
  std::vector<std::vector<std::size_t>> simplices;   // included simplices
  std::vector<std::vector<std::size_t>> boundary;    // facets used by one simplex
  std::vector<std::size_t> boundary_vertices;        // ascending
  /// 2-D only: closed boundary loops, region on the left.
  std::vector<std::vector<std::size_t>> loops;
};

/// The smallest alpha at which the included simplices form one facet-connected
/// region touching every point, unless `alpha` is given.
/// Throws DimensionUnsupported for m outside {2, 3} and DegenerateGeometry for
/// collinear or coplanar input.
AlphaShape alpha_shape(const Dataset& points, std::optional<double> alpha = std::nullopt);

/// Boundary points of the alpha shape as a dataset, in boundary_vertices order.
Dataset boundary_points(const AlphaShape& shape);

}  // namespace clusel::geometry
