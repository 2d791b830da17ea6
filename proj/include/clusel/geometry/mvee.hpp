#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "clusel/core/dataset.hpp"

namespace clusel::geometry {

/// {x : (x - center)^T shape (x - center) <= 1}
struct Ellipsoid {
  Eigen::VectorXd center;
  Eigen::MatrixXd shape;
};

struct MveeOptions {
  double tolerance = 1e-4;
  std::size_t max_iterations = 10000;
};

struct MveeResult {
  Ellipsoid ellipsoid;
  std::size_t iterations = 0;
  double kappa = 0.0;  // final (max_j M_j - (d+1)) / (d+1)
};

/// Minimum-volume enclosing ellipsoid by Khachiyan's barycentric ascent with
/// Todd-Yildirim away steps. Stops once kappa <= tolerance, which leaves every
/// point within (x-c)^T A (x-c) <= 1 + tolerance (d+1)/d.
/// Throws DegenerateGeometry for affinely dependent points and NonConvergence
/// (message carries the last kappa) when the iteration cap is reached.
MveeResult mvee(const Dataset& points, const MveeOptions& options = {});

/// U_m / sqrt(det A), U_m the volume of the unit m-ball.
/// Throws SingularShapeMatrix unless A is symmetric positive definite.
double ellipsoid_volume(const Ellipsoid& e);

double unit_ball_volume(std::size_t m);

}  // namespace clusel::geometry
