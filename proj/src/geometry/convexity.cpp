#include "clusel/geometry/convexity.hpp"

#include <cmath>

#include "clusel/clusterers/kmeans.hpp"
#include "clusel/error.hpp"

namespace clusel::geometry {
namespace {

ClusterConvexity evaluate(const Dataset& points, const ConvexityOptions& options) {
  ClusterConvexity c;
  c.size = points.rows();
  c.shape = alpha_shape(points, options.alpha);
  c.alpha = c.shape.alpha;
  c.boundary_volume = c.shape.volume;
  const auto fit = mvee(boundary_points(c.shape), options.mvee);
  c.mvee_iterations = fit.iterations;
  c.ellipsoid_volume = ellipsoid_volume(fit.ellipsoid);
  c.ratio = c.boundary_volume / c.ellipsoid_volume;
  return c;
}

}  // namespace

ConvexityReport estimate_convexity_cluster(const Dataset& points, const ConvexityOptions& options) {
  ConvexityReport report;
  report.tau = options.tau;
  report.per_cluster.push_back(evaluate(points, options));
  report.ratio = report.per_cluster.front().ratio;
  report.is_convex = report.ratio >= options.tau;
  return report;
}

ConvexityReport estimate_convexity_dataset(const Dataset& data, std::size_t k, std::uint64_t seed,
                                           const ConvexityOptions& options) {
  if (data.cols() != 2 && data.cols() != 3) {
    throw Error(Errc::DimensionUnsupported,
                "convexity needs 2 or 3 features, got " + std::to_string(data.cols()));
  }
  const auto part = clusterers::kmeans(data, {k, 300, seed, 10});
  const auto groups = part.members();
  ConvexityReport report;
  report.tau = options.tau;
  double sum = 0.0;
  for (std::size_t c = 0; c < groups.size(); ++c) {
    if (groups[c].size() < data.cols() + 1) {
      report.skipped.push_back({c, groups[c].size(), "fewer than m + 1 points"});
      continue;
    }
    try {
      auto cc = evaluate(data.select_rows(groups[c]), options);
      cc.cluster = c;
      sum += cc.ratio;
      report.per_cluster.push_back(std::move(cc));
    } catch (const Error& e) {
      if (e.code() != Errc::DegenerateGeometry) throw;
      report.skipped.push_back({c, groups[c].size(), e.what()});
    }
  }
  if (report.per_cluster.empty()) {
    throw Error(Errc::ClusterTooSmall, "no cluster has enough points for a volume estimate");
  }
  report.ratio = sum / static_cast<double>(report.per_cluster.size());
  report.is_convex = report.ratio >= options.tau;
  return report;
}

Dataset project_pca2d(const Dataset& data) {
  if (data.cols() < 2) throw Error(Errc::DimensionUnsupported, "PCA projection needs m >= 2");
  const auto n = static_cast<Eigen::Index>(data.rows());
  const auto m = static_cast<Eigen::Index>(data.cols());
  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      x(data.values().data(), n, m);
  const Eigen::MatrixXd centred = x.rowwise() - x.colwise().mean();
  const Eigen::MatrixXd cov = centred.transpose() * centred;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
  Eigen::MatrixXd basis(m, 2);
  basis.col(0) = eig.eigenvectors().col(m - 1);
  basis.col(1) = eig.eigenvectors().col(m - 2);
  for (Eigen::Index c = 0; c < 2; ++c) {
    Eigen::Index at = 0;
    basis.col(c).cwiseAbs().maxCoeff(&at);
    if (basis(at, c) < 0.0) basis.col(c) *= -1.0;
  }
  const Eigen::MatrixXd projected = centred * basis;
  std::vector<double> values(static_cast<std::size_t>(n) * 2);
  for (Eigen::Index i = 0; i < n; ++i) {
    values[static_cast<std::size_t>(2 * i)] = projected(i, 0);
    values[static_cast<std::size_t>(2 * i + 1)] = projected(i, 1);
  }
  return Dataset(data.rows(), 2, std::move(values));
}

}  // namespace clusel::geometry
