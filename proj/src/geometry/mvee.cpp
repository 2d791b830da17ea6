#include "clusel/geometry/mvee.hpp"

#include <cmath>
#include <numbers>

#include "clusel/error.hpp"
#include "clusel/core/io.hpp"

namespace clusel::geometry {

MveeResult mvee(const Dataset& points, const MveeOptions& options) {
  if (!(options.tolerance > 0.0)) throw Error(Errc::InvalidArgument, "tolerance must be positive");
  const auto d = static_cast<Eigen::Index>(points.cols());
  const auto n = static_cast<Eigen::Index>(points.rows());
  if (n < d + 1) {
    throw Error(Errc::DegenerateGeometry, "need at least m + 1 points for an enclosing ellipsoid");
  }
  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      rows(points.values().data(), n, d);
  const Eigen::MatrixXd p = rows.transpose();  // d x n

  {
    const Eigen::MatrixXd centred = p.colwise() - p.rowwise().mean();
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(centred);
    const auto& sv = svd.singularValues();
    if (sv.size() < d || !(sv(d - 1) > 1e-10 * sv(0))) {
      throw Error(Errc::DegenerateGeometry, "points do not span the space");
    }
  }

  Eigen::MatrixXd q(d + 1, n);
  q.topRows(d) = p;
  q.row(d).setOnes();
  const double dim1 = static_cast<double>(d + 1);
  Eigen::VectorXd u = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  Eigen::VectorXd m(n);

  MveeResult result;
  for (;;) {
    const Eigen::MatrixXd x = q * u.asDiagonal() * q.transpose();
    const Eigen::LDLT<Eigen::MatrixXd> ldlt(x);
    const Eigen::MatrixXd solved = ldlt.solve(q);
    m = (q.array() * solved.array()).colwise().sum().transpose();

    Eigen::Index j = 0;
    const double m_max = m.maxCoeff(&j);
    result.kappa = (m_max - dim1) / dim1;
    if (result.kappa <= options.tolerance) break;
    if (result.iterations >= options.max_iterations) {
      throw Error(Errc::NonConvergence, "Khachiyan iteration cap reached with kappa = " +
                                            format_double(result.kappa));
    }
    ++result.iterations;

    Eigen::Index i = -1;
    for (Eigen::Index t = 0; t < n; ++t) {
      if (u(t) > 0.0 && (i < 0 || m(t) < m(i))) i = t;
    }
    const double gain_up = m_max / dim1 - 1.0;
    const double gain_away = 1.0 - m(i) / dim1;
    if (gain_away > gain_up && m(i) > 1.0 + 1e-12) {
      // Away step: shrink the weight of the most interior supported point.
      double beta = (m(i) - dim1) / (dim1 * (m(i) - 1.0));
      beta = std::max(beta, -u(i) / (1.0 - u(i)));
      u *= 1.0 - beta;
      u(i) += beta;
      if (u(i) < 0.0) u(i) = 0.0;
    } else {
      const double beta = (m_max - dim1) / (dim1 * (m_max - 1.0));
      u *= 1.0 - beta;
      u(j) += beta;
    }
  }

  const Eigen::VectorXd c = p * u;
  const Eigen::MatrixXd s = p * u.asDiagonal() * p.transpose() - c * c.transpose();
  Eigen::MatrixXd a = s.inverse() / static_cast<double>(d);
  a = 0.5 * (a + a.transpose());
  result.ellipsoid = Ellipsoid{c, a};
  return result;
}

double unit_ball_volume(std::size_t m) {
  const double half = static_cast<double>(m) / 2.0;
  return std::pow(std::numbers::pi, half) / std::tgamma(half + 1.0);
}

double ellipsoid_volume(const Ellipsoid& e) {
  const auto& a = e.shape;
  if (a.rows() == 0 || a.rows() != a.cols() || e.center.size() != a.rows()) {
    throw Error(Errc::SingularShapeMatrix, "shape matrix must be square and match the centre");
  }
  const double scale = a.cwiseAbs().maxCoeff();
  if (!((a - a.transpose()).cwiseAbs().maxCoeff() <= 1e-9 * std::max(scale, 1.0))) {
    throw Error(Errc::SingularShapeMatrix, "shape matrix is not symmetric");
  }
  const Eigen::LLT<Eigen::MatrixXd> llt(a);
  if (llt.info() != Eigen::Success) {
    throw Error(Errc::SingularShapeMatrix, "shape matrix is not positive definite");
  }
  const double log_det = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
  return unit_ball_volume(static_cast<std::size_t>(a.rows())) * std::exp(-0.5 * log_det);
}

}  // namespace clusel::geometry
