#include <cmath>
#include <random>

#include "doctest.h"

#include "clusel/clusterers/generators.hpp"
#include "clusel/error.hpp"
#include "clusel/geometry/alpha_shape.hpp"
#include "clusel/geometry/convexity.hpp"
#include "clusel/geometry/delaunay.hpp"
#include "clusel/geometry/mvee.hpp"
#include "clusel/geometry/predicates.hpp"

using namespace clusel;
using namespace clusel::geometry;

namespace {

Dataset grid(std::size_t side, double step) {
  std::vector<double> v;
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      v.push_back(static_cast<double>(i) * step);
      v.push_back(static_cast<double>(j) * step);
    }
  }
  return Dataset(side * side, 2, v);
}

}  // namespace

TEST_CASE("filtered predicates agree with exact arithmetic") {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto p2 = [&] { return Point2{u(rng), u(rng)}; };
  auto p3 = [&] { return Point3{u(rng), u(rng), u(rng)}; };
  for (int t = 0; t < 2000; ++t) {
    const auto a = p2(), b = p2(), c = p2(), d = p2();
    CHECK(orient2d(a, b, c) == orient2d_exact(a, b, c));
    CHECK(incircle(a, b, c, d) == incircle_exact(a, b, c, d));
    const auto e = p3(), f = p3(), g = p3(), h = p3(), i = p3();
    CHECK(orient3d(e, f, g, h) == orient3d_exact(e, f, g, h));
    CHECK(insphere(e, f, g, h, i) == insphere_exact(e, f, g, h, i));
  }
}

TEST_CASE("predicates on degenerate and near-degenerate input") {
  CHECK(orient2d({0, 0}, {1, 1}, {2, 2}) == 0);
  CHECK(orient2d({0.1, 0.1}, {0.3, 0.3}, {0.7, 0.7}) == 0);
  const double tiny = std::nextafter(0.5, 1.0);
  CHECK(orient2d({0, 0}, {1, 1}, {0.5, tiny}) == 1);
  CHECK(orient2d({0, 0}, {1, 1}, {tiny, 0.5}) == -1);
  CHECK(incircle({0, 0}, {1, 0}, {0, 1}, {1, 1}) == 0);
  CHECK(incircle({0, 0}, {1, 0}, {0, 1}, {0.5, 0.5}) == 1);
  CHECK(orient3d({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {5, 5, 0}) == 0);
  CHECK(insphere({1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}) == 0);
  // Many near-collinear triples around one line.
  for (int i = 1; i < 200; ++i) {
    const Point2 c{0.5 + i * 1e-17, 0.5};
    CHECK(orient2d({0.1, 0.1}, {0.9, 0.9}, c) == orient2d_exact({0.1, 0.1}, {0.9, 0.9}, c));
  }
}

TEST_CASE("delaunay triangles have empty circumcircles") {
  std::mt19937_64 rng(72);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Point2> pts(300);
  for (auto& p : pts) p = {u(rng), u(rng)};
  pts.push_back(pts[3]);  // duplicate
  const auto t = delaunay<2>(pts);
  CHECK(t.vertices.size() == 300);
  CHECK(t.vertex_of[300] == t.vertex_of[3]);
  double area = 0.0;
  for (const auto& s : t.simplices) {
    const auto& a = t.vertices[s[0]];
    const auto& b = t.vertices[s[1]];
    const auto& c = t.vertices[s[2]];
    CHECK(orient2d(a, b, c) > 0);
    area += simplex_volume<2>({a, b, c});
    for (const auto& v : t.vertices) CHECK(incircle(a, b, c, v) <= 0);
  }
  // Euler: 2n - 2 - h triangles for n vertices with h on the hull.
  std::size_t hull_facets = 0;
  for (const auto& nb : t.neighbours) {
    for (auto x : nb) hull_facets += x == Triangulation<2>::kNone;
  }
  CHECK(t.simplices.size() == 2 * 300 - 2 - hull_facets);
  CHECK(area > 0.9);
}

TEST_CASE("delaunay in 3-D and degenerate input") {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Point3> pts(60);
  for (auto& p : pts) p = {u(rng), u(rng), u(rng)};
  const auto t = delaunay<3>(pts);
  for (const auto& s : t.simplices) {
    const auto& a = t.vertices[s[0]];
    const auto& b = t.vertices[s[1]];
    const auto& c = t.vertices[s[2]];
    const auto& d = t.vertices[s[3]];
    CHECK(orient3d(a, b, c, d) > 0);
    for (const auto& v : t.vertices) CHECK(insphere(a, b, c, d, v) <= 0);
  }
  const std::vector<Point2> line{{0, 0}, {1, 1}, {2, 2}};
  try {
    delaunay<2>(line);
    FAIL("expected DegenerateGeometry");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegenerateGeometry);
  }
}

TEST_CASE("circumradius") {
  CHECK(circumradius<2>({Point2{0, 0}, Point2{2, 0}, Point2{0, 2}}) == doctest::Approx(std::sqrt(2.0)));
  CHECK(std::isinf(circumradius<2>({Point2{0, 0}, Point2{1, 1}, Point2{2, 2}})));
}

TEST_CASE("alpha shape of a square grid") {
  const auto fixed = alpha_shape(grid(11, 0.1), 0.1);
  CHECK(fixed.volume == doctest::Approx(1.0));
  REQUIRE(fixed.loops.size() == 1);
  CHECK(fixed.boundary_vertices.size() == 40);
  CHECK(boundary_points(fixed).rows() == 40);

  // Every lattice triangle has the same radius up to rounding, so the
  // smallest connecting alpha can leave a few cells out.
  const auto s = alpha_shape(grid(11, 0.1));
  CHECK(s.alpha == doctest::Approx(std::sqrt(2.0) * 0.05).epsilon(1e-12));
  CHECK(s.volume <= 1.0 + 1e-12);
  CHECK(s.volume > 0.9);
}

TEST_CASE("alpha shape keeps a hole") {
  // 9x9 lattice without its centre 3x3 block. The four corner cells of the
  // gap keep one triangle each: 64 - 16 + 4 * 0.5.
  const auto g = grid(9, 1.0);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    const double x = g(i, 0), y = g(i, 1);
    if (!(x > 2.5 && x < 5.5 && y > 2.5 && y < 5.5)) keep.push_back(i);
  }
  const auto s = alpha_shape(g.select_rows(keep));
  CHECK(s.volume == doctest::Approx(50.0));
  CHECK(s.loops.size() == 2);
  const auto wide = alpha_shape(g.select_rows(keep), 100.0);
  CHECK(wide.volume == doctest::Approx(64.0));
  CHECK(wide.loops.size() == 1);
}

TEST_CASE("alpha shape input checks") {
  try {
    alpha_shape(Dataset(3, 1, {0, 1, 2}));
    FAIL("expected DimensionUnsupported");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DimensionUnsupported);
  }
  try {
    alpha_shape(Dataset(3, 2, {0, 0, 1, 1, 2, 2}));
    FAIL("expected DegenerateGeometry");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegenerateGeometry);
  }
}

TEST_CASE("mvee of a square and a rotated box") {
  const auto r = mvee(Dataset(4, 2, {1, 1, -1, 1, -1, -1, 1, -1}), {1e-9, 10000});
  CHECK(r.ellipsoid.center.norm() < 1e-6);
  CHECK(r.ellipsoid.shape(0, 0) == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(r.ellipsoid.shape(1, 1) == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(std::abs(r.ellipsoid.shape(0, 1)) < 1e-6);
  CHECK(ellipsoid_volume(r.ellipsoid) == doctest::Approx(2.0 * M_PI).epsilon(1e-6));

  // Tetrahedron-free 3-D: corners of the unit cube, centred at 0.5.
  std::vector<double> cube;
  for (int i = 0; i < 8; ++i) {
    cube.push_back(i & 1);
    cube.push_back((i >> 1) & 1);
    cube.push_back((i >> 2) & 1);
  }
  const auto c = mvee(Dataset(8, 3, cube), {1e-9, 10000});
  for (int k = 0; k < 3; ++k) {
    CHECK(c.ellipsoid.center(k) == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(c.ellipsoid.shape(k, k) == doctest::Approx(4.0 / 3.0).epsilon(1e-6));
  }
  CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * M_PI / 3.0));
}

TEST_CASE("mvee errors") {
  try {
    mvee(Dataset(3, 2, {0, 0, 1, 1, 2, 2}));
    FAIL("expected DegenerateGeometry");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegenerateGeometry);
  }
  std::mt19937_64 rng(74);
  std::normal_distribution<double> g;
  std::vector<double> v(400);
  for (auto& x : v) x = g(rng);
  try {
    mvee(Dataset(200, 2, v), {1e-12, 2});
    FAIL("expected NonConvergence");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonConvergence);
  }
  Ellipsoid bad{Eigen::VectorXd::Zero(2), Eigen::MatrixXd::Zero(2, 2)};
  try {
    ellipsoid_volume(bad);
    FAIL("expected SingularShapeMatrix");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SingularShapeMatrix);
  }
}

TEST_CASE("convexity of reference shapes") {
  // A filled square against its circumscribed circle gives 2/pi, under 0.7.
  const auto square = estimate_convexity_cluster(grid(21, 0.05));
  CHECK(square.ratio == doctest::Approx(2.0 / M_PI).epsilon(1e-3));
  CHECK_FALSE(square.is_convex);

  const auto disc = estimate_convexity_cluster(clusterers::generate_annulus(2000, 0.0, 1.0, 1));
  CHECK(disc.is_convex);
  const auto ring = estimate_convexity_cluster(clusterers::generate_annulus(2000, 0.8, 1.0, 1));
  CHECK_FALSE(ring.is_convex);
  CHECK(ring.ratio < 0.4);

  const auto [rings, p] = clusterers::generate_two_ring_dataset(300, 1);
  const auto r = estimate_convexity_dataset(rings, 2, 1);
  CHECK_FALSE(r.is_convex);
  CHECK(r.per_cluster.size() + r.skipped.size() == 2);
}

TEST_CASE("convexity skips tiny clusters and projects to 2-D") {
  std::vector<double> v{0, 0, 1, 0, 0, 1, 1, 1, 0.5, 0.5, 50, 50};
  const auto r = estimate_convexity_dataset(Dataset(6, 2, v), 2, 0);
  CHECK(r.skipped.size() == 1);
  CHECK(r.per_cluster.size() == 1);

  std::mt19937_64 rng(75);
  std::normal_distribution<double> g;
  std::vector<double> w;
  for (int i = 0; i < 100; ++i) {
    const double a = g(rng) * 5.0, b = g(rng);
    w.insert(w.end(), {a, b, 0.01 * g(rng), a - b});
  }
  const auto proj = project_pca2d(Dataset(100, 4, w));
  CHECK(proj.cols() == 2);
  CHECK(proj.rows() == 100);
}
