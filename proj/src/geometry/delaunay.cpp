#include "clusel/geometry/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include <Eigen/Dense>

#include "clusel/error.hpp"
#include "clusel/geometry/predicates.hpp"

namespace clusel::geometry {
namespace {

template <int D>
using Pts = std::array<std::array<double, D>, D + 1>;

template <int D>
int orient(const Pts<D>& q) {
  if constexpr (D == 2) {
    return orient2d(q[0], q[1], q[2]);
  } else {
    return orient3d(q[0], q[1], q[2], q[3]);
  }
}

template <int D>
int in_sphere(const Pts<D>& q, const std::array<double, D>& p) {
  if constexpr (D == 2) {
    return incircle(q[0], q[1], q[2], p);
  } else {
    return insphere(q[0], q[1], q[2], q[3], p);
  }
}

// Super-simplex vertices around a ball of radius r centred at c, far enough
// out that they never sit in the circumsphere of a simplex of the real input
// that matters downstream.
template <int D>
std::array<std::array<double, D>, D + 1> super_vertices(const std::array<double, D>& c, double r) {
  const double s = 1e4 * r;
  std::array<std::array<double, D>, D + 1> v{};
  if constexpr (D == 2) {
    const double k = std::sqrt(3.0) / 2.0;
    const double dirs[3][2] = {{0.0, 2.0}, {-2.0 * k, -1.0}, {2.0 * k, -1.0}};
    for (int i = 0; i < 3; ++i) v[i] = {c[0] + s * dirs[i][0], c[1] + s * dirs[i][1]};
  } else {
    const double dirs[4][3] = {{3, 3, 3}, {3, -3, -3}, {-3, 3, -3}, {-3, -3, 3}};
    for (int i = 0; i < 4; ++i) {
      v[i] = {c[0] + s * dirs[i][0], c[1] + s * dirs[i][1], c[2] + s * dirs[i][2]};
    }
  }
  if (orient<D>(v) < 0) std::swap(v[0], v[1]);
  return v;
}

}  // namespace

template <int D>
double simplex_volume(const Pts<D>& v) {
  if constexpr (D == 2) {
    return ((v[1][0] - v[0][0]) * (v[2][1] - v[0][1]) - (v[1][1] - v[0][1]) * (v[2][0] - v[0][0])) /
           2.0;
  } else {
    const auto& a = v[0];
    const auto& b = v[1];
    const auto& c = v[2];
    const auto& d = v[3];
    const double adx = a[0] - d[0], ady = a[1] - d[1], adz = a[2] - d[2];
    const double bdx = b[0] - d[0], bdy = b[1] - d[1], bdz = b[2] - d[2];
    const double cdx = c[0] - d[0], cdy = c[1] - d[1], cdz = c[2] - d[2];
    return (adx * (bdy * cdz - bdz * cdy) + bdx * (cdy * adz - cdz * ady) +
            cdx * (ady * bdz - adz * bdy)) /
           6.0;
  }
}

template <int D>
double circumradius(const Pts<D>& v) {
  Eigen::Matrix<double, D, D> a;
  Eigen::Matrix<double, D, 1> b;
  for (int i = 0; i < D; ++i) {
    double sq = 0.0;
    for (int f = 0; f < D; ++f) {
      const double d = v[i + 1][f] - v[0][f];
      a(i, f) = d;
      sq += d * d;
    }
    b(i) = 0.5 * sq;
  }
  const auto lu = a.fullPivLu();
  if (!lu.isInvertible()) return std::numeric_limits<double>::infinity();
  return lu.solve(b).norm();
}

template <int D>
Triangulation<D> delaunay(std::span<const std::array<double, D>> points) {
  using Point = std::array<double, D>;
  using Simplex = std::array<std::size_t, D + 1>;
  constexpr std::size_t kNone = Triangulation<D>::kNone;

  Triangulation<D> out;
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  out.vertex_of.resize(points.size());
  for (std::size_t i : order) {
    if (out.vertices.empty() || out.vertices.back() != points[i]) {
      for (double x : points[i]) {
        if (!std::isfinite(x)) throw Error(Errc::DegenerateGeometry, "non-finite coordinate");
      }
      out.vertices.push_back(points[i]);
    }
    out.vertex_of[i] = out.vertices.size() - 1;
  }
  const std::size_t n = out.vertices.size();
  if (n < static_cast<std::size_t>(D) + 1) {
    throw Error(Errc::DegenerateGeometry, "need at least " + std::to_string(D + 1) +
                                              " distinct points");
  }

  Point lo = out.vertices.front();
  Point hi = lo;
  for (const auto& p : out.vertices) {
    for (int f = 0; f < D; ++f) {
      lo[f] = std::min(lo[f], p[f]);
      hi[f] = std::max(hi[f], p[f]);
    }
  }
  Point centre{};
  double radius = 0.0;
  for (int f = 0; f < D; ++f) {
    centre[f] = 0.5 * (lo[f] + hi[f]);
    radius = std::max(radius, hi[f] - lo[f]);
  }

  std::vector<Point> pts = out.vertices;
  const auto sup = super_vertices<D>(centre, radius);
  Simplex first{};
  for (int i = 0; i <= D; ++i) {
    first[i] = pts.size();
    pts.push_back(sup[i]);
  }

  std::vector<Simplex> simp{first};
  std::vector<std::array<std::size_t, D + 1>> nb(1);
  nb[0].fill(kNone);
  std::vector<char> alive{1};
  std::vector<std::uint64_t> visit{0};
  std::vector<char> in_cavity{0};
  std::uint64_t stamp = 0;

  auto corners = [&](const Simplex& s) {
    Pts<D> q;
    for (int i = 0; i <= D; ++i) q[i] = pts[s[i]];
    return q;
  };

  // Random insertion order keeps cavities small on structured inputs.
  std::vector<std::size_t> insertion(n);
  std::iota(insertion.begin(), insertion.end(), std::size_t{0});
  std::mt19937_64 rng(0x5eed);
  std::shuffle(insertion.begin(), insertion.end(), rng);

  std::size_t last = 0;
  std::vector<std::size_t> cavity;
  std::map<std::array<std::size_t, D>, std::pair<std::size_t, int>> open_facets;
  for (std::size_t pid : insertion) {
    const Point& p = pts[pid];

    // Visibility walk to a simplex containing p.
    std::size_t s = last;
    for (unsigned step = 0;; ++step) {
      bool moved = false;
      for (int t = 0; t <= D; ++t) {
        const int i = static_cast<int>((t + step) % (D + 1));
        auto q = corners(simp[s]);
        q[i] = p;
        if (orient<D>(q) < 0) {
          s = nb[s][i];
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }

    // Cavity of simplices whose circumsphere strictly contains p.
    ++stamp;
    cavity.assign(1, s);
    visit[s] = stamp;
    in_cavity[s] = 1;
    for (std::size_t c = 0; c < cavity.size(); ++c) {
      for (int i = 0; i <= D; ++i) {
        const std::size_t o = nb[cavity[c]][i];
        if (o == kNone || visit[o] == stamp) continue;
        visit[o] = stamp;
        if (in_sphere<D>(corners(simp[o]), p) > 0) {
          in_cavity[o] = 1;
          cavity.push_back(o);
        }
      }
    }

    open_facets.clear();
    for (std::size_t c : cavity) {
      for (int i = 0; i <= D; ++i) {
        const std::size_t o = nb[c][i];
        if (o != kNone && in_cavity[o]) continue;
        const std::size_t t = simp.size();
        Simplex ns = simp[c];
        ns[i] = pid;
        simp.push_back(ns);
        nb.emplace_back();
        nb[t].fill(kNone);
        alive.push_back(1);
        visit.push_back(0);
        in_cavity.push_back(0);
        nb[t][i] = o;
        if (o != kNone) {
          for (int k = 0; k <= D; ++k) {
            if (nb[o][k] == c) nb[o][k] = t;
          }
        }
        for (int j = 0; j <= D; ++j) {
          if (j == i) continue;
          std::array<std::size_t, D> key{};
          for (int v = 0, w = 0; v <= D; ++v) {
            if (v != j) key[w++] = ns[v];
          }
          std::sort(key.begin(), key.end());
          auto [it, inserted] = open_facets.try_emplace(key, t, j);
          if (!inserted) {
            nb[t][j] = it->second.first;
            nb[it->second.first][it->second.second] = t;
            open_facets.erase(it);
          }
        }
        last = t;
      }
    }
    for (std::size_t c : cavity) {
      alive[c] = 0;
      in_cavity[c] = 0;
    }
  }

  // Keep simplices of real vertices only.
  std::vector<std::size_t> remap(simp.size(), kNone);
  for (std::size_t s = 0; s < simp.size(); ++s) {
    if (!alive[s]) continue;
    if (std::all_of(simp[s].begin(), simp[s].end(), [&](std::size_t v) { return v < n; })) {
      remap[s] = out.simplices.size();
      out.simplices.push_back(simp[s]);
    }
  }
  if (out.simplices.empty()) {
    throw Error(Errc::DegenerateGeometry, "points are affinely dependent");
  }
  out.neighbours.resize(out.simplices.size());
  for (std::size_t s = 0; s < simp.size(); ++s) {
    if (remap[s] == kNone) continue;
    for (int i = 0; i <= D; ++i) {
      const std::size_t o = nb[s][i];
      out.neighbours[remap[s]][i] = o == kNone ? kNone : remap[o];
    }
  }
  return out;
}

template Triangulation<2> delaunay<2>(std::span<const std::array<double, 2>>);
template Triangulation<3> delaunay<3>(std::span<const std::array<double, 3>>);
template double simplex_volume<2>(const Pts<2>&);
template double simplex_volume<3>(const Pts<3>&);
template double circumradius<2>(const Pts<2>&);
template double circumradius<3>(const Pts<3>&);

}  // namespace clusel::geometry
