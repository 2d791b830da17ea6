// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (capped at 1 for ctest).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "clusel/clusterers/generators.hpp"
#include "clusel/core/canonical.hpp"
#include "clusel/experiments/table1.hpp"
#include "clusel/geometry/convexity.hpp"
#include "clusel/geometry/mvee.hpp"
#include "clusel/indices/dbcv.hpp"
#include "clusel/indices/dunn.hpp"
#include "clusel/indices/registry.hpp"
#include "clusel/indices/silhouette.hpp"
#include "clusel/kb/selection.hpp"
#include "clusel/profiler/categories.hpp"
#include "clusel/profiler/complexity.hpp"
#include "clusel/profiler/noise.hpp"

#include "oracles.hpp"

using namespace clusel;

namespace {

// Pinned tolerances and sample plans.
constexpr std::uint64_t kTable1Seed = 0;
constexpr std::size_t kTable1N = 300;
constexpr double kTable1Seconds = 30.0;
constexpr double kSilhouetteTol = 1e-9;
constexpr double kCoreDistanceRelTol = 1e-12;
constexpr double kScaleRelTol = 1e-9;
constexpr double kCircleCenterTol = 1e-3;
constexpr double kCircleShapeTol = 1e-3;
constexpr double kEllipseShapeTol = 1e-2;
constexpr double kMveeTolerance = 1e-4;
constexpr std::size_t kMveeMaxIterations = 10000;
constexpr double kTau = 0.7;
constexpr std::size_t kDiscPoints = 2000;
constexpr std::size_t kBlobPoints = 250;  // per blob
constexpr double kBlobSigma = 0.5;
constexpr std::size_t kRingPoints = 300;
constexpr std::size_t kNoisePoints = 200;
constexpr int kSeeds = 20;

struct Line {
  std::string id;
  bool pass = false;
  std::string detail;
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double rel(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

bool same_score(const indices::IndexScore& a, const indices::IndexScore& b) {
  if (a.value.has_value() != b.value.has_value()) return false;
  return !a.value || *a.value == *b.value;
}

// Rows sorted by coordinates, labels carried along.
std::pair<Dataset, Partition> sorted_instance(const Dataset& d, const Partition& p) {
  std::vector<std::size_t> order(d.rows());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return row_less(d.row(a), d.row(b)); });
  std::vector<int> labels;
  for (auto i : order) labels.push_back(p[i]);
  return {d.select_rows(order), Partition(labels)};
}

Line table1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = experiments::reproduce_table1(kTable1Seed, kTable1N);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Line l{"table1-ordering", r.passed && secs < kTable1Seconds, ""};
  for (const auto& c : r.checks) {
    l.detail += "(" + c.id + ")" + (c.passed ? "ok " : "FAILED[" + c.detail + "] ");
  }
  l.detail += "runtime " + num(secs) + "s";
  return l;
}

Line silhouette_oracle() {
  std::mt19937_64 rng(101);
  double worst = 0.0;
  int bad = 0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 3 + rng() % 198;
    const std::size_t m = 1 + rng() % 5;
    const std::size_t k = 2 + rng() % std::min<std::size_t>(6, n - 1);
    const auto data = oracle::random_dataset(rng, n, m);
    const auto part = oracle::random_partition(rng, n, k, 1, t % 3 == 0 ? 0.1 : 0.0);
    const auto fast = indices::silhouette(data, part).average;
    const auto slow = oracle::naive_silhouette(data, part);
    if (!fast || !slow) {
      ++bad;
      continue;
    }
    worst = std::max(worst, std::abs(*fast - *slow));
  }
  return {"silhouette-oracle", bad == 0 && worst <= kSilhouetteTol,
          "50 pairs, max |diff| " + num(worst) + ", undefined " + std::to_string(bad)};
}

Line dbcv_oracle() {
  std::mt19937_64 rng(202);
  int mismatches = 0;
  double worst_core = 0.0;
  for (int t = 0; t < 20; ++t) {
    const std::size_t k = 2 + rng() % 2;
    const std::size_t n = 2 * k + rng() % (16 - 2 * k);
    const std::size_t m = 1 + rng() % 3;
    const auto raw = oracle::random_dataset(rng, n, m);
    const auto raw_part = oracle::random_partition(rng, n, k, 2, 0.1);
    const auto [data, part] = sorted_instance(raw, raw_part);
    const auto groups = part.members();
    std::vector<std::vector<double>> core;
    for (const auto& g : groups) {
      const auto members = data.select_rows(g);
      core.push_back(indices::all_points_core_distances(members));
      const auto naive = oracle::naive_core_distances(members);
      for (std::size_t i = 0; i < naive.size(); ++i) {
        worst_core = std::max(worst_core, rel(core.back()[i], naive[i]));
      }
    }
    const auto want = oracle::dbcv_oracle(data, part, core);
    const auto got = indices::dbcv(data, part);
    if (got.dsc != want.dsc) ++mismatches;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        if (a != b && got.dspc_matrix[a * k + b] != want.dspc_matrix[a * k + b]) ++mismatches;
      }
    }
  }
  int out_of_range = 0;
  int undefined = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 8 + rng() % 73;
    const std::size_t k = 2 + rng() % 3;
    const std::size_t m = 1 + rng() % 4;
    const auto data = oracle::random_dataset(rng, n, m);
    const auto part = oracle::random_partition(rng, n, k, 2, t % 2 ? 0.2 : 0.0);
    const auto r = indices::dbcv(data, part);
    if (!r.total) ++undefined;
    else if (!(*r.total >= -1.0 && *r.total <= 1.0)) ++out_of_range;
  }
  return {"dbcv-oracle",
          mismatches == 0 && worst_core <= kCoreDistanceRelTol && out_of_range == 0 && undefined == 0,
          "20 instances: " + std::to_string(mismatches) + " DSC/DSPC mismatches, core rel err " +
              num(worst_core) + "; 200 partitions: " + std::to_string(out_of_range) +
              " totals outside [-1,1], " + std::to_string(undefined) + " undefined"};
}

Line invariance() {
  std::mt19937_64 rng(303);
  std::vector<std::string> broken;
  double worst_scale = 0.0;
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 12 + rng() % 60;
    const std::size_t k = 2 + rng() % 3;
    const std::size_t m = 1 + rng() % 3;
    const auto data = oracle::random_dataset(rng, n, m);
    const auto part = oracle::random_partition(rng, n, k, 3, t % 4 == 0 ? 0.1 : 0.0);
    const auto [pd, pp] = oracle::permute(rng, data, part);
    for (auto name : indices::kIndexNames) {
      if (!same_score(indices::compute_index(name, data, part),
                      indices::compute_index(name, pd, pp))) {
        broken.push_back(std::string(name) + "#" + std::to_string(t));
      }
    }
    for (double f : {3.7, 1e-3, 250.0}) {
      const auto sd = oracle::scaled(data, f);
      for (auto name : {"silhouette", "dunn"}) {
        const auto a = indices::compute_index(name, data, part);
        const auto b = indices::compute_index(name, sd, part);
        if (!a.value || !b.value) {
          broken.push_back(std::string(name) + " undefined");
          continue;
        }
        worst_scale = std::max(worst_scale, rel(*a.value, *b.value));
      }
    }
  }
  std::string detail = "permutation/relabel breaks: " + std::to_string(broken.size());
  for (const auto& b : broken) detail += " " + b;
  detail += "; scale rel err " + num(worst_scale);
  return {"index-invariance", broken.empty() && worst_scale <= kScaleRelTol, detail};
}

Line mvee_check() {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
  geometry::MveeOptions opts{kMveeTolerance, kMveeMaxIterations};
  double center_err = 0.0, circle_err = 0.0, ellipse_err = 0.0, worst_q = 0.0;
  std::size_t max_iter = 0;
  bool converged = true;
  for (int t = 0; t < 10; ++t) {
    for (int shape = 0; shape < 2; ++shape) {
      const double ax = shape == 0 ? 1.0 : 2.0;
      std::vector<double> v;
      for (int i = 0; i < 200; ++i) {
        const double a = angle(rng);
        v.push_back(ax * std::cos(a));
        v.push_back(std::sin(a));
      }
      const Dataset pts(200, 2, v);
      geometry::MveeResult r;
      try {
        r = geometry::mvee(pts, opts);
      } catch (const std::exception&) {
        converged = false;
        continue;
      }
      max_iter = std::max(max_iter, r.iterations);
      const auto& e = r.ellipsoid;
      Eigen::Matrix2d want = Eigen::Matrix2d::Identity();
      want(0, 0) = 1.0 / (ax * ax);
      const double err = (e.shape - want).cwiseAbs().maxCoeff();
      if (shape == 0) {
        center_err = std::max(center_err, e.center.cwiseAbs().maxCoeff());
        circle_err = std::max(circle_err, err);
      } else {
        ellipse_err = std::max(ellipse_err, err);
      }
      for (std::size_t i = 0; i < pts.rows(); ++i) {
        const Eigen::Vector2d x(pts(i, 0), pts(i, 1));
        const Eigen::Vector2d d = x - e.center;
        worst_q = std::max(worst_q, d.dot(e.shape * d));
      }
    }
  }
  const double slack = 1.0 + kMveeTolerance * 3.0 / 2.0;
  const bool pass = converged && center_err <= kCircleCenterTol && circle_err <= kCircleShapeTol &&
                    ellipse_err <= kEllipseShapeTol && worst_q <= slack &&
                    max_iter < kMveeMaxIterations;
  return {"mvee", pass,
          "circle centre err " + num(center_err) + ", circle shape err " + num(circle_err) +
              ", ellipse shape err " + num(ellipse_err) + ", max (x-c)'A(x-c) " + num(worst_q) +
              " (slack " + num(slack) + "), max iterations " + std::to_string(max_iter)};
}

Line convexity() {
  geometry::ConvexityOptions opts;
  opts.tau = kTau;
  int disc_ok = 0, annulus_ok = 0, blobs_ok = 0, rings_ok = 0;
  double disc_min = 1e9, annulus_max = 0.0, blobs_max = 0.0, rings_max = 0.0;
  for (int s = 0; s < kSeeds; ++s) {
    const auto seed = static_cast<std::uint64_t>(s);
    const auto disc = geometry::estimate_convexity_cluster(
        clusterers::generate_annulus(kDiscPoints, 0.0, 1.0, seed), opts);
    const auto ring = geometry::estimate_convexity_cluster(
        clusterers::generate_annulus(kDiscPoints, 0.8, 1.0, seed), opts);
    disc_ok += disc.is_convex;
    annulus_ok += !ring.is_convex;
    disc_min = std::min(disc_min, disc.ratio);
    annulus_max = std::max(annulus_max, ring.ratio);

    const auto [blobs, bp] = clusterers::generate_gaussian_blobs(
        {{0.0, 0.0}, {3.0, 0.0}, {0.0, 3.0}, {3.0, 3.0}}, kBlobPoints, kBlobSigma, seed);
    const auto rb = geometry::estimate_convexity_dataset(blobs, 4, seed, opts);
    blobs_ok += rb.is_convex;
    blobs_max = std::max(blobs_max, rb.ratio);
    const auto [rings, rp] = clusterers::generate_two_ring_dataset(kRingPoints, seed);
    const auto rr = geometry::estimate_convexity_dataset(rings, 2, seed, opts);
    rings_ok += !rr.is_convex;
    rings_max = std::max(rings_max, rr.ratio);
  }
  const bool pass = disc_ok == kSeeds && annulus_ok == kSeeds && blobs_ok >= 18 && rings_ok >= 18;
  return {"convexity", pass,
          "disc convex " + std::to_string(disc_ok) + "/20 (min " + num(disc_min) +
              "), annulus non-convex " + std::to_string(annulus_ok) + "/20 (max " +
              num(annulus_max) + "), blobs k=4 convex " + std::to_string(blobs_ok) +
              "/20 (max " + num(blobs_max) + "), rings k=2 non-convex " +
              std::to_string(rings_ok) + "/20 (max " + num(rings_max) + ")"};
}

Line thresholds() {
  using profiler::DimensionCategory;
  using profiler::SizeCategory;
  const bool pass = profiler::size_category(50) == SizeCategory::Small &&
                    profiler::size_category(51) == SizeCategory::Medium &&
                    profiler::size_category(10000) == SizeCategory::Medium &&
                    profiler::size_category(10001) == SizeCategory::Large &&
                    profiler::dimension_category(10) == DimensionCategory::Low &&
                    profiler::dimension_category(11) == DimensionCategory::High;
  return {"category-thresholds", pass, "n 50/51/10000/10001, m 10/11"};
}

Line complexity_ranking() {
  const std::vector<profiler::ComplexityEntry> entries = {
      {"linear", {profiler::ComplexityExpr::parse("n*k*m")}},
      {"quadratic", {profiler::ComplexityExpr::parse("n^2")}},
  };
  const double grid[] = {2.0, 1000.0};
  const auto r = profiler::rank_computing_velocity(1000, 2, entries, grid);
  const auto& a = r.rankings[0].ranking;
  const auto& b = r.rankings[1].ranking;
  const bool pass = a[0].name == "linear" && a[0].steps == 4.0 && a[1].steps == 1000.0 &&
                    b[1].name == "linear" && b[1].steps == 2000.0 && b[0].steps == 1000.0;
  return {"complexity-ranking", pass,
          "k=2: " + a[0].name + " " + num(a[0].steps) + ", " + a[1].name + " " + num(a[1].steps) +
              "; k=1000: " + b[0].name + " " + num(b[0].steps) + ", " + b[1].name + " " +
              num(b[1].steps)};
}

Line decision_trees() {
  const auto kb = kb::load_kb(kb::default_kb_path());
  auto set_of = [](const kb::Recommendation& r) {
    return std::set<std::string>(r.candidates.begin(), r.candidates.end());
  };
  const auto small = kb::decision_tree_algorithms(
      kb, {{"k_known", {"yes"}}, {"convex", {"yes"}}, {"size", {"small"}}});
  const auto large = kb::decision_tree_algorithms(
      kb, {{"k_known", {"yes"}}, {"convex", {"yes"}}, {"size", {"large"}}});
  const auto idx = kb::decision_tree_indices(
      kb, {{"arbitrary_shapes", {"yes"}}, {"noise_preprocessing_ok", {"no"}}});
  const bool pass = set_of(small) == std::set<std::string>{"k-means", "PAM"} &&
                    set_of(large) == std::set<std::string>{"CLARA", "CLARANS"} &&
                    set_of(idx) == std::set<std::string>{"DBCV"};
  auto join = [](const kb::Recommendation& r) {
    std::string s;
    for (const auto& c : r.candidates) s += (s.empty() ? "" : ",") + c;
    return "{" + s + "}";
  };
  return {"decision-trees", pass,
          "small " + join(small) + ", large " + join(large) + ", validation " + join(idx)};
}

Line noise() {
  int clean = 0, noisy = 0;
  for (int s = 0; s < kSeeds; ++s) {
    const auto seed = static_cast<std::uint64_t>(s);
    const auto [blobs, p] = clusterers::generate_gaussian_blobs({{0.25, 0.25}, {0.75, 0.75}},
                                                                kNoisePoints / 2, 0.05, seed);
    clean += profiler::noise_assessment(blobs, seed).verdict == profiler::NoiseVerdict::LikelyClean;
    const auto cloud = clusterers::generate_uniform_cloud(kNoisePoints, 2, seed);
    noisy += profiler::noise_assessment(cloud, seed).verdict == profiler::NoiseVerdict::LikelyNoisy;
  }
  const profiler::NoiseThresholds th;
  return {"noise-assessment", clean >= 18 && noisy >= 18,
          "two blobs LIKELY_CLEAN " + std::to_string(clean) + "/20, uniform LIKELY_NOISY " +
              std::to_string(noisy) + "/20 (clean >= " + num(th.clean_at_least) +
              ", noisy <= " + num(th.noisy_at_most) + ")"};
}

kb::Criteria random_criteria(std::mt19937_64& rng, kb::Table table) {
  std::vector<const kb::Dimension*> dims;
  for (const auto& d : kb::dimensions(table)) {
    if (d.kind != kb::DimKind::Text && d.kind != kb::DimKind::Expression) dims.push_back(&d);
  }
  kb::Criteria c;
  const std::size_t take = rng() % 3;
  for (std::size_t i = 0; i < take; ++i) {
    const auto& d = *dims[rng() % dims.size()];
    if (d.kind == kb::DimKind::Bool) c.push_back({d.name, rng() % 2 ? "yes" : "no"});
    else c.push_back({d.name, d.allowed[rng() % d.allowed.size()]});
  }
  return c;
}

Line kb_integrity() {
  const auto kb = kb::load_kb(kb::default_kb_path());
  std::mt19937_64 rng(505);
  int violations = 0;
  for (int t = 0; t < 100; ++t) {
    const auto table = t % 2 ? kb::Table::Indices : kb::Table::Algorithms;
    const auto c1 = random_criteria(rng, table);
    auto both = c1;
    const auto c2 = random_criteria(rng, table);
    both.insert(both.end(), c2.begin(), c2.end());
    const auto wide = kb::filter(kb, table, c1).candidates;
    for (const auto& name : kb::filter(kb, table, both).candidates) {
      if (std::find(wide.begin(), wide.end(), name) == wide.end()) ++violations;
    }
  }
  const auto text = kb::export_kb_string(kb);
  const auto again = kb::parse_kb(text);
  const bool round_trip = again == kb && kb::export_kb_string(again) == text;
  const bool sizes = kb.algorithms.size() >= 10 && kb.indices.size() >= 5;
  return {"kb-integrity", sizes && violations == 0 && round_trip,
          std::to_string(kb.algorithms.size()) + " algorithms, " +
              std::to_string(kb.indices.size()) + " indices; monotonicity violations " +
              std::to_string(violations) + "/100 pairs; round-trip " +
              (round_trip ? "byte-identical" : "DIFFERS")};
}

}  // namespace

int main() {
  const std::vector<std::function<Line()>> checks = {
      table1,     silhouette_oracle, dbcv_oracle,    invariance, mvee_check, convexity,
      thresholds, complexity_ranking,          decision_trees, noise,      kb_integrity,
  };
  int failed = 0;
  for (const auto& check : checks) {
    Line l;
    try {
      l = check();
    } catch (const std::exception& e) {
      l.pass = false;
      l.detail = std::string("exception: ") + e.what();
    }
    if (!l.pass) ++failed;
    std::printf("%s  %-20s %s\n", l.pass ? "PASS" : "FAIL", l.id.c_str(), l.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(checks.size()) - failed, checks.size());
  return failed == 0 ? 0 : 1;
}
