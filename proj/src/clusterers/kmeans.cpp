#include "clusel/clusterers/kmeans.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "clusel/error.hpp"
#include "clusel/simd/kernels.hpp"

namespace clusel::clusterers {
namespace {

using Centroids = std::vector<std::vector<double>>;

struct Run {
  std::vector<int> labels;
  Centroids centroids;
  std::vector<double> history;
  std::size_t iterations = 0;
  bool converged = false;
};

// k-means++: first seed uniform, later seeds with probability proportional to
// the squared distance to the nearest chosen seed.
Centroids seed_plus_plus(const Dataset& data, const simd::ColumnBlock& block, std::size_t k,
                         std::mt19937_64& rng) {
  const std::size_t n = data.rows();
  std::vector<bool> chosen(n, false);
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
  std::vector<double> d(n);
  Centroids seeds;
  std::size_t pick = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  for (;;) {
    chosen[pick] = true;
    const auto row = data.row(pick);
    seeds.emplace_back(row.begin(), row.end());
    if (seeds.size() == k) break;
    simd::squared_distances(row, block, 0, n, d);
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      nearest[j] = std::min(nearest[j], d[j]);
      total += nearest[j];
    }
    if (total > 0.0) {
      const double target = std::uniform_real_distribution<double>(0.0, total)(rng);
      double acc = 0.0;
      pick = n;
      for (std::size_t j = 0; j < n; ++j) {
        if (nearest[j] == 0.0) continue;
        acc += nearest[j];
        pick = j;
        if (acc > target) break;
      }
    } else {
      // Every row coincides with a seed; take any unchosen row.
      std::vector<std::size_t> rest;
      for (std::size_t j = 0; j < n; ++j) {
        if (!chosen[j]) rest.push_back(j);
      }
      pick = rest[std::uniform_int_distribution<std::size_t>(0, rest.size() - 1)(rng)];
    }
  }
  return seeds;
}

void update_centroids(const Dataset& data, const std::vector<int>& labels, Centroids& centroids) {
  const std::size_t m = data.cols();
  std::vector<std::size_t> count(centroids.size(), 0);
  for (auto& c : centroids) std::fill(c.begin(), c.end(), 0.0);
  for (std::size_t i = 0; i < data.rows(); ++i) {
    const auto c = static_cast<std::size_t>(labels[i]);
    const auto row = data.row(i);
    for (std::size_t f = 0; f < m; ++f) centroids[c][f] += row[f];
    ++count[c];
  }
  for (std::size_t c = 0; c < centroids.size(); ++c) {
    for (double& v : centroids[c]) v /= static_cast<double>(count[c]);
  }
}

double cost(const Dataset& data, const std::vector<int>& labels, const Centroids& centroids) {
  double total = 0.0;
  for (std::size_t i = 0; i < data.rows(); ++i) {
    const auto row = data.row(i);
    const auto& c = centroids[static_cast<std::size_t>(labels[i])];
    for (std::size_t f = 0; f < row.size(); ++f) {
      const double d = row[f] - c[f];
      total += d * d;
    }
  }
  return total;
}

Run lloyd(const Dataset& data, const simd::ColumnBlock& block, Centroids centroids,
          std::size_t max_iters) {
  const std::size_t n = data.rows();
  const std::size_t k = centroids.size();
  Run run;
  run.labels.assign(n, -1);
  std::vector<double> best(n);
  std::vector<double> own(n);
  std::vector<double> d(n);
  while (run.iterations < max_iters) {
    std::fill(best.begin(), best.end(), std::numeric_limits<double>::infinity());
    std::vector<int> next(n, 0);
    for (std::size_t c = 0; c < k; ++c) {
      simd::squared_distances(centroids[c], block, 0, n, d);
      for (std::size_t j = 0; j < n; ++j) {
        if (d[j] < best[j]) {
          best[j] = d[j];
          next[j] = static_cast<int>(c);
        }
      }
    }
    // Empty-cluster repair: move the row farthest from its centroid, taken
    // from a cluster that can spare it.
    std::vector<std::size_t> size(k, 0);
    for (int l : next) ++size[static_cast<std::size_t>(l)];
    for (std::size_t c = 0; c < k; ++c) {
      if (size[c] > 0) continue;
      std::size_t far = n;
      for (std::size_t j = 0; j < n; ++j) {
        if (size[static_cast<std::size_t>(next[j])] < 2) continue;
        if (far == n || best[j] > best[far]) far = j;
      }
      --size[static_cast<std::size_t>(next[far])];
      next[far] = static_cast<int>(c);
      best[far] = 0.0;
      size[c] = 1;
    }
    ++run.iterations;
    const bool changed = next != run.labels;
    run.labels = std::move(next);
    update_centroids(data, run.labels, centroids);
    run.history.push_back(cost(data, run.labels, centroids));
    if (!changed) {
      run.converged = true;
      break;
    }
  }
  run.centroids = std::move(centroids);
  return run;
}

}  // namespace

double within_cluster_ss(const Dataset& data, const Partition& part) {
  require_aligned(data, part);
  const auto stats = cluster_stats(data, part);
  double total = 0.0;
  for (std::size_t i = 0; i < data.rows(); ++i) {
    if (part[i] < 0) continue;
    const auto& c = stats[static_cast<std::size_t>(part[i])].centroid;
    const auto row = data.row(i);
    for (std::size_t f = 0; f < row.size(); ++f) {
      const double d = row[f] - c[f];
      total += d * d;
    }
  }
  return total;
}

KMeansResult kmeans_fit(const Dataset& data, const KMeansConfig& config) {
  if (config.k == 0) throw Error(Errc::InvalidArgument, "k must be at least 1");
  if (config.max_iters == 0) throw Error(Errc::InvalidArgument, "max_iters must be positive");
  if (config.restarts == 0) throw Error(Errc::InvalidArgument, "restarts must be positive");
  if (config.k > data.rows()) {
    throw Error(Errc::KTooLarge, "k = " + std::to_string(config.k) + " exceeds n = " +
                                     std::to_string(data.rows()));
  }
  const simd::ColumnBlock block(data);
  std::mt19937_64 rng(config.seed);
  Run best;
  double best_cost = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < config.restarts; ++r) {
    auto run = lloyd(data, block, seed_plus_plus(data, block, config.k, rng), config.max_iters);
    const double c = run.history.back();
    if (c < best_cost) {
      best_cost = c;
      best = std::move(run);
    }
  }
  Partition part(best.labels);
  // Partition ids are normalised by raw id, which the labels already are.
  return KMeansResult{std::move(part), std::move(best.centroids), best_cost,
                      std::move(best.history), best.iterations, best.converged};
}

Partition kmeans(const Dataset& data, const KMeansConfig& config) {
  return kmeans_fit(data, config).partition;
}

}  // namespace clusel::clusterers
