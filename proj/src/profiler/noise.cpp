#include "clusel/profiler/noise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "clusel/simd/kernels.hpp"

namespace clusel::profiler {

Dataset add_noise(const Dataset& data, std::uint64_t seed) {
  const std::size_t n = data.rows();
  const std::size_t m = data.cols();
  std::vector<double> lo(data.row(0).begin(), data.row(0).end());
  std::vector<double> hi = lo;
  for (std::size_t i = 1; i < n; ++i) {
    const auto r = data.row(i);
    for (std::size_t f = 0; f < m; ++f) {
      lo[f] = std::min(lo[f], r[f]);
      hi[f] = std::max(hi[f], r[f]);
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> values(data.values().begin(), data.values().end());
  values.reserve(2 * n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t f = 0; f < m; ++f) {
      // Clamp guards the rounding of lo + u * (hi - lo) past hi.
      values.push_back(std::min(hi[f], lo[f] + unit(rng) * (hi[f] - lo[f])));
    }
  }
  return Dataset(2 * n, m, std::move(values));
}

std::vector<double> distance_to_mean(const Dataset& data) {
  const auto mean = column_means(data);
  const simd::ColumnBlock block(data);
  std::vector<double> d(data.rows());
  simd::distances(mean, block, 0, data.rows(), d);
  std::sort(d.begin(), d.end());
  return d;
}

std::pair<Histogram, Histogram> shared_histograms(std::span<const double> a,
                                                  std::span<const double> b) {
  const std::size_t total = a.size() + b.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double v : a) lo = std::min(lo, v), hi = std::max(hi, v);
  for (double v : b) lo = std::min(lo, v), hi = std::max(hi, v);
  const auto bins = total == 0 ? std::size_t{1}
                               : static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(total)))) + 1;
  if (!(hi > lo)) {
    lo = total == 0 ? 0.0 : lo - 0.5;
    hi = lo + 1.0;
  }
  Histogram shape;
  shape.edges.resize(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i) {
    shape.edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
  }
  shape.edges.back() = hi;
  shape.counts.assign(bins, 0);
  auto fill = [&](std::span<const double> xs) {
    Histogram h = shape;
    for (double v : xs) {
      auto it = std::upper_bound(h.edges.begin(), h.edges.end(), v);
      auto bin = static_cast<std::size_t>(it - h.edges.begin());
      bin = bin == 0 ? 0 : std::min(bin - 1, bins - 1);
      ++h.counts[bin];
    }
    return h;
  };
  return {fill(a), fill(b)};
}

double ks_statistic(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) return 0.0;
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double nx = static_cast<double>(x.size());
  const double ny = static_cast<double>(y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double sup = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    sup = std::max(sup, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
  }
  return sup;
}

std::string_view to_string(NoiseVerdict v) noexcept {
  switch (v) {
    case NoiseVerdict::LikelyNoisy: return "LIKELY_NOISY";
    case NoiseVerdict::LikelyClean: return "LIKELY_CLEAN";
    case NoiseVerdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "";
}

NoiseReport noise_assessment(const Dataset& data, std::uint64_t seed,
                             const NoiseThresholds& thresholds) {
  const Dataset standard = zscore(data);
  NoiseReport r;
  r.distances_original = distance_to_mean(standard);
  r.distances_noised = distance_to_mean(add_noise(standard, seed));
  auto [ho, hn] = shared_histograms(r.distances_original, r.distances_noised);
  r.hist_original = std::move(ho);
  r.hist_noised = std::move(hn);
  r.ks_statistic = ks_statistic(r.distances_original, r.distances_noised);
  if (data.rows() < thresholds.min_samples) {
    r.verdict = NoiseVerdict::Inconclusive;
  } else if (r.ks_statistic >= thresholds.clean_at_least) {
    r.verdict = NoiseVerdict::LikelyClean;
  } else if (r.ks_statistic <= thresholds.noisy_at_most) {
    r.verdict = NoiseVerdict::LikelyNoisy;
  } else {
    r.verdict = NoiseVerdict::Inconclusive;
  }
  return r;
}

}  // namespace clusel::profiler
