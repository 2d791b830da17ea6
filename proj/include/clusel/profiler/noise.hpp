#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <string_view>
#include <vector>

#include "clusel/core/dataset.hpp"

namespace clusel::profiler {

/// Appends n rows drawn uniformly from each feature's [min, max].
Dataset add_noise(const Dataset& data, std::uint64_t seed);

/// Euclidean distance of every row to the column mean, ascending.
std::vector<double> distance_to_mean(const Dataset& data);

struct Histogram {
  std::vector<double> edges;         // bins + 1 ascending edges
  std::vector<std::size_t> counts;   // last bin is closed on the right
};

/// Histograms over shared edges spanning both samples, with a Sturges bin
/// count for the pooled size.
std::pair<Histogram, Histogram> shared_histograms(std::span<const double> a,
                                                  std::span<const double> b);

/// Two-sample Kolmogorov-Smirnov statistic: sup |F_a - F_b|.
double ks_statistic(std::span<const double> a, std::span<const double> b);

enum class NoiseVerdict { LikelyNoisy, LikelyClean, Inconclusive };
std::string_view to_string(NoiseVerdict v) noexcept;

struct NoiseThresholds {
  double clean_at_least = 0.15;
  double noisy_at_most = 0.10;
  std::size_t min_samples = 20;
};

struct NoiseReport {
  std::vector<double> distances_original;  // sorted
  std::vector<double> distances_noised;    // sorted, 2n values
  Histogram hist_original;
  Histogram hist_noised;
  double ks_statistic = 0.0;
  NoiseVerdict verdict = NoiseVerdict::Inconclusive;
};

/// Standardises the data, injects uniform noise and compares the distance-to-
/// mean distributions before and after. A large shift suggests clean data,
/// a small one data that is already noisy. The verdict is a heuristic.
/// Throws ZeroVarianceColumn for constant columns.
NoiseReport noise_assessment(const Dataset& data, std::uint64_t seed,
                             const NoiseThresholds& thresholds = {});

}  // namespace clusel::profiler
