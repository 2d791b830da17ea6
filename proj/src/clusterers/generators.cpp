#include "clusel/clusterers/generators.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "clusel/error.hpp"

namespace clusel::clusterers {

std::pair<Dataset, Partition> generate_two_ring_dataset(std::size_t n, std::uint64_t seed,
                                                        const RingSpec& spec) {
  if (n < 20 || n % 2 != 0) {
    throw Error(Errc::InvalidArgument, "two-ring generator needs an even n >= 20");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> jitter(0.0, spec.jitter);
  const std::size_t per_ring = n / 2;
  std::vector<double> values;
  values.reserve(2 * n);
  std::vector<int> labels;
  labels.reserve(n);
  const double radii[2] = {spec.inner_radius, spec.outer_radius};
  for (int ring = 0; ring < 2; ++ring) {
    for (std::size_t i = 0; i < per_ring; ++i) {
      const double theta = 2.0 * std::numbers::pi * (static_cast<double>(i) + unit(rng)) /
                           static_cast<double>(per_ring);
      const double r = radii[ring] + jitter(rng);
      values.push_back(spec.center_x + r * std::cos(theta));
      values.push_back(spec.center_y + r * std::sin(theta));
      labels.push_back(ring);
    }
  }
  return {Dataset(n, 2, std::move(values)), Partition(std::move(labels))};
}

std::pair<Dataset, Partition> generate_gaussian_blobs(
    const std::vector<std::pair<double, double>>& centers, std::size_t per_cluster,
    double sigma, std::uint64_t seed) {
  if (centers.empty() || per_cluster == 0) {
    throw Error(Errc::InvalidArgument, "blob generator needs at least one point");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, sigma);
  std::vector<double> values;
  std::vector<int> labels;
  for (std::size_t c = 0; c < centers.size(); ++c) {
    for (std::size_t i = 0; i < per_cluster; ++i) {
      values.push_back(centers[c].first + noise(rng));
      values.push_back(centers[c].second + noise(rng));
      labels.push_back(static_cast<int>(c));
    }
  }
  const std::size_t n = labels.size();
  return {Dataset(n, 2, std::move(values)), Partition(std::move(labels))};
}

Dataset generate_uniform_cloud(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> values(n * m);
  for (double& v : values) v = unit(rng);
  return Dataset(n, m, std::move(values));
}

Dataset generate_annulus(std::size_t n, double r_in, double r_out, std::uint64_t seed) {
  if (!(r_out > r_in) || r_in < 0.0) throw Error(Errc::InvalidArgument, "need 0 <= r_in < r_out");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> values;
  values.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    // Area-uniform radius.
    const double r = std::sqrt(r_in * r_in + unit(rng) * (r_out * r_out - r_in * r_in));
    const double theta = 2.0 * std::numbers::pi * unit(rng);
    values.push_back(r * std::cos(theta));
    values.push_back(r * std::sin(theta));
  }
  return Dataset(n, 2, std::move(values));
}

}  // namespace clusel::clusterers
