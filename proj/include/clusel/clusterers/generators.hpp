#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "clusel/core/dataset.hpp"

namespace clusel::clusterers {

struct RingSpec {
  double inner_radius = 0.25;
  double outer_radius = 0.5;
  double jitter = 0.01;  // radial standard deviation
  double center_x = 0.5;
  double center_y = 0.5;
};

/// Two concentric noisy rings with n/2 points each, inner ring labelled 0.
/// Angles are stratified (one uniform draw per equal sector) so neighbouring
/// samples on a ring stay close. Requires n even and n >= 20.
std::pair<Dataset, Partition> generate_two_ring_dataset(std::size_t n, std::uint64_t seed,
                                                        const RingSpec& spec = {});

/// Isotropic Gaussian blobs of `per_cluster` points in 2-D.
std::pair<Dataset, Partition> generate_gaussian_blobs(
    const std::vector<std::pair<double, double>>& centers, std::size_t per_cluster,
    double sigma, std::uint64_t seed);

/// n points uniform on [0,1]^m.
Dataset generate_uniform_cloud(std::size_t n, std::size_t m, std::uint64_t seed);

/// n points uniform in the annulus r_in <= |x| <= r_out (r_in = 0 gives a disc).
Dataset generate_annulus(std::size_t n, double r_in, double r_out, std::uint64_t seed);

}  // namespace clusel::clusterers
