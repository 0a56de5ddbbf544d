#pragma once

#include "rdr/field.hpp"
#include "rdr/kernels.hpp"

#include <cstdint>

namespace rdr {

struct NoiseSpec {
  double sigma = 0.0;      // standard deviation in gray levels, >= 0
  std::uint64_t seed = 0;
};

// Deterministic standard-normal field. The generator is pinned for
// reproducibility across platforms: mt19937_64 seeded with spec.seed,
// uniforms mapped as (word >> 11) * 2^-53, and the Box-Muller transform
// applied to consecutive pairs in row-major pixel order. A checksum test
// freezes the first samples; changing the generator is a breaking change.
Image standard_normal_field(Eigen::Index width, Eigen::Index height, std::uint64_t seed);

// field + sigma * N(0,1) samples. sigma = 0 returns the input unchanged.
Image add_gaussian_noise(const Image& field, const NoiseSpec& spec);

// Forward degradation: blur then add noise.
Image degrade(const Image& clean, const Kernel& kernel, const NoiseSpec& spec);

}  // namespace rdr
