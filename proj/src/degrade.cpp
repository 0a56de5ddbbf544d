#include "rdr/degrade.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace rdr {

Image standard_normal_field(Eigen::Index width, Eigen::Index height, std::uint64_t seed) {
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("standard_normal_field: sizes must be positive");
  }
  std::mt19937_64 engine(seed);
  const auto uniform = [&engine]() {
    // [0, 1) with 53 random bits; the log argument below uses 1 - u in (0, 1].
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
  };

  Image out(height, width);
  const Eigen::Index total = width * height;
  for (Eigen::Index i = 0; i < total; i += 2) {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    const double z0 = r * std::cos(theta);
    const double z1 = r * std::sin(theta);
    // row-major pixel order: index k -> (y, x) = (k / W, k % W)
    out(i / width, i % width) = z0;
    if (i + 1 < total) out((i + 1) / width, (i + 1) % width) = z1;
  }
  return out;
}

Image add_gaussian_noise(const Image& field, const NoiseSpec& spec) {
  require_nonempty(field, "add_gaussian_noise");
  require_finite(field, "add_gaussian_noise");
  if (!(spec.sigma >= 0.0)) {
    throw std::invalid_argument("add_gaussian_noise: sigma must be >= 0");
  }
  if (spec.sigma == 0.0) return field;
  return field + spec.sigma * standard_normal_field(field.cols(), field.rows(), spec.seed);
}

Image degrade(const Image& clean, const Kernel& kernel, const NoiseSpec& spec) {
  const KernelSpectrum ks = kernel_spectrum(kernel, clean.cols(), clean.rows());
  return add_gaussian_noise(convolve(clean, ks), spec);
}

}  // namespace rdr
