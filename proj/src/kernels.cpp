#include "rdr/kernels.hpp"

#include "rdr/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace rdr {

namespace {

// Drop all-zero border rings, keeping the stencil centered on its origin.
Kernel crop_centered(const Eigen::ArrayXXd& taps, Eigen::Index cx, Eigen::Index cy) {
  const Eigen::Index H = taps.rows(), W = taps.cols();
  Eigen::Index mx = 0, my = 0;
  for (Eigen::Index y = 0; y < H; ++y) {
    for (Eigen::Index x = 0; x < W; ++x) {
      if (taps(y, x) != 0.0) {
        mx = std::max(mx, std::abs(x - cx));
        my = std::max(my, std::abs(y - cy));
      }
    }
  }
  Kernel k;
  k.taps = taps.block(cy - my, cx - mx, 2 * my + 1, 2 * mx + 1);
  k.origin_x = mx;
  k.origin_y = my;
  return k;
}

}  // namespace

Kernel average_kernel(int n) {
  if (n < 1 || n % 2 == 0) {
    throw std::invalid_argument("average_kernel: n must be an odd positive integer");
  }
  Kernel k;
  k.taps = Eigen::ArrayXXd::Constant(n, n, 1.0 / (static_cast<double>(n) * n));
  k.origin_x = n / 2;
  k.origin_y = n / 2;
  k.normalized = true;
  return k;
}

Kernel disk_kernel(double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("disk_kernel: radius must be > 0");
  const auto r = static_cast<Eigen::Index>(std::ceil(radius));
  const Eigen::Index n = 2 * r + 1;
  Eigen::ArrayXXd taps = Eigen::ArrayXXd::Zero(n, n);
  int count = 0;
  for (Eigen::Index dy = -r; dy <= r; ++dy) {
    for (Eigen::Index dx = -r; dx <= r; ++dx) {
      if (static_cast<double>(dx * dx + dy * dy) <= radius * radius) {
        taps(dy + r, dx + r) = 1.0;
        ++count;
      }
    }
  }
  taps /= static_cast<double>(count);
  Kernel k = crop_centered(taps, r, r);
  k.normalized = true;
  return k;
}

Kernel motion_kernel(double length, double angle) {
  if (!(length >= 1.0)) throw std::invalid_argument("motion_kernel: length must be >= 1");
  const int n = static_cast<int>(std::ceil(length));
  const double half = (length - 1.0) / 2.0;
  const double step = (n > 1) ? (length - 1.0) / (n - 1) : 0.0;
  const double cx = std::cos(angle), cy = std::sin(angle);

  const auto r = static_cast<Eigen::Index>(std::ceil(half)) + 1;
  const Eigen::Index size = 2 * r + 1;
  Eigen::ArrayXXd taps = Eigen::ArrayXXd::Zero(size, size);

  // Unit-spaced samples along the segment, each splitting its weight over
  // the four surrounding pixels.
  for (int s = 0; s < n; ++s) {
    const double t = -half + step * s;
    const double px = t * cx, py = t * cy;
    const auto x0 = static_cast<Eigen::Index>(std::floor(px));
    const auto y0 = static_cast<Eigen::Index>(std::floor(py));
    const double fx = px - static_cast<double>(x0);
    const double fy = py - static_cast<double>(y0);
    taps(y0 + r, x0 + r) += (1.0 - fx) * (1.0 - fy);
    taps(y0 + r, x0 + r + 1) += fx * (1.0 - fy);
    taps(y0 + r + 1, x0 + r) += (1.0 - fx) * fy;
    taps(y0 + r + 1, x0 + r + 1) += fx * fy;
  }
  taps /= taps.sum();

  Kernel k = crop_centered(taps, r, r);
  k.normalized = true;
  return k;
}

Kernel delta_kernel() { return average_kernel(1); }

KernelSpectrum kernel_spectrum(const Kernel& k, Eigen::Index width, Eigen::Index height) {
  if (k.taps.size() == 0) throw std::invalid_argument("kernel_spectrum: empty kernel");
  if (k.width() > width || k.height() > height) {
    throw std::invalid_argument("kernel_spectrum: kernel larger than image");
  }
  Image padded = Image::Zero(height, width);
  for (Eigen::Index ty = 0; ty < k.height(); ++ty) {
    for (Eigen::Index tx = 0; tx < k.width(); ++tx) {
      const Eigen::Index dx = tx - k.origin_x;
      const Eigen::Index dy = ty - k.origin_y;
      padded(((dy % height) + height) % height, ((dx % width) + width) % width) += k.taps(ty, tx);
    }
  }
  KernelSpectrum ks;
  ks.spectrum = dft2(padded);
  ks.conj_spectrum = ks.spectrum.conjugate();
  ks.abs2 = ks.spectrum.abs2();
  return ks;
}

namespace {

Image convolve_with(const Image& field, const Spectrum& symbol) {
  if (field.rows() != symbol.rows() || field.cols() != symbol.cols()) {
    throw std::invalid_argument("convolve: field/kernel-spectrum dimension mismatch");
  }
  Spectrum spec = dft2(field);
  spec *= symbol;
  return idft2(spec).real();
}

}  // namespace

Image convolve(const Image& field, const KernelSpectrum& ks) {
  return convolve_with(field, ks.spectrum);
}

Image adjoint_convolve(const Image& field, const KernelSpectrum& ks) {
  return convolve_with(field, ks.conj_spectrum);
}

}  // namespace rdr
