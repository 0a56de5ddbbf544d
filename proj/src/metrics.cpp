#include "rdr/metrics.hpp"

#include "rdr/kernels.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rdr {

namespace {

void require_same_shape(const Image& u, const Image& f, const char* what) {
  if (u.rows() != f.rows() || u.cols() != f.cols()) {
    throw std::invalid_argument(std::string(what) + ": image dimension mismatch");
  }
}

constexpr int kSsimWindow = 11;
constexpr double kSsimSigma = 1.5;
constexpr double kC1 = (0.01 * 255.0) * (0.01 * 255.0);
constexpr double kC2 = (0.03 * 255.0) * (0.03 * 255.0);

Kernel gaussian_window() {
  const int r = kSsimWindow / 2;
  Eigen::ArrayXXd taps(kSsimWindow, kSsimWindow);
  for (int dy = -r; dy <= r; ++dy) {
    for (int dx = -r; dx <= r; ++dx) {
      taps(dy + r, dx + r) =
          std::exp(-(dx * dx + dy * dy) / (2.0 * kSsimSigma * kSsimSigma));
    }
  }
  taps /= taps.sum();
  Kernel k;
  k.taps = taps;
  k.origin_x = r;
  k.origin_y = r;
  k.normalized = true;
  return k;
}

}  // namespace

double psnr(const Image& u, const Image& f) {
  require_same_shape(u, f, "psnr");
  require_nonempty(u, "psnr");
  const double sse = (u - f).square().sum();
  if (sse == 0.0) return std::numeric_limits<double>::infinity();
  const double n = static_cast<double>(u.size());
  return 10.0 * std::log10(n * 255.0 * 255.0 / sse);
}

double ssim(const Image& u, const Image& f) {
  require_same_shape(u, f, "ssim");
  if (u.rows() < kSsimWindow || u.cols() < kSsimWindow) {
    throw std::invalid_argument("ssim: image smaller than the 11x11 window");
  }
  const KernelSpectrum w = kernel_spectrum(gaussian_window(), u.cols(), u.rows());

  const Image mu_u = convolve(u, w);
  const Image mu_f = convolve(f, w);
  const Image var_u = convolve(u * u, w) - mu_u.square();
  const Image var_f = convolve(f * f, w) - mu_f.square();
  const Image cov = convolve(u * f, w) - mu_u * mu_f;

  const Image numer = (2.0 * mu_u * mu_f + kC1) * (2.0 * cov + kC2);
  const Image denom = (mu_u.square() + mu_f.square() + kC1) * (var_u + var_f + kC2);
  return (numer / denom).mean();
}

QualityReport quality(const Image& u, const Image& f) {
  return QualityReport{psnr(u, f), ssim(u, f)};
}

}  // namespace rdr
