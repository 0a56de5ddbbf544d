#pragma once

#include "rdr/field.hpp"

namespace rdr {

struct QualityReport {
  double psnr = 0.0;  // dB; +infinity for identical images
  double ssim = 0.0;  // in [-1, 1]
};

// 10 * log10(N * 255^2 / sum((u - f)^2)). Returns +infinity when u == f;
// the sentinel is reported, never used in arithmetic.
double psnr(const Image& u, const Image& f);

// Mean of the local structural-similarity map. Local statistics use an
// 11x11 Gaussian window with standard deviation 1.5 and periodic boundary
// handling; c1 = (0.01*255)^2, c2 = (0.03*255)^2.
double ssim(const Image& u, const Image& f);

QualityReport quality(const Image& u, const Image& f);

}  // namespace rdr
