#pragma once

#include "rdr/field.hpp"

namespace rdr {

// Small convolution stencil. taps(dy, dx) is indexed row = y offset,
// col = x offset; the origin marks the tap sitting on the output pixel.
struct Kernel {
  Eigen::ArrayXXd taps;
  Eigen::Index origin_x = 0;
  Eigen::Index origin_y = 0;
  bool normalized = false;

  Eigen::Index width() const { return taps.cols(); }
  Eigen::Index height() const { return taps.rows(); }
};

// n x n box filter, taps 1/n^2. n must be odd.
Kernel average_kernel(int n);

// Uniform weight on integer offsets whose center distance is <= radius.
// A pixel is in iff dx^2 + dy^2 <= radius^2 (hard indicator, no partial area).
Kernel disk_kernel(double radius);

// Line segment of the given length through the kernel center, rasterized
// with bilinear coverage weights and normalized. Angle is measured from the
// +x axis toward +y (row) direction. length >= 1; length 1 is a delta.
Kernel motion_kernel(double length, double angle);

// 1x1 identity stencil.
Kernel delta_kernel();

// Kernel lifted to image resolution: taps embedded into a W x H zero field
// with the origin tap at index (0, 0) and the rest wrapped periodically,
// then transformed. This placement makes the convolution shift-free.
struct KernelSpectrum {
  Spectrum spectrum;
  Spectrum conj_spectrum;    // elementwise conjugate of spectrum
  Eigen::ArrayXXd abs2;      // |spectrum|^2, the semi-implicit denominator term

  Eigen::Index width() const { return spectrum.cols(); }
  Eigen::Index height() const { return spectrum.rows(); }
};

KernelSpectrum kernel_spectrum(const Kernel& k, Eigen::Index width, Eigen::Index height);

// Periodic (circular) convolution K * u via the spectrum.
Image convolve(const Image& field, const KernelSpectrum& ks);

// Convolution with the adjoint K': same as convolve with the conjugate symbol.
Image adjoint_convolve(const Image& field, const KernelSpectrum& ks);

}  // namespace rdr
