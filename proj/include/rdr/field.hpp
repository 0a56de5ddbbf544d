#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace rdr {

template <typename Scalar>
using Field2 = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Intensity grid on a torus. Entry (y, x) is the pixel at column x in [0, W)
// and row y in [0, H); all neighbour accesses wrap. Values are unclamped
// doubles on the 0..255 gray scale.
using Image = Field2<double>;
using ComplexImage = Field2<std::complex<double>>;

// Full-resolution DFT coefficient grid. Entry (q, p) belongs to frequency
// pair (omega1, omega2) = (2*pi*p/W, 2*pi*q/H). Forward transform is
// unnormalized, the inverse carries the 1/(W*H) factor.
using Spectrum = ComplexImage;

enum class Axis { X, Y };

struct GridGeometry {
  double h = 1.0;    // space grid size
  double tau = 0.5;  // time step size

  GridGeometry() = default;
  GridGeometry(double h_, double tau_) : h(h_), tau(tau_) {
    if (!(h > 0.0)) throw std::invalid_argument("GridGeometry: h must be > 0");
    if (!(tau > 0.0)) throw std::invalid_argument("GridGeometry: tau must be > 0");
  }
};

struct FieldStats {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double sum_squares = 0.0;
};

template <typename Scalar>
bool all_finite(const Field2<Scalar>& f) {
  return f.isFinite().all();
}

template <typename Scalar>
void require_finite(const Field2<Scalar>& f, const char* what) {
  if (!all_finite(f)) {
    throw std::domain_error(std::string(what) + ": field contains non-finite values");
  }
}

template <typename Scalar>
void require_nonempty(const Field2<Scalar>& f, const char* what) {
  if (f.rows() == 0 || f.cols() == 0) {
    throw std::invalid_argument(std::string(what) + ": field is empty");
  }
}

}  // namespace rdr
