#include "rdr/spectral.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <numbers>

namespace rdr {

namespace {

Eigen::FFT<double>& tls_fft() {
  // One transform context per thread; plan caches are not shared.
  thread_local Eigen::FFT<double> fft;
  return fft;
}

enum class Direction { Forward, Inverse };

void transform_rows(Eigen::MatrixXcd& m, Direction dir) {
  auto& fft = tls_fft();
  Eigen::VectorXcd in(m.cols()), out(m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    in = m.row(r).transpose();
    if (dir == Direction::Forward) {
      fft.fwd(out, in);
    } else {
      fft.inv(out, in);
    }
    m.row(r) = out.transpose();
  }
}

void transform_cols(Eigen::MatrixXcd& m, Direction dir) {
  auto& fft = tls_fft();
  Eigen::VectorXcd in(m.rows()), out(m.rows());
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    in = m.col(c);
    if (dir == Direction::Forward) {
      fft.fwd(out, in);
    } else {
      fft.inv(out, in);
    }
    m.col(c) = out;
  }
}

Spectrum transform2(Eigen::MatrixXcd m, Direction dir) {
  transform_rows(m, dir);
  transform_cols(m, dir);
  return m.array();
}

}  // namespace

Spectrum dft2(const Image& field) {
  require_nonempty(field, "dft2");
  require_finite(field, "dft2");
  return transform2(field.matrix().cast<std::complex<double>>(), Direction::Forward);
}

Spectrum dft2(const ComplexImage& field) {
  require_nonempty(field, "dft2");
  require_finite(field, "dft2");
  return transform2(field.matrix(), Direction::Forward);
}

ComplexImage idft2(const Spectrum& spec) {
  require_nonempty(spec, "idft2");
  require_finite(spec, "idft2");
  // Eigen's inverse scales each 1-D pass by 1/n, giving 1/(W*H) overall.
  return transform2(spec.matrix(), Direction::Inverse);
}

FracMultiplier frac_multiplier(double alpha, Axis axis, Eigen::Index width,
                               Eigen::Index height, double h) {
  if (!(alpha > 0.0)) throw std::invalid_argument("frac_multiplier: alpha must be > 0");
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("frac_multiplier: grid sizes must be positive");
  }
  if (!(h > 0.0)) throw std::invalid_argument("frac_multiplier: h must be > 0");

  const Eigen::Index n = (axis == Axis::X) ? width : height;
  FracMultiplier m;
  m.alpha = alpha;
  m.axis = axis;
  m.h = h;
  m.values.resize(n);
  m.values[0] = 0.0;  // 1 - e^0 = 0; pinned exactly
  for (Eigen::Index p = 1; p < n; ++p) {
    const double wh = 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(n) * h;
    const std::complex<double> base = 1.0 - std::exp(std::complex<double>(0.0, -wh));
    std::complex<double> value;
    if (base == std::complex<double>(0.0, 0.0)) {
      value = 0.0;  // omega*h hit a multiple of 2*pi
    } else {
      // principal branch: z^alpha = exp(alpha * Log z)
      value = std::exp(alpha * std::log(base)) *
              std::exp(std::complex<double>(0.0, alpha * wh / 2.0));
    }
    m.values[p] = value;
  }
  return m;
}

void apply_multiplier(Spectrum& spec, const FracMultiplier& m) {
  const Eigen::Index H = spec.rows(), W = spec.cols();
  if (m.axis == Axis::X) {
    if (m.values.size() != W) {
      throw std::invalid_argument("apply_multiplier: x-axis table size mismatch");
    }
    for (Eigen::Index q = 0; q < H; ++q) {
      spec.row(q) *= m.values.transpose();
    }
  } else {
    if (m.values.size() != H) {
      throw std::invalid_argument("apply_multiplier: y-axis table size mismatch");
    }
    for (Eigen::Index p = 0; p < W; ++p) {
      spec.col(p) *= m.values;
    }
  }
}

ComplexImage frac_diff_complex(const Image& field, double alpha, Axis axis, double h) {
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw std::invalid_argument("frac_diff: alpha must lie in (0, 2)");
  }
  Spectrum spec = dft2(field);
  const FracMultiplier m = frac_multiplier(alpha, axis, field.cols(), field.rows(), h);
  apply_multiplier(spec, m);
  return idft2(spec);
}

Image frac_diff(const Image& field, double alpha, Axis axis, double h) {
  return frac_diff_complex(field, alpha, axis, h).real();
}

Image frac_grad_magnitude(const Image& field, double alpha, double h, GradientPart part) {
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw std::invalid_argument("frac_grad_magnitude: alpha must lie in (0, 2)");
  }
  Spectrum spec = dft2(field);
  Spectrum sx = spec;
  apply_multiplier(sx, frac_multiplier(alpha, Axis::X, field.cols(), field.rows(), h));
  apply_multiplier(spec, frac_multiplier(alpha, Axis::Y, field.cols(), field.rows(), h));
  const ComplexImage dx = idft2(sx);
  const ComplexImage dy = idft2(spec);
  if (part == GradientPart::Real) {
    return (dx.real().square() + dy.real().square()).sqrt();
  }
  return (dx.abs2() + dy.abs2()).sqrt();
}

}  // namespace rdr
