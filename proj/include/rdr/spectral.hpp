#pragma once

#include "rdr/field.hpp"

namespace rdr {

// Fractional-order differences are diagonal in frequency space: the order-
// alpha difference along x multiplies the DFT coefficient at omega by
//
//   m(omega) = (1 - exp(-i*omega*h))^alpha * exp(i*alpha*omega*h/2),
//
// using the principal branch of the complex power. Frequencies follow the
// plain index convention omega1 = 2*pi*p/W, omega2 = 2*pi*q/H; h enters only
// through the multiplier formula. For non-integer alpha the symbol is not
// conjugate-symmetric, so the inverse transform is complex; the real part is
// the operator output (see GradientPart for the alternative).
struct FracMultiplier {
  double alpha = 0.0;
  Axis axis = Axis::X;
  double h = 1.0;
  Eigen::ArrayXcd values;  // values[p] for p = 0 .. n-1 along the axis
};

// How the complex inverse transform becomes a real gradient component when
// forming |grad^alpha u|. Real is the default used by the solver; Modulus is
// kept selectable for sensitivity experiments.
enum class GradientPart { Real, Modulus };

// Unnormalized forward 2-D DFT; entry (q, p) of the result pairs with
// frequency (2*pi*p/W, 2*pi*q/H).
Spectrum dft2(const Image& field);
Spectrum dft2(const ComplexImage& field);

// Inverse 2-D DFT including the 1/(W*H) factor. Complex-valued in general.
ComplexImage idft2(const Spectrum& spec);

// Per-frequency symbol table for one axis. values[0] is exactly zero.
FracMultiplier frac_multiplier(double alpha, Axis axis, Eigen::Index width,
                               Eigen::Index height, double h);

// Multiply a spectrum by an axis symbol table (broadcast across the other axis).
void apply_multiplier(Spectrum& spec, const FracMultiplier& m);

// Order-alpha difference along one axis, before taking the real part.
ComplexImage frac_diff_complex(const Image& field, double alpha, Axis axis, double h);

// Real part of the order-alpha difference; alpha must lie in (0, 2).
Image frac_diff(const Image& field, double alpha, Axis axis, double h);

// Pixelwise magnitude sqrt(Dx^2 + Dy^2) of the fractional gradient.
Image frac_grad_magnitude(const Image& field, double alpha, double h,
                          GradientPart part = GradientPart::Real);

}  // namespace rdr
