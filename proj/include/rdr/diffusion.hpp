#pragma once

#include "rdr/field.hpp"
#include "rdr/spectral.hpp"

namespace rdr {

// Model constants. M is the gray-level normalizer; the solver recomputes it
// from the observed image (max over pixels) at the start of a run and never
// afterwards.
struct ModelParams {
  double alpha = 0.9;    // fractional order, in (0, 1)
  double beta = 1.0;     // texture exponent, > 0
  double gamma = 1.0;    // gray-level exponent for v, > 0
  double mu = 0.4;       // gray-level exponent for u, > 0
  double k1 = 1.0;       // texture contrast, > 0
  double lambda = 45.0;  // fidelity weight, >= 0
  double lambda1 = 0.9;  // coupling weight, in (0, 1)
  double M = 255.0;      // gray-level normalizer, > 0

  void validate() const;
};

// (|value| / M)^exponent, pixelwise.
Image gray_indicator(const Image& field, double exponent, double M);

// 1 / (1 + k1 * gmag^beta). Values in (0, 1], nonincreasing in gmag.
Image texture_detector(const Image& gmag, double k1, double beta);

// Diffusivity of u: gray indicator of v times texture detector of the
// fractional gradient of u. In [0, 1] whenever |v| <= M.
Image coeff_c(const Image& u, const Image& v, const ModelParams& p, double h,
              GradientPart part = GradientPart::Real);

// Same but with the texture denominator formed as (Dx + Dy)^(beta/2) instead
// of |grad|^beta. Not used by the solver; kept for side-by-side comparison.
Image coeff_c_component_sum(const Image& u, const Image& v, const ModelParams& p, double h);

// Diffusivity of v: convex combination of the u- and v-gray indicators.
Image coeff_a(const Image& u, const Image& v, const ModelParams& p);

}  // namespace rdr
