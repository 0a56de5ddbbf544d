#include "rdr/diffusion.hpp"

#include <stdexcept>

namespace rdr {

void ModelParams::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("ModelParams: alpha must lie in (0, 1)");
  if (!(beta > 0.0)) throw std::invalid_argument("ModelParams: beta must be > 0");
  if (!(gamma > 0.0)) throw std::invalid_argument("ModelParams: gamma must be > 0");
  if (!(mu > 0.0)) throw std::invalid_argument("ModelParams: mu must be > 0");
  if (!(k1 > 0.0)) throw std::invalid_argument("ModelParams: k1 must be > 0");
  if (!(lambda >= 0.0)) throw std::invalid_argument("ModelParams: lambda must be >= 0");
  if (!(lambda1 > 0.0 && lambda1 < 1.0)) throw std::invalid_argument("ModelParams: lambda1 must lie in (0, 1)");
  if (!(M > 0.0)) throw std::invalid_argument("ModelParams: M must be > 0");
}

Image gray_indicator(const Image& field, double exponent, double M) {
  if (!(M > 0.0)) throw std::invalid_argument("gray_indicator: M must be > 0");
  require_finite(field, "gray_indicator");
  return (field.abs() / M).pow(exponent);
}

Image texture_detector(const Image& gmag, double k1, double beta) {
  require_finite(gmag, "texture_detector");
  if ((gmag < 0.0).any()) {
    throw std::invalid_argument("texture_detector: gradient magnitude must be nonnegative");
  }
  return 1.0 / (1.0 + k1 * gmag.pow(beta));
}

static void require_same_shape(const Image& u, const Image& v, const char* what) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw std::invalid_argument(std::string(what) + ": u/v shape mismatch");
  }
}

Image coeff_c(const Image& u, const Image& v, const ModelParams& p, double h,
              GradientPart part) {
  require_same_shape(u, v, "coeff_c");
  p.validate();
  const Image gmag = frac_grad_magnitude(u, p.alpha, h, part);
  return gray_indicator(v, p.gamma, p.M) * texture_detector(gmag, p.k1, p.beta);
}

Image coeff_c_component_sum(const Image& u, const Image& v, const ModelParams& p, double h) {
  require_same_shape(u, v, "coeff_c_component_sum");
  p.validate();
  const Image sum = frac_diff(u, p.alpha, Axis::X, h) + frac_diff(u, p.alpha, Axis::Y, h);
  // The component sum may be negative; a fractional power of it is defined
  // only where it is nonnegative. NaNs are left in place for inspection.
  const Image denom = 1.0 + p.k1 * sum.pow(p.beta / 2.0);
  return gray_indicator(v, p.gamma, p.M) / denom;
}

Image coeff_a(const Image& u, const Image& v, const ModelParams& p) {
  require_same_shape(u, v, "coeff_a");
  p.validate();
  return p.lambda1 * gray_indicator(u, p.mu, p.M) +
         (1.0 - p.lambda1) * gray_indicator(v, p.gamma, p.M);
}

}  // namespace rdr
