#include "rdr/solver.hpp"

#include "rdr/errors.hpp"
#include "rdr/grid.hpp"
#include "rdr/spectral.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace rdr {

void SolverConfig::validate() const {
  params.validate();
  if (!(geometry.h > 0.0)) throw std::invalid_argument("SolverConfig: h must be > 0");
  if (!(geometry.tau > 0.0)) throw std::invalid_argument("SolverConfig: tau must be > 0");
  if (!(tol > 0.0)) throw std::invalid_argument("SolverConfig: tol must be > 0");
  if (max_iter < 1) throw std::invalid_argument("SolverConfig: max_iter must be >= 1");
}

CflCheck cfl_bound_u(double cmax, const GridGeometry& g) {
  if (cmax < 0.0) throw std::invalid_argument("cfl_bound_u: cmax must be >= 0");
  CflCheck c;
  c.bound = 0.25;
  c.lhs = g.tau * cmax / (g.h * g.h);
  c.ok = c.lhs <= c.bound;
  return c;
}

CflCheck cfl_bound_v(double amax, const GridGeometry& g) {
  if (amax < 0.0) throw std::invalid_argument("cfl_bound_v: amax must be >= 0");
  CflCheck c;
  c.bound = 0.25;
  c.lhs = g.tau * amax / (g.h * g.h);
  c.ok = c.lhs <= c.bound;
  return c;
}

CflCheck cfl_bound_u_explicit(double cmax, const GridGeometry& g, double lambda) {
  if (cmax < 0.0) throw std::invalid_argument("cfl_bound_u_explicit: cmax must be >= 0");
  CflCheck c;
  c.bound = 2.0 / (lambda + 8.0 / (g.h * g.h));
  c.lhs = g.tau * cmax;
  c.ok = c.lhs <= c.bound;
  return c;
}

double amplification_factor(double w1, double w2, double c, const SolverConfig& cfg,
                            std::complex<double> khat) {
  if (c < 0.0) throw std::invalid_argument("amplification_factor: c must be >= 0");
  const double tau = cfg.geometry.tau, h = cfg.geometry.h;
  const double s1 = std::sin(w1 * h / 2.0), s2 = std::sin(w2 * h / 2.0);
  const double numer = 1.0 - (4.0 * tau * c / (h * h)) * (s1 * s1 + s2 * s2);
  const double denom = 1.0 + tau * cfg.params.lambda * std::norm(khat);
  return numer / denom;
}

Image diffusion_term(const Image& u, const Image& c, const GridGeometry& g) {
  if (u.rows() != c.rows() || u.cols() != c.cols()) {
    throw std::invalid_argument("diffusion_term: u/c shape mismatch");
  }
  const Image flux_x = c * forward_diff(u, Axis::X, g.h);
  const Image flux_y = c * forward_diff(u, Axis::Y, g.h);
  return backward_diff(flux_x, Axis::X, g.h) + backward_diff(flux_y, Axis::Y, g.h);
}

Image explicit_v_update(const Image& v, const Image& a, const GridGeometry& g) {
  return v + g.tau * diffusion_term(v, a, g);
}

Image semi_implicit_u_update(const Image& u, const Image& c, const KernelSpectrum& ks,
                             const Image& fidelity_rhs, const GridGeometry& g, double lambda) {
  if (u.rows() != ks.height() || u.cols() != ks.width()) {
    throw std::invalid_argument("semi_implicit_u_update: field/kernel-spectrum mismatch");
  }
  const Image d = u + g.tau * diffusion_term(u, c, g) + (g.tau * lambda) * fidelity_rhs;
  Spectrum dhat = dft2(d);
  dhat /= (1.0 + g.tau * lambda * ks.abs2).cast<std::complex<double>>();
  return idft2(dhat).real();
}

Image explicit_u_update(const Image& u, const Image& c, const KernelSpectrum& ks,
                        const Image& f, const GridGeometry& g, double lambda) {
  const Image residual = convolve(u, ks) - f;
  return u + g.tau * diffusion_term(u, c, g) - (g.tau * lambda) * adjoint_convolve(residual, ks);
}

Image v_step(const RestorationState& state, const SolverConfig& cfg) {
  const Image a = coeff_a(state.u, state.v, cfg.params);
  return explicit_v_update(state.v, a, cfg.geometry);
}

Image u_step(const RestorationState& state, const SolverConfig& cfg) {
  const Image c = coeff_c(state.u, state.v, cfg.params, cfg.geometry.h, cfg.gradient_part);
  return semi_implicit_u_update(state.u, c, state.ks, state.fidelity_rhs, cfg.geometry,
                                cfg.params.lambda);
}

Image u_step_explicit(const RestorationState& state, const SolverConfig& cfg, const Image& f) {
  const Image c = coeff_c(state.u, state.v, cfg.params, cfg.geometry.h, cfg.gradient_part);
  return explicit_u_update(state.u, c, state.ks, f, cfg.geometry, cfg.params.lambda);
}

namespace {

std::string cfl_message(const char* scheme, const CflCheck& c, int n) {
  std::ostringstream os;
  os << scheme << " CFL bound violated at iteration " << n << ": lhs " << c.lhs << " > bound "
     << c.bound;
  return os.str();
}

void check_finite_or_abort(const Image& field, const char* what, int n) {
  if (!all_finite(field)) {
    std::ostringstream os;
    os << what << " became non-finite at iteration " << n;
    throw NumericalError(os.str());
  }
}

}  // namespace

RunResult run(const Image& f, const Kernel& kernel, const SolverConfig& cfg) {
  cfg.validate();
  require_nonempty(f, "run");
  require_finite(f, "run");

  RunResult result;
  if ((f <= 0.0).any()) {
    result.warnings.push_back(
        "input image has non-positive pixels; the model assumes f > 0");
  }

  const double M = f.maxCoeff();
  if (!(M > 0.0)) {
    throw std::invalid_argument("run: max of f must be > 0 (gray-level normalizer)");
  }
  SolverConfig local = cfg;
  local.params.M = M;
  const GridGeometry& g = local.geometry;
  const double lambda = local.params.lambda;

  RestorationState state;
  state.u = f;
  state.v = f;
  state.n = 0;
  state.ks = kernel_spectrum(kernel, f.cols(), f.rows());
  state.fidelity_rhs = adjoint_convolve(f, state.ks);
  state.trace.reserve(static_cast<size_t>(local.max_iter));

  // Growth monitor: ||u^n||_inf <= e^{2 lambda n tau} (||f||_inf + ||K'f||_inf),
  // compared in log space to survive large lambda*n*tau.
  const double growth_base = f.abs().maxCoeff() + state.fidelity_rhs.abs().maxCoeff();
  const double log_growth_base = std::log(growth_base);

  bool warned_cfl_v = false, warned_cfl_u = false;
  StopReason reason = StopReason::MaxIterations;

  while (state.n < local.max_iter) {
    const Image a = coeff_a(state.u, state.v, local.params);
    const double a_max = a.maxCoeff();
    const CflCheck cv = cfl_bound_v(a_max, g);
    if (!cv.ok) {
      if (local.enforce_cfl) {
        if (state.n == 0) {
          throw NumericalError("refusing to start: " + cfl_message("explicit v-scheme", cv, 0));
        }
        throw NumericalError(cfl_message("explicit v-scheme", cv, state.n));
      }
      if (!warned_cfl_v) {
        result.warnings.push_back(cfl_message("explicit v-scheme", cv, state.n) +
                                  " (continuing, enforce_cfl off)");
        warned_cfl_v = true;
      }
    }
    const Image v_next = explicit_v_update(state.v, a, g);
    check_finite_or_abort(v_next, "v", state.n);

    const Image c =
        coeff_c(state.u, v_next, local.params, g.h, local.gradient_part);
    const double c_max = c.maxCoeff();
    const CflCheck cu = cfl_bound_u(c_max, g);
    if (!cu.ok) {
      if (local.enforce_cfl) {
        if (state.n == 0) {
          throw NumericalError("refusing to start: " + cfl_message("semi-implicit u-scheme", cu, 0));
        }
        throw NumericalError(cfl_message("semi-implicit u-scheme", cu, state.n));
      }
      if (!warned_cfl_u) {
        result.warnings.push_back(cfl_message("semi-implicit u-scheme", cu, state.n) +
                                  " (continuing, enforce_cfl off)");
        warned_cfl_u = true;
      }
    }
    const Image u_next =
        semi_implicit_u_update(state.u, c, state.ks, state.fidelity_rhs, g, lambda);
    check_finite_or_abort(u_next, "u", state.n);

    const double u_next_norm2 = u_next.square().sum();
    double rel_change;
    const Image& ref = (local.stop_rule == StopRule::SuccessiveChange) ? state.u : f;
    const double diff2 = (u_next - ref).square().sum();
    if (u_next_norm2 > 0.0) {
      rel_change = diff2 / u_next_norm2;
    } else {
      rel_change = (diff2 > 0.0) ? std::numeric_limits<double>::infinity() : 0.0;
    }

    state.u = u_next;
    state.v = v_next;
    state.n += 1;

    const double u_linf = state.u.abs().maxCoeff();
    if (u_linf > 0.0 &&
        std::log(u_linf) > 2.0 * lambda * state.n * g.tau + log_growth_base + 1e-12) {
      std::ostringstream os;
      os << "sup-norm growth monitor violated at iteration " << state.n << ": ||u||_inf "
         << u_linf << " exceeds its admissible envelope";
      throw NumericalError(os.str());
    }

    TraceRecord rec;
    rec.n = state.n;
    rec.rel_change = rel_change;
    rec.u_min = state.u.minCoeff();
    rec.u_max = state.u.maxCoeff();
    rec.v_min = state.v.minCoeff();
    rec.v_max = state.v.maxCoeff();
    rec.c_max = c_max;
    rec.a_max = a_max;
    rec.energy = 0.5 * (state.u.square().sum() + state.v.square().sum()) * g.h * g.h;
    state.trace.push_back(rec);

    if (rel_change <= local.tol) {
      reason = StopReason::Converged;
      break;
    }
  }

  result.restored = state.u;
  result.state = std::move(state);
  result.stop_reason = reason;
  return result;
}

}  // namespace rdr
