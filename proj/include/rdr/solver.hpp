#pragma once

#include "rdr/diffusion.hpp"
#include "rdr/field.hpp"
#include "rdr/kernels.hpp"

#include <complex>
#include <string>
#include <vector>

namespace rdr {

// One time step advances (u, v) in this order: a from (u^n, v^n); explicit
// v-update; fractional gradients of u^n; c from (u^n, v^{n+1}); explicit
// diffusion of u plus the fidelity source; semi-implicit spectral solve for
// the K'K term. The coupling direction (c sees the fresh v) is fixed.

enum class StopRule {
  SuccessiveChange,  // ||u^{n+1} - u^n||^2 / ||u^{n+1}||^2 <= tol
  DistanceToF,       // ||u^{n+1} - f||^2 / ||u^{n+1}||^2 <= tol; fires at once
                     // since u^0 = f, kept selectable for comparison
};

struct SolverConfig {
  ModelParams params;
  GridGeometry geometry;
  double tol = 0.005;
  int max_iter = 500;
  StopRule stop_rule = StopRule::SuccessiveChange;
  bool enforce_cfl = true;
  GradientPart gradient_part = GradientPart::Real;

  void validate() const;
};

struct TraceRecord {
  int n = 0;
  double rel_change = 0.0;
  double u_min = 0.0, u_max = 0.0;
  double v_min = 0.0, v_max = 0.0;
  double c_max = 0.0, a_max = 0.0;
  double energy = 0.0;  // 0.5 * sum(u^2 + v^2) * h^2
};

struct RestorationState {
  Image u;
  Image v;
  int n = 0;
  KernelSpectrum ks;
  Image fidelity_rhs;  // K' * f, fixed for the whole run
  std::vector<TraceRecord> trace;
};

enum class StopReason { Converged, MaxIterations };

struct RunResult {
  Image restored;
  RestorationState state;
  StopReason stop_reason = StopReason::MaxIterations;
  std::vector<std::string> warnings;
};

struct CflCheck {
  double bound = 0.0;
  double lhs = 0.0;
  bool ok = false;
};

// Semi-implicit u-scheme: tau * cmax / h^2 <= 1/4, uniformly in lambda and K.
CflCheck cfl_bound_u(double cmax, const GridGeometry& g);

// Explicit v-scheme: tau * amax / h^2 <= 1/4.
CflCheck cfl_bound_v(double amax, const GridGeometry& g);

// Fully explicit u-scheme: tau * cmax <= 2 / (lambda + 8/h^2).
CflCheck cfl_bound_u_explicit(double cmax, const GridGeometry& g, double lambda);

// Frozen-coefficient mode gain of the semi-implicit scheme:
//   G = [1 - (4 tau c / h^2)(sin^2(w1 h/2) + sin^2(w2 h/2))] / (1 + tau lambda |Khat|^2).
double amplification_factor(double w1, double w2, double c, const SolverConfig& cfg,
                            std::complex<double> khat);

// Divergence-form diffusion term D-x(c D+x u) + D-y(c D+y u).
Image diffusion_term(const Image& u, const Image& c, const GridGeometry& g);

// v + tau * div(a grad v). Preserves the grid mean exactly (telescoping).
Image explicit_v_update(const Image& v, const Image& a, const GridGeometry& g);

// Spectral solve of d = u + tau*div(c grad u) + tau*lambda*K'f for u^{n+1},
// dividing each DFT coefficient by 1 + tau*lambda*|Khat|^2 (always >= 1).
Image semi_implicit_u_update(const Image& u, const Image& c, const KernelSpectrum& ks,
                             const Image& fidelity_rhs, const GridGeometry& g, double lambda);

// Fully explicit variant with source -tau*lambda*K'(K u - f); for stability
// experiments only.
Image explicit_u_update(const Image& u, const Image& c, const KernelSpectrum& ks,
                        const Image& f, const GridGeometry& g, double lambda);

// Single spec-level steps over a state. u_step expects state.v to already
// hold v^{n+1} for the current iteration.
Image v_step(const RestorationState& state, const SolverConfig& cfg);
Image u_step(const RestorationState& state, const SolverConfig& cfg);
Image u_step_explicit(const RestorationState& state, const SolverConfig& cfg, const Image& f);

// Full restoration loop on an observed image f with a known blur kernel.
// Deterministic given its inputs. Throws NumericalError on non-finite
// iterates, CFL refusal (enforce_cfl), or a violated growth monitor.
RunResult run(const Image& f, const Kernel& kernel, const SolverConfig& cfg);

}  // namespace rdr
