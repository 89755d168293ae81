#pragma once

#include "catphase/probe.hpp"
#include "catphase/quadrature.hpp"

namespace catphase {

// Phase-space parameterization of the lossy displaced anti-squeezed cat.
// The Wigner function is F * (W_int + W_plus + W_minus) with
//   W_int    = 2 exp(-C - B(p-delta)^2 - A x^2) cos(D (p-delta))
//   W_plus/minus = exp(-A (x +- xi)^2 - B (p-delta)^2)
// A: x-curvature of all three terms, B: p-curvature, C: fringe-contrast
// damping from loss, D: fringe wavenumber, F: overall normalization,
// xi: bell positions (effective cat amplitude after loss).
struct WignerCoeffs {
  double A = 0, B = 0, C = 0, D = 0, F = 0;
  double xi = 0;
  double delta = 0;
  // retained inputs
  double s = 1;      // e^r
  double alpha = 0;
  double eta = 1;
};

// Coefficients for amplitude alpha, squeeze factor s = e^r, effective loss
// eta and effective displacement delta.  In the lossless unsqueezed limit
// (eta = 1, r = 0) this reduces exactly to A = B = 2, C = 0, D = 4 alpha,
// F = 1/(pi (1 + e^{-2 alpha^2})).
WignerCoeffs wigner_coeffs(double alpha, double r, double eta, double delta);

// Convenience: reduce the two-loss probe to its effective channel first.
WignerCoeffs wigner_coeffs(const ProbeSpec& spec);

double wigner_eval(const WignerCoeffs& c, double x, double p);

// Lossless pre-displacement Wigner function of the (anti)squeezed cat:
// two bells at x = -+ alpha/s plus the cosine fringe at x = 0.  Equals
// wigner_eval at eta = 1, delta = 0.
double wigner_pure(double alpha, double r, double x, double p);

struct PhaseSpaceBox {
  double x_lo, x_hi, p_lo, p_hi;
};

// Box covering bells and fringes: x in +-(xi + n_sigmas/sqrt(A)),
// p in delta +- (n_sigmas/sqrt(B) + fringe padding pi/D).
PhaseSpaceBox wigner_box(const WignerCoeffs& c, double n_sigmas = 8.0);

// Quadrature options with the p-panel width capped at a quarter fringe
// period pi/(2D) so the oscillations start out resolved.
QuadratureOptions wigner_quadrature_options(const WignerCoeffs& c,
                                            double abs_tol = 1e-9);

}  // namespace catphase
