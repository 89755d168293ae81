#pragma once

#include "catphase/quadrature.hpp"
#include "catphase/wigner.hpp"

namespace catphase {

// Closed-form estimate of the Wigner negativity volume of a bright
// anti-squeezed cat after loss (interference term only, envelope frozen per
// cosine half-period):
//   V = exp(-2 a^2 (1-eta)/(eta(s^2-1)+1)) / (pi (1+e^{-2 a^2}))
//       * theta3(pi/2, exp(-2 s^2 a^2 eta/(eta(s^2-1)+1)))
// Requires alpha > 0.
double negativity_analytic(double alpha, double r, double eta);

struct NegativityValidity {
  bool valid;     // 3 alpha sqrt(eta) sqrt(eta(s^2-1)+s^2)/s^2 < 1
  double margin;  // 1 - lhs
};

NegativityValidity negativity_validity(double alpha, double r, double eta);

// (1/2) Int (|W| - W) dx dp by adaptive 2-D quadrature over a box covering
// bells and fringes.  Integrates the full Wigner function (all three
// terms), so it is an assumption-free referee for the analytic estimate.
// Throws std::runtime_error with the achieved error bound if the quadrature
// does not converge.
double negativity_numeric(const WignerCoeffs& c,
                          const QuadratureOptions* opts = nullptr);

// Fringe-profile diagnostic: normalized inner product I in [-1, 1] between
// the exact x = 0 fringe profile exp(-B u^2) cos(D u) and its
// piecewise-constant-envelope counterpart, where the envelope is frozen at
// the center of each cosine half-period lobe.  I -> 1 when the fringes are
// much finer than the envelope.  Requires alpha > 0 (nonzero fringe
// wavenumber); throws std::domain_error otherwise.
double fringe_overlap(double alpha, double r, double eta, double delta);

}  // namespace catphase
