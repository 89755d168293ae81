#pragma once

#include <functional>
#include <limits>
#include <vector>

// Adaptive Gauss-Legendre panel quadrature in one and two dimensions.
//
// Panels are refined by bisection until the per-panel error estimate
// (difference between the 16-point and 8-point rules) falls below the
// panel's proportional share of the requested tolerance.  Initial panels
// honor optional width caps so oscillatory integrands (Wigner fringes,
// Fock-state Laguerre oscillations) start out resolved.

namespace catphase {

struct GaussLegendreRule {
  std::vector<double> nodes;    // ascending, on [-1, 1]
  std::vector<double> weights;
};

// Cached rule for n-point Gauss-Legendre (nodes by Newton iteration).
const GaussLegendreRule& gauss_legendre(int n);

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  double max_panel_x = 0.0;  // 0 means no cap
  double max_panel_y = 0.0;
  // When finite, the initial y boundaries sit on anchor + k*max_panel_y.
  // Anchoring quarter-period panels at the fringe center puts every cosine
  // zero on a panel edge, which keeps |W|-type integrands smooth per panel.
  double seed_anchor_y = std::numeric_limits<double>::quiet_NaN();
  int max_depth = 30;
  long max_panels = 400000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;        // accumulated error estimate
  long evaluations = 0;
  bool converged = true;
};

QuadratureResult integrate_1d(const std::function<double(double)>& f,
                              double a, double b,
                              const QuadratureOptions& opts = {});

QuadratureResult integrate_2d(const std::function<double(double, double)>& f,
                              double x_lo, double x_hi,
                              double p_lo, double p_hi,
                              const QuadratureOptions& opts = {});

}  // namespace catphase
