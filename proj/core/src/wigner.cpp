#include "catphase/wigner.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace catphase {

WignerCoeffs wigner_coeffs(double alpha, double r, double eta, double delta) {
  if (!(alpha >= 0.0))
    throw std::invalid_argument("wigner_coeffs: alpha must be >= 0");
  if (!(eta > 0.0 && eta <= 1.0))
    throw std::invalid_argument("wigner_coeffs: eta must lie in (0, 1]");
  const double s = std::exp(r);
  const double s2 = s * s;
  const double den = 1.0 + (s2 - 1.0) * eta;       // = eta*(s^2-1) + 1
  const double den_x = s2 * (1.0 - eta) + eta;
  WignerCoeffs c;
  c.A = 2.0 * s2 / den_x;
  c.B = 2.0 / den;
  c.C = 2.0 * alpha * alpha * (1.0 - eta) / den;
  c.D = 4.0 * s * alpha * std::sqrt(eta) / den;
  c.F = s / (std::numbers::pi * (1.0 + std::exp(-2.0 * alpha * alpha))) *
        std::sqrt(1.0 / (den * den_x));
  c.xi = alpha * std::sqrt(eta) / s;
  c.delta = delta;
  c.s = s;
  c.alpha = alpha;
  c.eta = eta;
  return c;
}

WignerCoeffs wigner_coeffs(const ProbeSpec& spec) {
  const EffectiveChannel ec = effective_channel(spec);
  return wigner_coeffs(spec.alpha, spec.r, ec.eta, ec.delta);
}

double wigner_eval(const WignerCoeffs& c, double x, double p) {
  const double u = p - c.delta;
  const double envelope_p = c.B * u * u;
  const double w_int = 2.0 * std::exp(-c.C - envelope_p - c.A * x * x) *
                       std::cos(c.D * u);
  const double w_plus = std::exp(-c.A * (x + c.xi) * (x + c.xi) - envelope_p);
  const double w_minus = std::exp(-c.A * (x - c.xi) * (x - c.xi) - envelope_p);
  return c.F * (w_int + w_plus + w_minus);
}

double wigner_pure(double alpha, double r, double x, double p) {
  const double s = std::exp(r);
  const double norm = 2.0 * (1.0 + std::exp(-2.0 * alpha * alpha));
  const double ps = p / s;
  const double xs = x * s;
  const double env_p = 2.0 * ps * ps;
  const double bells = std::exp(-2.0 * (xs - alpha) * (xs - alpha) - env_p) +
                       std::exp(-2.0 * (xs + alpha) * (xs + alpha) - env_p);
  const double fringe =
      2.0 * std::exp(-2.0 * xs * xs - env_p) * std::cos(4.0 * alpha * ps);
  return (2.0 / (std::numbers::pi * norm)) * (bells + fringe);
}

PhaseSpaceBox wigner_box(const WignerCoeffs& c, double n_sigmas) {
  const double x_half = c.xi + n_sigmas / std::sqrt(c.A);
  double p_half = n_sigmas / std::sqrt(c.B);
  if (c.D > 1e-12) p_half += std::numbers::pi / c.D;
  return PhaseSpaceBox{-x_half, x_half, c.delta - p_half, c.delta + p_half};
}

QuadratureOptions wigner_quadrature_options(const WignerCoeffs& c,
                                            double abs_tol) {
  QuadratureOptions opts;
  opts.abs_tol = abs_tol;
  opts.rel_tol = 0.0;
  // resolve fringes along p and keep x panels no wider than the envelope;
  // anchoring at delta puts the cosine zeros on panel edges
  if (c.D > 1e-12) {
    opts.max_panel_y = std::numbers::pi / (2.0 * c.D);
    opts.seed_anchor_y = c.delta;
  }
  opts.max_panel_x = 2.0 / std::sqrt(c.A);
  return opts;
}

}  // namespace catphase
