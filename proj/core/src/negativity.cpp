#include "catphase/negativity.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "catphase/special_functions.hpp"

namespace catphase {

double negativity_analytic(double alpha, double r, double eta) {
  if (!(alpha > 0.0))
    throw std::domain_error("negativity_analytic: alpha must be > 0");
  if (!(eta > 0.0 && eta <= 1.0))
    throw std::invalid_argument("negativity_analytic: eta must lie in (0, 1]");
  const double s2 = std::exp(2.0 * r);
  const double den = eta * (s2 - 1.0) + 1.0;
  const double prefactor =
      std::exp(-2.0 * alpha * alpha * (1.0 - eta) / den) /
      (std::numbers::pi * (1.0 + std::exp(-2.0 * alpha * alpha)));
  const double nome = std::exp(-2.0 * s2 * alpha * alpha * eta / den);
  return prefactor * jacobi_theta3(std::numbers::pi / 2.0, nome);
}

NegativityValidity negativity_validity(double alpha, double r, double eta) {
  const double s2 = std::exp(2.0 * r);
  const double radicand = eta * (s2 - 1.0) + s2;
  if (radicand < 0.0) {
    // strong squeezing (s^2 < eta/(1+eta)): the criterion is undefined and
    // the estimate certainly does not apply
    return NegativityValidity{false,
                              -std::numeric_limits<double>::infinity()};
  }
  const double lhs =
      3.0 * alpha * std::sqrt(eta) * std::sqrt(radicand) / s2;
  return NegativityValidity{lhs < 1.0, 1.0 - lhs};
}

double negativity_numeric(const WignerCoeffs& c,
                          const QuadratureOptions* opts) {
  QuadratureOptions o = opts ? *opts : wigner_quadrature_options(c, 1e-7);
  const PhaseSpaceBox box = wigner_box(c);
  const auto integrand = [&c](double x, double p) {
    const double w = wigner_eval(c, x, p);
    return 0.5 * (std::abs(w) - w);
  };
  const QuadratureResult res =
      integrate_2d(integrand, box.x_lo, box.x_hi, box.p_lo, box.p_hi, o);
  if (!res.converged)
    throw std::runtime_error(
        "negativity_numeric: quadrature did not converge; achieved error "
        "bound " +
        std::to_string(res.error));
  return res.value;
}

double fringe_overlap(double alpha, double r, double eta, double delta) {
  if (!(alpha > 0.0))
    throw std::domain_error("fringe_overlap: alpha must be > 0");
  const WignerCoeffs c = wigner_coeffs(alpha, r, eta, delta);
  const double B = c.B, D = c.D;
  if (!(D > 0.0))
    throw std::domain_error("fringe_overlap: zero fringe wavenumber");

  // The common factor 2 e^{-C} cancels in the normalized inner product; the
  // profiles are translation-invariant in delta, so work in u = p - delta.
  const double half = std::numbers::pi / D;            // half-period width
  const double u_max = std::sqrt(42.0 / B);            // envelope < 1e-18
  const int k_max = static_cast<int>(std::ceil(u_max / half)) + 1;

  QuadratureOptions o;
  o.abs_tol = 1e-13;
  o.rel_tol = 0.0;
  o.max_panel_x = half / 2.0;

  const auto fine = [B, D](double u) {
    return std::exp(-B * u * u) * std::cos(D * u);
  };

  // <fine, fine> over the full line
  const QuadratureResult ff = integrate_1d(
      [&fine](double u) { return fine(u) * fine(u); }, -u_max, u_max, o);

  // lobe k: u in [(2k-1) pi/(2D), (2k+1) pi/(2D)), envelope frozen at the
  // lobe center k pi/D
  double fa = 0.0, aa = 0.0;
  for (int k = -k_max; k <= k_max; ++k) {
    const double center = k * half;
    const double lo = center - 0.5 * half;
    const double hi = center + 0.5 * half;
    const double env = std::exp(-B * center * center);
    const QuadratureResult cross = integrate_1d(
        [&fine, env, D](double u) { return fine(u) * env * std::cos(D * u); },
        lo, hi, o);
    const QuadratureResult self = integrate_1d(
        [env, D](double u) {
          const double g = env * std::cos(D * u);
          return g * g;
        },
        lo, hi, o);
    fa += cross.value;
    aa += self.value;
  }

  const double norm = std::sqrt(ff.value * aa);
  if (!(norm > 0.0))
    throw std::domain_error("fringe_overlap: zero-norm profile");
  return fa / norm;
}

}  // namespace catphase
