#include "catphase/photon_statistics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "catphase/fock.hpp"
#include "catphase/quadrature.hpp"
#include "catphase/special_functions.hpp"

namespace catphase {

double PhotonDistribution::prob(int n) const {
  if (n < 0 || n > n_max) return 0.0;
  return probs[static_cast<std::size_t>(n)];
}

double PhotonDistribution::prob_clipped(int n) const {
  return std::max(0.0, prob(n));
}

double PhotonDistribution::total() const {
  double s = 0.0;
  for (double p : probs) s += p;
  return s;
}

double PhotonDistribution::mean() const {
  double s = 0.0;
  for (int n = 0; n <= n_max; ++n) s += n * probs[n];
  return s;
}

PhotonDistribution PhotonDistribution::truncated(int new_n_max) const {
  if (new_n_max >= n_max) return *this;
  PhotonDistribution out;
  out.probs.assign(probs.begin(), probs.begin() + new_n_max + 1);
  out.n_max = new_n_max;
  double dropped = 0.0;
  for (int n = new_n_max + 1; n <= n_max; ++n) dropped += std::max(0.0, probs[n]);
  out.tail_bound = tail_bound + dropped;
  return out;
}

namespace {

// Shared per-(alpha, r, eta, delta) state of the closed-form series.  The
// Laguerre arguments do not depend on the summation indices, so each
// sequence is produced once per distribution.
struct ClosedFormTerms {
  WignerCoeffs co;
  std::vector<double> lag_bell_x;                 // L_m^{-1/2}(-A^2 xi^2/(A+2))
  std::vector<double> lag_bell_p;                 // L_j^{-1/2}(-B^2 d^2/(B+2))
  std::vector<std::complex<double>> lag_fringe;   // L_j^{-1/2}((D+2iBd)^2/(4(B+2)))
  std::vector<double> gamma_ratio;                // Gamma(m+1/2)/m!
  std::vector<double> pow_a;                      // (A+2)^{-(m+1/2)}
  std::vector<double> pow_b;                      // (B+2)^{-(j+1/2)}
  double bell_weight = 0.0;                       // pi * exp(bell exponent)
  double fringe_weight = 0.0;                     // sqrt(pi) * exp(fringe exponent)
  std::complex<double> fringe_phase{1.0, 0.0};    // e^{2 i D d / (B+2)}
};

ClosedFormTerms make_closed_form_terms(double alpha, double r, double eta,
                                       double delta, int n_cap) {
  ClosedFormTerms t;
  t.co = wigner_coeffs(alpha, r, eta, delta);
  const double A = t.co.A, B = t.co.B, C = t.co.C, D = t.co.D, xi = t.co.xi;
  const double sA = A + 2.0, sB = B + 2.0;
  const double arg_bell_x = A * A * xi * xi / sA;
  const double arg_bell_p = B * B * delta * delta / sB;
  const std::complex<double> arg_fringe =
      std::complex<double>(D, 2.0 * B * delta) *
      std::complex<double>(D, 2.0 * B * delta) / (4.0 * sB);

  t.lag_bell_x.resize(n_cap + 1);
  t.lag_bell_p.resize(n_cap + 1);
  t.lag_fringe.resize(n_cap + 1);
  laguerre_sequence(n_cap, -0.5, -arg_bell_x, t.lag_bell_x.data());
  laguerre_sequence(n_cap, -0.5, -arg_bell_p, t.lag_bell_p.data());
  laguerre_sequence(n_cap, -0.5, arg_fringe, t.lag_fringe.data());

  t.gamma_ratio.resize(n_cap + 1);
  t.pow_a.resize(n_cap + 1);
  t.pow_b.resize(n_cap + 1);
  for (int m = 0; m <= n_cap; ++m) {
    t.gamma_ratio[m] = gamma_half_ratio(m);
    t.pow_a[m] = std::pow(sA, -(m + 0.5));
    t.pow_b[m] = std::pow(sB, -(m + 0.5));
  }

  t.bell_weight = std::numbers::pi *
                  std::exp(-2.0 * A * xi * xi / sA -
                           2.0 * B * delta * delta / sB);
  t.fringe_weight =
      std::sqrt(std::numbers::pi) *
      std::exp(-C - D * D / (4.0 * sB) - 2.0 * B * delta * delta / sB);
  const double phi = 2.0 * D * delta / sB;
  t.fringe_phase = std::complex<double>(std::cos(phi), std::sin(phi));
  return t;
}

double closed_form_pn(const ClosedFormTerms& t, int n) {
  double total = 0.0;
  double binom = 1.0;       // C(n, k)
  double four_k = 1.0;      // 4^k
  for (int k = 0; k <= n; ++k) {
    double inner = 0.0;
    for (int m = 0; m <= k; ++m) {
      const int j = k - m;
      const double bell =
          t.bell_weight * t.lag_bell_x[m] * t.lag_bell_p[j];
      const double fringe =
          t.fringe_weight * t.gamma_ratio[m] *
          (t.fringe_phase * t.lag_fringe[j]).real();
      inner += t.pow_a[m] * t.pow_b[j] * (bell + fringe);
    }
    const double sign = ((n + k) % 2 == 0) ? 1.0 : -1.0;
    total += sign * four_k * binom * inner;
    binom *= double(n - k) / double(k + 1);
    four_k *= 4.0;
  }
  const double pn = 4.0 * t.co.F * total;
  if (!std::isfinite(pn))
    throw std::overflow_error("pn_closed_form: non-finite intermediate at n=" +
                              std::to_string(n));
  return pn;
}

void require_stable(int n, int n_stable) {
  if (n > n_stable)
    throw std::domain_error(
        "pn_closed_form: n = " + std::to_string(n) + " exceeds n_stable = " +
        std::to_string(n_stable) +
        "; the alternating series is unreliable there, use pn_combinatorial");
}

}  // namespace

double pn_closed_form(double alpha, double r, double eta, double delta, int n,
                      int n_stable) {
  if (n < 0) throw std::invalid_argument("pn_closed_form: n must be >= 0");
  require_stable(n, n_stable);
  const ClosedFormTerms t = make_closed_form_terms(alpha, r, eta, delta, n);
  return closed_form_pn(t, n);
}

PhotonDistribution closed_form_distribution(double alpha, double r, double eta,
                                            double delta, int n_max,
                                            int n_stable) {
  if (n_max < 0)
    throw std::invalid_argument("closed_form_distribution: n_max must be >= 0");
  require_stable(n_max, n_stable);
  const ClosedFormTerms t =
      make_closed_form_terms(alpha, r, eta, delta, n_max);
  PhotonDistribution d;
  d.probs.resize(n_max + 1);
  for (int n = 0; n <= n_max; ++n) d.probs[n] = closed_form_pn(t, n);
  d.n_max = n_max;
  d.tail_bound = std::max(0.0, 1.0 - d.total());
  return d;
}

namespace {

// Adaptive 2-D panel integration of the vector of Fock overlaps; the error
// metric is the max-norm over components so every p_n converges.
struct OverlapIntegrator {
  const WignerCoeffs& c;
  int n_max;
  QuadratureOptions opts;
  std::vector<double> value;
  double err_total = 0.0;
  bool converged = true;
  long panels_left = 0;

  OverlapIntegrator(const WignerCoeffs& co, int nm) : c(co), n_max(nm) {
    value.assign(n_max + 1, 0.0);
  }

  void accumulate(double ax, double bx, double ay, double by,
                  const GaussLegendreRule& rule, std::vector<double>& out) {
    std::fill(out.begin(), out.end(), 0.0);
    const double cx = 0.5 * (ax + bx), hx = 0.5 * (bx - ax);
    const double cy = 0.5 * (ay + by), hy = 0.5 * (by - ay);
    std::vector<double> lag(n_max + 1);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double x = cx + hx * rule.nodes[i];
      for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        const double p = cy + hy * rule.nodes[j];
        const double wt = rule.weights[i] * rule.weights[j];
        const double w_rho = wigner_eval(c, x, p);
        const double r2 = x * x + p * p;
        laguerre_sequence(n_max, 0.0, 4.0 * r2, lag.data());
        // pi * W_rho * W_n with W_n = (2/pi)(-1)^n e^{-2 r2} L_n(4 r2)
        const double base = 2.0 * w_rho * std::exp(-2.0 * r2) * wt;
        double sign = 1.0;
        for (int n = 0; n <= n_max; ++n) {
          out[n] += sign * base * lag[n];
          sign = -sign;
        }
      }
    }
    const double scale = hx * hy;
    for (double& v : out) v *= scale;
  }

  void panel(double ax, double bx, double ay, double by, double tol,
             int depth) {
    std::vector<double> q16(n_max + 1), q8(n_max + 1);
    if (panels_left-- <= 0) {
      converged = false;
      accumulate(ax, bx, ay, by, gauss_legendre(16), q16);
      for (int n = 0; n <= n_max; ++n) value[n] += q16[n];
      err_total += std::abs((bx - ax) * (by - ay));
      return;
    }
    accumulate(ax, bx, ay, by, gauss_legendre(16), q16);
    accumulate(ax, bx, ay, by, gauss_legendre(8), q8);
    double err = 0.0;
    for (int n = 0; n <= n_max; ++n)
      err = std::max(err, std::abs(q16[n] - q8[n]));
    if (err <= tol || depth >= opts.max_depth) {
      for (int n = 0; n <= n_max; ++n) value[n] += q16[n];
      err_total += err;
      if (err > tol) converged = false;
      return;
    }
    if (bx - ax >= by - ay) {
      const double mid = 0.5 * (ax + bx);
      panel(ax, mid, ay, by, 0.5 * tol, depth + 1);
      panel(mid, bx, ay, by, 0.5 * tol, depth + 1);
    } else {
      const double mid = 0.5 * (ay + by);
      panel(ax, bx, ay, mid, 0.5 * tol, depth + 1);
      panel(ax, bx, mid, by, 0.5 * tol, depth + 1);
    }
  }
};

}  // namespace

std::vector<double> pn_quadrature_all(const WignerCoeffs& c, int n_max) {
  if (n_max < 0)
    throw std::invalid_argument("pn_quadrature_all: n_max must be >= 0");
  // Box: intersection of the state's support with the Fock-state reach
  // (the n-photon Wigner function decays beyond radius ~ sqrt(n)).
  const double reach = std::sqrt(n_max + 0.5) + 4.0;
  PhaseSpaceBox box = wigner_box(c);
  box.x_lo = std::max(box.x_lo, -reach);
  box.x_hi = std::min(box.x_hi, reach);
  box.p_lo = std::max(box.p_lo, -reach);
  box.p_hi = std::min(box.p_hi, reach);
  if (box.x_lo >= box.x_hi || box.p_lo >= box.p_hi)
    return std::vector<double>(n_max + 1, 0.0);

  constexpr double kOverlapTol = 1e-9;  // total budget across the box
  OverlapIntegrator integ(c, n_max);
  integ.opts = wigner_quadrature_options(c, kOverlapTol);
  // keep the panel phase budget modest for both the fringes and the
  // Laguerre oscillations (local wavenumber ~ 2 sqrt(4 n + 2))
  const double k_fock = 2.0 * std::sqrt(4.0 * n_max + 2.0);
  const double cap = std::min(0.6, 10.0 / k_fock);
  integ.opts.max_panel_x =
      integ.opts.max_panel_x > 0 ? std::min(integ.opts.max_panel_x, cap) : cap;
  integ.opts.max_panel_y =
      integ.opts.max_panel_y > 0 ? std::min(integ.opts.max_panel_y, cap) : cap;
  integ.panels_left = integ.opts.max_panels;

  const double wx = box.x_hi - box.x_lo;
  const double wy = box.p_hi - box.p_lo;
  const int nx = std::max(
      1, static_cast<int>(std::ceil(wx / integ.opts.max_panel_x)));
  const int ny = std::max(
      1, static_cast<int>(std::ceil(wy / integ.opts.max_panel_y)));
  const double tol_cell = kOverlapTol / (double(nx) * ny);
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      integ.panel(box.x_lo + wx * i / nx, box.x_lo + wx * (i + 1) / nx,
                  box.p_lo + wy * j / ny, box.p_lo + wy * (j + 1) / ny,
                  tol_cell, 0);
    }
  }
  if (!integ.converged)
    throw std::runtime_error(
        "pn_quadrature: overlap quadrature did not converge; achieved error "
        "bound " +
        std::to_string(integ.err_total));
  return integ.value;
}

double pn_quadrature(const WignerCoeffs& c, int n) {
  if (n < 0) throw std::invalid_argument("pn_quadrature: n must be >= 0");
  return pn_quadrature_all(c, n)[n];
}

PhotonDistribution quadrature_distribution(const WignerCoeffs& c, int n_max) {
  PhotonDistribution d;
  d.probs = pn_quadrature_all(c, n_max);
  d.n_max = n_max;
  d.tail_bound = std::max(0.0, 1.0 - d.total());
  return d;
}

PhotonDistribution binomial_loss(const PhotonDistribution& d, double eta) {
  if (!(eta > 0.0 && eta <= 1.0))
    throw std::invalid_argument("binomial_loss: eta must lie in (0, 1]");
  if (eta == 1.0) return d;
  const int size = d.n_max + 1;
  PhotonDistribution out;
  out.probs.assign(size, 0.0);
  out.n_max = d.n_max;
  out.tail_bound = d.tail_bound;  // the channel never raises photon number
  const double loss = 1.0 - eta;
  for (int n = 0; n < size; ++n) {
    // P(n|m) built iteratively: P(n|n) = eta^n,
    // P(n|m+1) = P(n|m) * (m+1)/(m+1-n) * (1-eta)
    double cond = std::pow(eta, n);
    double acc = cond * d.probs[n];
    for (int m = n + 1; m < size; ++m) {
      cond *= loss * double(m) / double(m - n);
      acc += cond * d.probs[m];
    }
    out.probs[n] = acc;
  }
  return out;
}

PhotonDistribution pn_combinatorial(const ProbeSpec& spec, int dim,
                                    double norm_tol) {
  const EffectiveChannel ec = effective_channel(spec);
  // {loss eta -> displace delta} == {displace delta/sqrt(eta) -> loss eta}
  const double delta_pre = ec.delta / std::sqrt(ec.eta);
  const FockStateVector state =
      pure_cat_fock_amplitudes(spec.alpha, spec.r, delta_pre, dim, norm_tol);
  PhotonDistribution d;
  d.probs.resize(state.dim);
  for (int n = 0; n < state.dim; ++n) d.probs[n] = std::norm(state.amps[n]);
  d.n_max = state.dim - 1;
  d.tail_bound = std::max(0.0, state.norm_defect);
  return binomial_loss(d, ec.eta);
}

double distribution_distance(const PhotonDistribution& p,
                             const PhotonDistribution& q) {
  const int n_top = std::max(p.n_max, q.n_max);
  double delta = 0.0;
  for (int n = 0; n <= n_top; ++n) delta += std::abs(p.prob(n) - q.prob(n));
  return delta;
}

}  // namespace catphase
