#include "catphase/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <cstdio>
#include <string>

namespace catphase {

namespace {

using cvec = std::vector<std::complex<double>>;

double norm2(const cvec& v) {
  double s = 0.0;
  for (const auto& a : v) s += std::norm(a);
  return s;
}

// psi <- exp(G) psi for an anti-Hermitian generator given by its action,
// via scaling and squaring: apply exp(G / 2^s) (truncated Taylor) 2^s times.
template <typename MatVec>
void apply_exponential(cvec& psi, const MatVec& matvec, double norm_bound) {
  int scale_pow = 0;
  while (norm_bound > 0.5 && scale_pow < 60) {
    norm_bound *= 0.5;
    ++scale_pow;
  }
  const double inv_scale = std::ldexp(1.0, -scale_pow);
  const long reps = 1L << scale_pow;
  cvec term(psi.size()), next(psi.size());
  for (long rep = 0; rep < reps; ++rep) {
    term = psi;
    double acc_norm = norm2(psi);
    for (int k = 1; k <= 40; ++k) {
      matvec(term, next);
      const double f = inv_scale / k;
      for (std::size_t i = 0; i < psi.size(); ++i) {
        term[i] = next[i] * f;
        psi[i] += term[i];
      }
      const double t = norm2(term);
      if (t <= 1e-34 * acc_norm) break;
    }
  }
}

}  // namespace

std::vector<std::complex<double>> coherent_cat_amplitudes(double alpha,
                                                          int dim) {
  if (dim < 4) throw std::invalid_argument("coherent_cat_amplitudes: dim < 4");
  cvec amps(dim, 0.0);
  if (alpha == 0.0) {
    amps[0] = 1.0;
    return amps;
  }
  const double norm_const = 2.0 * (1.0 + std::exp(-2.0 * alpha * alpha));
  const double log_alpha = std::log(alpha);
  for (int n = 0; n < dim; n += 2) {
    // 2 e^{-a^2/2} a^n / sqrt(n!), in logs for stability
    const double log_amp = -0.5 * alpha * alpha + n * log_alpha -
                           0.5 * std::lgamma(n + 1.0);
    amps[n] = 2.0 * std::exp(log_amp) / std::sqrt(norm_const);
  }
  return amps;
}

void apply_squeeze(std::vector<std::complex<double>>& psi, double r) {
  if (r == 0.0) return;
  const int dim = static_cast<int>(psi.size());
  const double half_r = 0.5 * r;
  // G = (r/2)(a^2 - a^dag^2):
  //   (G psi)_n = (r/2)(sqrt((n+1)(n+2)) psi_{n+2} - sqrt(n(n-1)) psi_{n-2})
  const auto matvec = [dim, half_r](const cvec& in, cvec& out) {
    for (int n = 0; n < dim; ++n) {
      std::complex<double> v = 0.0;
      if (n + 2 < dim)
        v += std::sqrt(double(n + 1) * double(n + 2)) * in[n + 2];
      if (n >= 2) v -= std::sqrt(double(n) * double(n - 1)) * in[n - 2];
      out[n] = half_r * v;
    }
  };
  apply_exponential(psi, matvec, std::abs(r) * (dim + 1));
}

void apply_displacement(std::vector<std::complex<double>>& psi, double delta) {
  if (delta == 0.0) return;
  const int dim = static_cast<int>(psi.size());
  const std::complex<double> i_delta(0.0, delta);
  // G = i delta (a + a^dag):
  //   (G psi)_n = i delta (sqrt(n+1) psi_{n+1} + sqrt(n) psi_{n-1})
  const auto matvec = [dim, i_delta](const cvec& in, cvec& out) {
    for (int n = 0; n < dim; ++n) {
      std::complex<double> v = 0.0;
      if (n + 1 < dim) v += std::sqrt(double(n + 1)) * in[n + 1];
      if (n >= 1) v += std::sqrt(double(n)) * in[n - 1];
      out[n] = i_delta * v;
    }
  };
  apply_exponential(psi, matvec, 2.0 * std::abs(delta) * std::sqrt(dim));
}

FockStateVector finalize_state(const std::vector<std::complex<double>>& psi,
                               double norm_tol) {
  const int dim = static_cast<int>(psi.size());
  const int keep = (3 * dim) / 4;  // guard band: top quarter dropped
  FockStateVector state;
  state.amps.assign(psi.begin(), psi.begin() + keep);
  state.dim = keep;
  state.norm_defect = 1.0 - norm2(state.amps);
  if (state.norm_defect > norm_tol) {
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "pure_cat_fock_amplitudes: truncation too small, norm "
                  "defect %.3g exceeds tolerance %.3g; increase dim",
                  state.norm_defect, norm_tol);
    throw std::runtime_error(msg);
  }
  return state;
}

FockStateVector pure_cat_fock_amplitudes(double alpha, double r,
                                         double delta_pre, int dim,
                                         double norm_tol) {
  cvec psi = coherent_cat_amplitudes(alpha, dim);
  apply_squeeze(psi, r);
  apply_displacement(psi, delta_pre);
  return finalize_state(psi, norm_tol);
}

double mean_photon_number(const FockStateVector& state) {
  double s = 0.0;
  for (int n = 0; n < state.dim; ++n) s += n * std::norm(state.amps[n]);
  return s;
}

QuadratureMoments quadrature_moments(const FockStateVector& state) {
  std::complex<double> a_mean = 0.0, a2_mean = 0.0;
  double n_mean = 0.0;
  for (int n = 0; n < state.dim; ++n) {
    const auto cn = std::conj(state.amps[n]);
    if (n + 1 < state.dim)
      a_mean += cn * std::sqrt(double(n + 1)) * state.amps[n + 1];
    if (n + 2 < state.dim)
      a2_mean += cn * std::sqrt(double(n + 1) * double(n + 2)) *
                 state.amps[n + 2];
    n_mean += n * std::norm(state.amps[n]);
  }
  QuadratureMoments m;
  m.mean_x = a_mean.real();
  m.mean_p = a_mean.imag();
  const double xx = 0.25 * (2.0 * n_mean + 1.0 + 2.0 * a2_mean.real());
  const double pp = 0.25 * (2.0 * n_mean + 1.0 - 2.0 * a2_mean.real());
  m.var_x = xx - m.mean_x * m.mean_x;
  m.var_p = pp - m.mean_p * m.mean_p;
  return m;
}

}  // namespace catphase
