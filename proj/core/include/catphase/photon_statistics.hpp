#pragma once

#include <vector>

#include "catphase/probe.hpp"
#include "catphase/wigner.hpp"

// Photon-number statistics of the lossy displaced anti-squeezed cat by
// three independent routes:
//   - pn_closed_form: double sum over Laguerre terms (fast, but the
//     alternating terms cancel catastrophically past n ~ 23),
//   - pn_quadrature: overlap of the state's Wigner function with the
//     Fock-state Wigner functions (the constant-factor referee),
//   - pn_combinatorial: truncated Fock evolution plus the binomial loss
//     channel (stable at any n within the truncation).

namespace catphase {

inline constexpr int kDefaultNStable = 23;
inline constexpr int kDefaultFockDim = 64;

struct PhotonDistribution {
  std::vector<double> probs;  // raw values; may carry ~1e-16 negativity
  int n_max = -1;             // probs.size() - 1
  double tail_bound = 0.0;    // mass not accounted for by probs, >= 0

  double prob(int n) const;
  // max(p, 0): used at reporting and decision time only.
  double prob_clipped(int n) const;
  double total() const;
  double mean() const;
  PhotonDistribution truncated(int new_n_max) const;
};

// Closed-form p_n.  Precondition n <= n_stable; beyond that the series is
// numerically unreliable and std::domain_error directs the caller to
// pn_combinatorial.  Inputs are the effective-channel parameters
// (eta = eta1*eta2, delta = delta0*sqrt(eta2)).
double pn_closed_form(double alpha, double r, double eta, double delta, int n,
                      int n_stable = kDefaultNStable);

PhotonDistribution closed_form_distribution(double alpha, double r, double eta,
                                            double delta, int n_max,
                                            int n_stable = kDefaultNStable);

// p_n = pi * Int W_rho W_n dx dp with
// W_n = (2/pi)(-1)^n exp(-2(x^2+p^2)) L_n(4(x^2+p^2)).
// The overlap constant is pinned by the vacuum self-overlap equal to one;
// the closed form's overall constant was fixed against this route (the two
// agree to ~1e-13, see the cross-method tests).
double pn_quadrature(const WignerCoeffs& c, int n);

// All of p_0..p_n_max in one adaptive pass (the Laguerre recurrence is
// shared per evaluation point).
std::vector<double> pn_quadrature_all(const WignerCoeffs& c, int n_max);

PhotonDistribution quadrature_distribution(const WignerCoeffs& c, int n_max);

// p_n -> sum_{m>=n} C(m,n) eta^n (1-eta)^{m-n} p_m.  Support never grows,
// so n_max and tail_bound are preserved.
PhotonDistribution binomial_loss(const PhotonDistribution& d, double eta);

// The stable engine: reduce the probe to its effective channel, commute the
// displacement in front of the loss (displace delta/sqrt(eta), then lose
// eta), build the pure state, apply the binomial channel.
PhotonDistribution pn_combinatorial(const ProbeSpec& spec,
                                    int dim = kDefaultFockDim,
                                    double norm_tol = 1e-10);

// Delta = sum_n |p_n - q_n|; the shorter distribution is zero-padded.
double distribution_distance(const PhotonDistribution& p,
                             const PhotonDistribution& q);

}  // namespace catphase
