#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "catphase/photon_statistics.hpp"

namespace catphase {

enum class Region : std::uint8_t {
  kNull,   // decide "no phase shift"
  kShift,  // decide "phase shift present"
};

// Total partition of the photon-count axis 0..n_max.
struct DecisionRule {
  std::vector<Region> assign;
  int tie_count = 0;
};

// Maximum-likelihood partition: n -> kNull iff p0_n > pd_n, kShift iff
// p0_n < pd_n.  Ties (|p0_n - pd_n| <= 1e-15) go to kNull and are counted.
// The inputs must share n_max.
DecisionRule ml_partition(const PhotonDistribution& p0,
                          const PhotonDistribution& pdelta);

// Error probabilities are conservative: each distribution's truncation tail
// is added to the corresponding error, so reported values upper-bound the
// exact ones (p_tot can exceed 1 by at most the summed tails for degenerate
// rules).  p_tot = p_fp + p_fn holds exactly.
struct ErrorReport {
  double p_fp = 0.0;   // sum over kShift of p0, plus p0 tail
  double p_fn = 0.0;   // sum over kNull of pdelta, plus pdelta tail
  double p_tot = 0.0;
  std::optional<double> p_sq;  // Gaussian squeezed baseline, when requested
};

ErrorReport error_probs(const DecisionRule& rule, const PhotonDistribution& p0,
                        const PhotonDistribution& pdelta);

// Momentum homodyne density of the displaced squeezed vacuum probe after
// loss eta:  omega(p) = sqrt(2/(pi v)) exp(-2 (p - sqrt(eta) delta0)^2 / v),
// v = eta (s^2 - 1) + 1 with s = e^{-|r|} (here r >= 0 means squeezing of
// the momentum quadrature, the convention opposite to the cat analysis; the
// mapping is internal, callers always pass the magnitude).
double homodyne_pdf(double p, double delta0, double r, double eta);

// Total error of the squeezed-vacuum baseline with the midpoint threshold
// p_border = sqrt(eta) delta0 / 2:
//   p_sq = erfc(delta0 sqrt(eta / (2 eta (s^2 - 1) + 2))),  s = e^{-|r|}.
// The single eta is the full effective efficiency of the chain.
double squeezed_baseline(double delta0, double r, double eta);

}  // namespace catphase
