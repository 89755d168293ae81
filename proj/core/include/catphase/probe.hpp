#pragma once

#include <optional>

namespace catphase {

// Physical inputs of one probe configuration: an even cat state of
// amplitude alpha, (anti)squeezed by r (r > 0 stretches the momentum
// quadrature), sent through loss eta1, displaced along momentum by the raw
// signal delta0, then through loss eta2.  delta0 may be derived from a mean
// photon number N and phase shift phi as delta0 = sqrt(N)*phi.
struct ProbeSpec {
  double alpha = 0.0;   // cat amplitude, >= 0
  double r = 0.0;       // log squeeze parameter
  double eta1 = 1.0;    // pre-displacement efficiency, in (0, 1]
  double eta2 = 1.0;    // post-displacement efficiency, in (0, 1]
  double delta0 = 0.0;  // raw displacement, >= 0

  // Provenance when delta0 was derived from (N, phi).
  std::optional<double> mean_photons;
  std::optional<double> phase;

  static ProbeSpec displaced(double alpha, double r, double eta1, double eta2,
                             double delta0);
  static ProbeSpec from_phase(double alpha, double r, double eta1, double eta2,
                              double mean_photons, double phase);

  // Throws std::invalid_argument when a field is out of range or
  // delta0 != sqrt(N)*phi while both are supplied.
  void validate() const;
};

// The two-loss chain {loss eta1 -> displace delta0 -> loss eta2} acts on the
// signal mode exactly like {loss eta1*eta2 -> displace delta0*sqrt(eta2)}.
struct EffectiveChannel {
  double eta;    // eta1 * eta2
  double delta;  // delta0 * sqrt(eta2)
};

EffectiveChannel effective_channel(const ProbeSpec& spec);

}  // namespace catphase
