#include "catphase/probe.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace catphase {

ProbeSpec ProbeSpec::displaced(double alpha, double r, double eta1,
                               double eta2, double delta0) {
  ProbeSpec spec;
  spec.alpha = alpha;
  spec.r = r;
  spec.eta1 = eta1;
  spec.eta2 = eta2;
  spec.delta0 = delta0;
  spec.validate();
  return spec;
}

ProbeSpec ProbeSpec::from_phase(double alpha, double r, double eta1,
                                double eta2, double mean_photons,
                                double phase) {
  ProbeSpec spec;
  spec.alpha = alpha;
  spec.r = r;
  spec.eta1 = eta1;
  spec.eta2 = eta2;
  spec.mean_photons = mean_photons;
  spec.phase = phase;
  spec.delta0 = std::sqrt(mean_photons) * phase;
  spec.validate();
  return spec;
}

void ProbeSpec::validate() const {
  if (!(alpha >= 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("ProbeSpec: alpha must be finite and >= 0");
  if (!std::isfinite(r))
    throw std::invalid_argument("ProbeSpec: r must be finite");
  if (!(eta1 > 0.0 && eta1 <= 1.0))
    throw std::invalid_argument("ProbeSpec: eta1 must lie in (0, 1]");
  if (!(eta2 > 0.0 && eta2 <= 1.0))
    throw std::invalid_argument("ProbeSpec: eta2 must lie in (0, 1]");
  if (!(delta0 >= 0.0) || !std::isfinite(delta0))
    throw std::invalid_argument("ProbeSpec: delta0 must be finite and >= 0");
  if (mean_photons.has_value() != phase.has_value())
    throw std::invalid_argument(
        "ProbeSpec: mean_photons and phase must be supplied together");
  if (mean_photons) {
    if (!(*mean_photons >= 0.0))
      throw std::invalid_argument("ProbeSpec: mean_photons must be >= 0");
    const double derived = std::sqrt(*mean_photons) * *phase;
    if (std::abs(derived - delta0) >
        1e-12 * std::max(1.0, std::abs(derived)))
      throw std::invalid_argument(
          "ProbeSpec: delta0 != sqrt(mean_photons) * phase (got delta0 = " +
          std::to_string(delta0) + ", derived = " + std::to_string(derived) +
          ")");
  }
}

EffectiveChannel effective_channel(const ProbeSpec& spec) {
  spec.validate();
  return EffectiveChannel{spec.eta1 * spec.eta2,
                          spec.delta0 * std::sqrt(spec.eta2)};
}

}  // namespace catphase
