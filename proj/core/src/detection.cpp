#include "catphase/detection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "catphase/special_functions.hpp"

namespace catphase {

namespace {
constexpr double kTieTolerance = 1e-15;
}

DecisionRule ml_partition(const PhotonDistribution& p0,
                          const PhotonDistribution& pdelta) {
  if (p0.n_max != pdelta.n_max)
    throw std::invalid_argument(
        "ml_partition: distributions must share n_max");
  DecisionRule rule;
  rule.assign.resize(p0.n_max + 1);
  for (int n = 0; n <= p0.n_max; ++n) {
    const double a = p0.prob_clipped(n);
    const double b = pdelta.prob_clipped(n);
    if (std::abs(a - b) <= kTieTolerance) {
      rule.assign[n] = Region::kNull;  // ties favor the null hypothesis
      ++rule.tie_count;
    } else {
      rule.assign[n] = (a > b) ? Region::kNull : Region::kShift;
    }
  }
  return rule;
}

ErrorReport error_probs(const DecisionRule& rule, const PhotonDistribution& p0,
                        const PhotonDistribution& pdelta) {
  if (static_cast<int>(rule.assign.size()) != p0.n_max + 1 ||
      p0.n_max != pdelta.n_max)
    throw std::invalid_argument(
        "error_probs: rule and distributions must share n_max");
  double fp = 0.0, fn = 0.0;
  for (int n = 0; n <= p0.n_max; ++n) {
    if (rule.assign[n] == Region::kShift)
      fp += p0.prob_clipped(n);
    else
      fn += pdelta.prob_clipped(n);
  }
  ErrorReport report;
  report.p_fp = std::clamp(fp + p0.tail_bound, 0.0, 1.0);
  report.p_fn = std::clamp(fn + pdelta.tail_bound, 0.0, 1.0);
  report.p_tot = report.p_fp + report.p_fn;
  return report;
}

double homodyne_pdf(double p, double delta0, double r, double eta) {
  if (!(eta > 0.0 && eta <= 1.0))
    throw std::invalid_argument("homodyne_pdf: eta must lie in (0, 1]");
  const double s = std::exp(-std::abs(r));
  const double v = eta * (s * s - 1.0) + 1.0;
  const double u = p - std::sqrt(eta) * delta0;
  return std::sqrt(2.0 / (std::numbers::pi * v)) * std::exp(-2.0 * u * u / v);
}

double squeezed_baseline(double delta0, double r, double eta) {
  if (!(delta0 >= 0.0))
    throw std::invalid_argument("squeezed_baseline: delta0 must be >= 0");
  if (!(eta > 0.0 && eta <= 1.0))
    throw std::invalid_argument("squeezed_baseline: eta must lie in (0, 1]");
  const double s = std::exp(-std::abs(r));
  const double v = eta * (s * s - 1.0) + 1.0;
  return catphase::erfc(delta0 * std::sqrt(eta / (2.0 * v)));
}

}  // namespace catphase
