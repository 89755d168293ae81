#pragma once

// Test-only oracles, independent of the library implementation paths they
// referee.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace oracles {

// Explicit finite sum for the generalized Laguerre polynomial:
//   L_n^a(z) = sum_{k=0}^{n} (-1)^k Gamma(n+a+1) /
//              (Gamma(k+a+1) (n-k)! k!) z^k
// Accumulated in extended precision: the alternating sum cancels heavily
// for |z| ~ 20, n ~ 30 and would otherwise lose ~10 digits.
struct LaguerreSum {
  std::complex<double> value;
  double term_budget;  // sum of |term|: the cancellation scale
};

inline LaguerreSum laguerre_sum(int n, double a, std::complex<double> z) {
  const std::complex<long double> zl(z.real(), z.imag());
  std::complex<long double> acc = 0.0L;
  long double budget = 0.0L;
  for (int k = 0; k <= n; ++k) {
    const long double log_coeff =
        std::lgammal(n + a + 1.0L) - std::lgammal(k + a + 1.0L) -
        std::lgammal(n - k + 1.0L) - std::lgammal(k + 1.0L);
    std::complex<long double> zk = 1.0L;
    for (int i = 0; i < k; ++i) zk *= zl;
    const long double sign = (k % 2 == 0) ? 1.0L : -1.0L;
    const std::complex<long double> term = sign * std::exp(log_coeff) * zk;
    acc += term;
    budget += std::abs(term);
  }
  return {{static_cast<double>(acc.real()), static_cast<double>(acc.imag())},
          static_cast<double>(budget)};
}

// log-Gamma route for Gamma(m+1/2)/m!
inline double gamma_half_ratio_lgamma(int m) {
  return std::exp(std::lgamma(m + 0.5) - std::lgamma(m + 1.0));
}

// erfc by Maclaurin series of erf for small |x| and a Lentz continued
// fraction for the tail; good to ~1e-14 relative over |x| <= 10.
inline double erfc_reference(double x) {
  const double ax = std::abs(x);
  double value;
  if (ax < 2.0) {
    double term = ax, sum = ax;
    for (int n = 1; n < 200; ++n) {
      term *= -ax * ax / n;
      const double add = term / (2.0 * n + 1.0);
      sum += add;
      if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    value = 1.0 - 2.0 / std::sqrt(std::numbers::pi) * sum;
  } else {
    // erfc(x) = exp(-x^2)/(x sqrt(pi)) * 1/(1 + 1/(2x^2)/(1 + 2/(2x^2)/...))
    // evaluated by the modified Lentz algorithm
    const double two_x2 = 2.0 * ax * ax;
    double f = 1.0, c = 1.0, d = 0.0;
    for (int n = 1; n <= 120; ++n) {
      const double an = n / two_x2;
      d = 1.0 + an * d;
      if (d == 0.0) d = 1e-300;
      c = 1.0 + an / c;
      if (c == 0.0) c = 1e-300;
      d = 1.0 / d;
      const double delta = c * d;
      f *= delta;
      if (std::abs(delta - 1.0) < 1e-17) break;
    }
    value = std::exp(-ax * ax) / (ax * std::sqrt(std::numbers::pi)) / f;
  }
  return x >= 0.0 ? value : 2.0 - value;
}

// Direct partial sums of the theta series with explicit powers.
inline double theta3_partial(double z, double q, int terms) {
  double sum = 1.0;
  for (int k = 1; k <= terms; ++k)
    sum += 2.0 * std::pow(q, double(k) * k) * std::cos(2.0 * k * z);
  return sum;
}

// Poisson distribution of a displaced vacuum with mean delta^2.
inline std::vector<double> displaced_vacuum_poisson(double delta, int n_max) {
  std::vector<double> p(n_max + 1);
  const double mean = delta * delta;
  double log_fact = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) log_fact += std::log(double(n));
    p[n] = std::exp(-mean + n * std::log(mean > 0 ? mean : 1e-300) - log_fact);
    if (mean == 0.0) p[n] = (n == 0) ? 1.0 : 0.0;
  }
  return p;
}

// Deterministic random probability vectors for the ML optimality sweep.
inline std::vector<double> random_distribution(std::mt19937& rng, int size) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<double> p(size);
  double total = 0.0;
  for (double& v : p) {
    v = uni(rng);
    total += v;
  }
  for (double& v : p) v /= total;
  return p;
}

}  // namespace oracles
