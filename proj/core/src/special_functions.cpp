#include "catphase/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace catphase {

namespace {

bool is_finite(double v) { return std::isfinite(v); }
bool is_finite(const std::complex<double>& v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

template <typename T>
void laguerre_sequence_impl(int n_max, double a, T z, T* out) {
  if (n_max < 0) throw std::invalid_argument("laguerre: n must be >= 0");
  out[0] = T(1);
  if (n_max == 0) return;
  out[1] = T(1.0 + a) - z;
  for (int k = 1; k < n_max; ++k) {
    out[k + 1] =
        ((T(2.0 * k + 1.0 + a) - z) * out[k] - (k + a) * out[k - 1]) /
        double(k + 1);
  }
  for (int k = 0; k <= n_max; ++k) {
    if (!is_finite(out[k]))
      throw std::overflow_error("laguerre: non-finite value in recurrence");
  }
}

template <typename T>
T laguerre_impl(int n, double a, T z) {
  if (n < 0) throw std::invalid_argument("laguerre: n must be >= 0");
  T p0 = T(1);
  if (n == 0) return p0;
  T p1 = T(1.0 + a) - z;
  for (int k = 1; k < n; ++k) {
    T p2 = ((T(2.0 * k + 1.0 + a) - z) * p1 - (k + a) * p0) / double(k + 1);
    p0 = p1;
    p1 = p2;
  }
  if (!is_finite(p1))
    throw std::overflow_error("laguerre: non-finite result");
  return p1;
}

}  // namespace

double laguerre(int n, double a, double z) { return laguerre_impl(n, a, z); }

std::complex<double> laguerre(int n, double a, std::complex<double> z) {
  return laguerre_impl(n, a, z);
}

void laguerre_sequence(int n_max, double a, double z, double* out) {
  laguerre_sequence_impl(n_max, a, z, out);
}

void laguerre_sequence(int n_max, double a, std::complex<double> z,
                       std::complex<double>* out) {
  laguerre_sequence_impl(n_max, a, z, out);
}

double gamma_half_ratio(int m) {
  if (m < 0) throw std::invalid_argument("gamma_half_ratio: m must be >= 0");
  if (m <= 20) {
    double g = std::sqrt(std::numbers::pi);
    for (int i = 1; i <= m; ++i) g *= (i - 0.5) / i;
    return g;
  }
  const double x = static_cast<double>(m);
  const double e = -1.0 / (8.0 * x) + 1.0 / (192.0 * x * x * x) -
                   1.0 / (640.0 * x * x * x * x * x);
  return std::exp(e) / std::sqrt(x);
}

double erfc(double x) { return std::erfc(x); }

double jacobi_theta3(double z, double q) {
  if (!(q >= 0.0 && q < 1.0))
    throw std::domain_error("jacobi_theta3: q must lie in [0, 1)");
  double sum = 1.0;
  // q^{k^2} built incrementally: q^{k^2} = q^{(k-1)^2} * q^{2k-1}
  double qk2 = 1.0;
  double qodd = q;
  const double q2 = q * q;
  for (int k = 1; k <= 1000; ++k) {
    qk2 *= qodd;
    qodd *= q2;
    const double term = 2.0 * qk2 * std::cos(2.0 * k * z);
    sum += term;
    if (std::abs(2.0 * qk2) < 1e-16) break;
  }
  return sum;
}

double db_from_r(double r) {
  return 10.0 * std::log10(std::exp(2.0 * r));
}

double r_from_db(double db) {
  return db * std::numbers::ln10 / 20.0;
}

}  // namespace catphase
