#pragma once

#include <complex>

// Numerically stable special functions shared by the whole library.
// All functions here are pure and thread-safe.

namespace catphase {

// Generalized Laguerre polynomial L_n^a(z) via the three-term recurrence
//   (k+1) L_{k+1} = (2k+1+a-z) L_k - (k+a) L_{k-1},  L_0 = 1, L_1 = 1+a-z.
// Throws std::overflow_error if the result is not finite (extreme |z| or n).
double laguerre(int n, double a, double z);
std::complex<double> laguerre(int n, double a, std::complex<double> z);

// Fills out[0..n_max] with L_k^a(z), sharing one recurrence pass.
void laguerre_sequence(int n_max, double a, double z, double* out);
void laguerre_sequence(int n_max, double a, std::complex<double> z,
                       std::complex<double>* out);

// Gamma(m+1/2)/m!  Exact product recursion for m <= 20; for m > 20 the
// asymptotic form exp(-1/(8m) + 1/(192 m^3) - 1/(640 m^5))/sqrt(m), whose
// relative error at the m=21 crossover is below 1e-12.  Strictly positive
// and strictly decreasing in m.
double gamma_half_ratio(int m);

// Complementary error function (std::erfc; relative error well under 1e-12
// over |x| <= 10).
double erfc(double x);

// Jacobi theta function, nome-series convention:
//   theta3(z, q) = 1 + 2 sum_{k>=1} q^{k^2} cos(2kz),   0 <= q < 1.
// The series is summed until the term magnitude drops below 1e-16.
// Only z = pi/2 (alternating series) and z = 0 are exercised downstream.
double jacobi_theta3(double z, double q);

// (Anti)squeezing level conversions, dB = 10 log10(e^{2r}).
double db_from_r(double r);
double r_from_db(double db);

}  // namespace catphase
