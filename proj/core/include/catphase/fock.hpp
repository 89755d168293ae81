#pragma once

#include <complex>
#include <vector>

// Truncated Fock-space construction of the pure displaced squeezed cat,
// used as the combinatorial reference for the photon statistics.
//
// Operators are applied as matrix exponentials of the truncated generators
// acting directly on the amplitude vector (scaling and squaring, Taylor
// applications).  The truncated generators are anti-Hermitian, so the
// evolution is exactly unitary on the working space; accuracy near the top
// of the basis is protected by treating the top quarter as a guard band and
// reporting only the lower three quarters.

namespace catphase {

struct FockStateVector {
  std::vector<std::complex<double>> amps;  // guard band already dropped
  int dim = 0;                             // == amps.size()
  double norm_defect = 0.0;                // 1 - sum |amp|^2
};

// Amplitudes of D(i delta_pre) S(r) (|alpha> + |-alpha>)/sqrt(K) in the
// number basis.  `dim` is the working truncation (default 64); the returned
// vector holds the lower 3*dim/4 amplitudes.  Throws std::runtime_error
// with the defect value when norm_defect exceeds norm_tol.
FockStateVector pure_cat_fock_amplitudes(double alpha, double r,
                                         double delta_pre, int dim = 64,
                                         double norm_tol = 1e-10);

// Building blocks on the full working vector, exposed so sweeps can reuse
// the squeezed cat across displacement values.
std::vector<std::complex<double>> coherent_cat_amplitudes(double alpha,
                                                          int dim);
void apply_squeeze(std::vector<std::complex<double>>& psi, double r);
void apply_displacement(std::vector<std::complex<double>>& psi, double delta);
FockStateVector finalize_state(const std::vector<std::complex<double>>& psi,
                               double norm_tol);

double mean_photon_number(const FockStateVector& state);

// First and second quadrature moments, x = (a + a^dag)/2, p = (a - a^dag)/(2i).
struct QuadratureMoments {
  double mean_x, mean_p, var_x, var_p;
};
QuadratureMoments quadrature_moments(const FockStateVector& state);

}  // namespace catphase
