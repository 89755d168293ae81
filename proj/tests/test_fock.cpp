#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <complex>

#include "catphase/fock.hpp"
#include "catphase/quadrature.hpp"
#include "catphase/wigner.hpp"

using namespace catphase;

TEST_CASE("vacuum cat") {
  const FockStateVector state = pure_cat_fock_amplitudes(0.0, 0.0, 0.0, 32);
  CHECK(state.dim == 24);
  CHECK(std::abs(state.amps[0] - 1.0) < 1e-15);
  for (int n = 1; n < state.dim; ++n) CHECK(std::abs(state.amps[n]) == 0.0);
  CHECK(state.norm_defect <= 1e-15);
}

TEST_CASE("even cat parity") {
  const FockStateVector state = pure_cat_fock_amplitudes(1.0, 0.0, 0.0, 64);
  for (int n = 1; n < state.dim; n += 2)
    CHECK(std::abs(state.amps[n]) < 1e-12);
  // amplitudes of the even components are strictly positive
  CHECK(state.amps[0].real() > 0.5);
  CHECK(state.amps[2].real() > 0.0);
}

TEST_CASE("squeezed vacuum variances follow e^{-+2r}/4") {
  for (double r : {0.25, 0.6, 1.0}) {
    const FockStateVector state = pure_cat_fock_amplitudes(0.0, r, 0.0, 128);
    const QuadratureMoments m = quadrature_moments(state);
    CHECK(m.var_x == doctest::Approx(std::exp(-2.0 * r) / 4.0).epsilon(1e-9));
    CHECK(m.var_p == doctest::Approx(std::exp(2.0 * r) / 4.0).epsilon(1e-9));
    CHECK(std::abs(m.mean_x) < 1e-12);
    CHECK(std::abs(m.mean_p) < 1e-12);
  }
}

TEST_CASE("displacement moves the momentum mean") {
  const FockStateVector state = pure_cat_fock_amplitudes(0.0, 0.0, 0.8, 64);
  const QuadratureMoments m = quadrature_moments(state);
  CHECK(m.mean_p == doctest::Approx(0.8).epsilon(1e-10));
  CHECK(std::abs(m.mean_x) < 1e-12);
  CHECK(mean_photon_number(state) == doctest::Approx(0.64).epsilon(1e-10));
}

TEST_CASE("state moments agree with Wigner-function moments") {
  // dual route: <p>, <p^2>, <x^2> from amplitudes vs phase-space integrals
  const double alpha = 1.2, r = 0.5, delta = 0.6;
  const FockStateVector state =
      pure_cat_fock_amplitudes(alpha, r, delta, 128);
  const QuadratureMoments m = quadrature_moments(state);

  const WignerCoeffs c = wigner_coeffs(alpha, r, 1.0, delta);
  const PhaseSpaceBox box = wigner_box(c, 9.0);
  QuadratureOptions o = wigner_quadrature_options(c, 1e-10);
  const auto moment = [&](auto&& weight) {
    return integrate_2d(
               [&](double x, double p) {
                 return weight(x, p) * wigner_eval(c, x, p);
               },
               box.x_lo, box.x_hi, box.p_lo, box.p_hi, o)
        .value;
  };
  const double mean_p = moment([](double, double p) { return p; });
  const double mean_pp = moment([](double, double p) { return p * p; });
  const double mean_xx = moment([](double x, double) { return x * x; });
  CHECK(m.mean_p == doctest::Approx(mean_p).epsilon(1e-8));
  CHECK(m.var_p ==
        doctest::Approx(mean_pp - mean_p * mean_p).epsilon(1e-7));
  CHECK(m.var_x == doctest::Approx(mean_xx).epsilon(1e-7));
}

TEST_CASE("insufficient dim reports the defect") {
  CHECK_THROWS_WITH_AS(
      (void)pure_cat_fock_amplitudes(3.5, 1.0, 1.0, 24, 1e-10),
      doctest::Contains("norm defect"), std::runtime_error);
}
