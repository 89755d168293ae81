#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <numbers>

#include "catphase/negativity.hpp"
#include "catphase/special_functions.hpp"
#include "catphase/wigner.hpp"

using namespace catphase;
using std::numbers::pi;

namespace {

// s with the requested validity margin, by bisection on r
double r_at_margin(double alpha, double eta, double margin) {
  double lo = 0.0, hi = 12.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (negativity_validity(alpha, mid, eta).margin < margin)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

}  // namespace

TEST_CASE("vacuum has no negativity") {
  const WignerCoeffs c = wigner_coeffs(0.0, 0.0, 0.9, 0.3);
  CHECK(negativity_numeric(c) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("bright lossless cat negativity approaches 1/pi") {
  // analytic value at eta = 1 is independent of squeezing
  const double v1 = negativity_analytic(10.0, 0.0, 1.0);
  const double v2 = negativity_analytic(10.0, 0.9, 1.0);
  CHECK(std::abs(v1 - 1.0 / pi) < 1e-6);
  CHECK(std::abs(v2 - 1.0 / pi) < 1e-6);
  const WignerCoeffs c = wigner_coeffs(10.0, 0.0, 1.0, 0.0);
  CHECK(negativity_numeric(c) == doctest::Approx(1.0 / pi).epsilon(1e-3));
}

TEST_CASE("analytic negativity grows with anti-squeezing under loss") {
  double prev = negativity_analytic(10.0, 0.1, 0.9);
  for (double r = 0.3; r < 2.5; r += 0.2) {
    const double cur = negativity_analytic(10.0, r, 0.9);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("validity inequality anchors") {
  const auto lossless_bright = negativity_validity(10.0, 0.0, 1.0);
  CHECK_FALSE(lossless_bright.valid);
  CHECK(lossless_bright.margin == doctest::Approx(-29.0).epsilon(1e-12));
  // lhs ~ 1/s for large s at fixed alpha, eta < 1
  CHECK(negativity_validity(10.0, 6.0, 0.9).valid);
  // strong squeezing leaves the criterion undefined: never valid
  const auto squeezed = negativity_validity(10.0, -2.0, 0.9);
  CHECK_FALSE(squeezed.valid);
  CHECK(squeezed.margin < 0.0);
  // the saturation root is where the margin crosses zero
  const double r_root = r_at_margin(10.0, 0.9, 0.0);
  const auto at_root = negativity_validity(10.0, r_root, 0.9);
  CHECK(std::abs(at_root.margin) < 1e-10);
  CHECK(std::exp(r_root) == doctest::Approx(39.22).epsilon(0.01));
}

TEST_CASE("gated analytic-vs-quadrature agreement (bright, low loss)") {
  struct Case {
    double alpha, eta, margin;
  };
  const Case cases[] = {
      {4.0, 1.0, 0.12}, {4.0, 1.0, 0.4},  {6.5, 1.0, 0.12},
      {10.0, 1.0, 0.4}, {10.0, 0.995, 0.105},
  };
  for (const auto& cs : cases) {
    const double r = r_at_margin(cs.alpha, cs.eta, cs.margin);
    REQUIRE(negativity_validity(cs.alpha, r, cs.eta).margin >= cs.margin);
    const double va = negativity_analytic(cs.alpha, r, cs.eta);
    const double vn =
        negativity_numeric(wigner_coeffs(cs.alpha, r, cs.eta, 0.0));
    CHECK(std::abs(va - vn) / vn < 0.01);
  }
  // heavier loss at realistic squeezing is correctly excluded by the gate
  for (double eta : {0.9, 0.95}) {
    for (double r : {0.56, 1.15}) {
      CHECK_FALSE(negativity_validity(6.5, r, eta).valid);
    }
  }
}

TEST_CASE("loss contracts the numeric negativity") {
  double prev = -1.0;
  for (double eta : {0.85, 0.9, 0.95, 1.0}) {
    const double v = negativity_numeric(wigner_coeffs(2.0, 0.5, eta, 0.0));
    CHECK(v > prev - 1e-9);
    prev = v;
  }
}

TEST_CASE("negativity is displacement-invariant") {
  const double base =
      negativity_numeric(wigner_coeffs(1.5, 0.3, 0.9, 0.0));
  for (double delta : {0.5, 1.0}) {
    const double shifted =
        negativity_numeric(wigner_coeffs(1.5, 0.3, 0.9, delta));
    CHECK(std::abs(shifted - base) < 1e-6);
  }
}

TEST_CASE("numeric negativity reports non-convergence") {
  const WignerCoeffs c = wigner_coeffs(3.0, 0.2, 0.95, 0.0);
  QuadratureOptions starved = wigner_quadrature_options(c, 1e-12);
  starved.max_panels = 8;
  CHECK_THROWS_AS(negativity_numeric(c, &starved), std::runtime_error);
}

TEST_CASE("fringe overlap quotes") {
  // alpha = 6.5: overlap above 99.9% across the 4-10 dB band
  for (double r = 0.46; r <= 1.1501; r += 0.115) {
    CHECK(fringe_overlap(6.5, r, 0.9, 0.0) > 0.999);
  }
  // alpha = 4: overlap bottoms out near 99.8%
  double lowest = 1.0;
  for (double r = 0.46; r <= 1.1501; r += 0.115)
    lowest = std::min(lowest, fringe_overlap(4.0, r, 0.9, 0.0));
  CHECK(lowest >= 0.998);
  CHECK(lowest < 0.9995);
}

TEST_CASE("fringe overlap approaches one for fast fringes") {
  // larger alpha means faster fringes under the same envelope
  CHECK(fringe_overlap(20.0, 0.8, 0.9, 0.0) > 0.9999);
  CHECK(fringe_overlap(20.0, 0.8, 0.9, 0.0) >
        fringe_overlap(6.5, 0.8, 0.9, 0.0));
  CHECK(fringe_overlap(20.0, 0.8, 0.9, 0.7) ==
        doctest::Approx(fringe_overlap(20.0, 0.8, 0.9, 0.0)).epsilon(1e-12));
  CHECK_THROWS_AS(fringe_overlap(0.0, 0.5, 0.9, 0.0), std::domain_error);
}
