#include <doctest.h>

#include <cmath>
#include <numbers>

#include "catphase/quadrature.hpp"

using namespace catphase;
using std::numbers::pi;

TEST_CASE("gauss-legendre rules integrate polynomials exactly") {
  for (int n : {8, 16}) {
    const auto& rule = gauss_legendre(n);
    double moment0 = 0.0, moment2 = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      moment0 += rule.weights[i];
      moment2 += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
    }
    CHECK(moment0 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(moment2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  }
}

TEST_CASE("1d adaptive: gaussian and oscillatory integrands") {
  const auto gauss = [](double x) { return std::exp(-x * x); };
  auto res = integrate_1d(gauss, -8.0, 8.0);
  CHECK(res.converged);
  CHECK(res.value == doctest::Approx(std::sqrt(pi)).epsilon(1e-12));

  const double k = 37.0;
  const auto osc = [k](double x) { return std::cos(k * x); };
  QuadratureOptions opts;
  opts.abs_tol = 1e-12;
  opts.max_panel_x = 0.25;
  res = integrate_1d(osc, 0.0, 2.0, opts);
  CHECK(res.converged);
  CHECK(res.value == doctest::Approx(std::sin(2.0 * k) / k).epsilon(1e-10));
}

TEST_CASE("2d adaptive: separable gaussian") {
  const auto f = [](double x, double y) {
    return std::exp(-2.0 * x * x - 3.0 * y * y);
  };
  QuadratureOptions opts;
  opts.abs_tol = 1e-11;
  const auto res = integrate_2d(f, -7.0, 7.0, -7.0, 7.0, opts);
  CHECK(res.converged);
  CHECK(res.value ==
        doctest::Approx(pi / std::sqrt(6.0)).epsilon(1e-10));
}

TEST_CASE("2d adaptive: kinked integrand |cos| converges with anchoring") {
  // Int |cos(k y)| e^{-x^2 - y^2/9} over the plane
  const double k = 11.0;
  const auto f = [k](double x, double y) {
    return std::abs(std::cos(k * y)) * std::exp(-x * x - y * y / 9.0);
  };
  QuadratureOptions opts;
  opts.abs_tol = 1e-9;
  opts.max_panel_y = pi / (2.0 * k);
  opts.seed_anchor_y = 0.0;
  const auto res = integrate_2d(f, -7.0, 7.0, -21.0, 21.0, opts);
  CHECK(res.converged);
  // reference by dense 1-D product: sqrt(pi) * Int |cos(k y)| e^{-y^2/9}
  double ref = 0.0;
  const int n = 400001;
  for (int i = 0; i < n; ++i) {
    const double y = -21.0 + 42.0 * i / (n - 1);
    const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    ref += w * std::abs(std::cos(k * y)) * std::exp(-y * y / 9.0);
  }
  ref *= 42.0 / (n - 1) * std::sqrt(pi);
  CHECK(res.value == doctest::Approx(ref).epsilon(1e-7));
}

TEST_CASE("non-convergence is reported") {
  const auto f = [](double x, double y) {
    return std::abs(std::cos(41.0 * x) * std::cos(53.0 * y));
  };
  QuadratureOptions opts;
  opts.abs_tol = 1e-14;
  opts.max_panels = 64;  // starved on purpose
  const auto res = integrate_2d(f, 0.0, 3.0, 0.0, 3.0, opts);
  CHECK_FALSE(res.converged);
  CHECK(res.error > 1e-14);
}
