#include "doctest.h"
#include "ptc/greens.hpp"
#include "ptc/quadrature.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>

using namespace ptc;

namespace {

// D_{-1/2} through modified Bessel functions
double d_half(double z) {
  double w = z * z / 4;
  if (z > 0) return std::sqrt(z / (2 * M_PI)) * boost::math::cyl_bessel_k(0.25, w);
  if (z == 0) return std::pow(2.0, -0.25) * std::sqrt(M_PI) / std::tgamma(0.75);
  return std::sqrt(-M_PI * z) / 2 * (boost::math::cyl_bessel_i(-0.25, w) + boost::math::cyl_bessel_i(0.25, w));
}

double g0_oracle(double x, double y) {
  return x >= y ? d_half(x * M_SQRT2) * d_half(-y * M_SQRT2) : d_half(-x * M_SQRT2) * d_half(y * M_SQRT2);
}

double j_oracle(double x, double y) {
  auto f = [&](double z) { return z * z * z * z * g0_oracle(z, x) * g0_oracle(z, y); };
  double lo = std::min(x, y), hi = std::max(x, y);
  return integrate_adaptive(f, -8, lo, 1e-13) + integrate_adaptive(f, lo, hi, 1e-13) +
         integrate_adaptive(f, hi, 8, 1e-13);
}

}  // namespace

TEST_CASE("G_0 matches the Bessel form and is symmetric") {
  for (auto [x, y] : {std::pair{1.5, 0.2}, {-0.4, 1.2}, {0.0, 0.0}, {-2.0, -1.1}})
    CHECK(std::fabs(g0(x, y) - g0_oracle(x, y)) < 1e-11);
  CHECK(g0(1.2, -0.4) == g0(-0.4, 1.2));
  CHECK(std::fabs(greens_residual(0, 1.5, 0.2)) <= 1e-6);
  CHECK(std::fabs(greens_derivative_jump(0, 0.3) + 2) <= 1e-6);
  CHECK_THROWS_AS(g0(9.0, 0.0), std::domain_error);
}

TEST_CASE("z-integral against direct adaptive quadrature") {
  for (auto [x, y] : {std::pair{0.0, 0.0}, {0.9, -0.3}, {-1.4, 0.6}, {1.7, 1.1}}) {
    CAPTURE(x);
    CAPTURE(y);
    auto jv = j_integral(x, y);
    CHECK(std::fabs(jv.j - j_oracle(x, y)) < 1e-10);
    CHECK(jv.tail_bound < 1e-20);
    double h = 1e-4;
    double jx = (j_integral(x + h, y).j - j_integral(x - h, y).j) / (2 * h);
    CHECK(std::fabs(jv.jx - jx) < 1e-6);
  }
  GreensQuadSpec fine;
  fine.panels_per_unit = 4;
  double j0 = j_integral(0, 0).j;
  CHECK(j0 > 0);
  CHECK(std::fabs(j0 - j_integral(0, 0, fine).j) < 1e-8);
}

TEST_CASE("symbolic hierarchy") {
  BiPoly x3 = monomial(1, 3, 0);
  CHECK(oscillator_x(g0_expr()).is_zero());
  CHECK((oscillator_x(g1_expr()) - g0_expr().times(x3)).is_zero());
  CHECK((oscillator_x(g2_expr()) - g1_expr().times(x3)).is_zero());
  CHECK((oscillator_x(g3_derived_expr()) - g2_expr().times(x3)).is_zero());
  // the tabulated third order leaves a nonzero remainder
  CHECK_FALSE((oscillator_x(g3_expr()) - g2_expr().times(x3)).is_zero());
  for (int k = 0; k <= 3; ++k) CHECK(greens_expr(k).swap_xy() == greens_expr(k));
}

TEST_CASE("parity and symmetry of the higher orders") {
  CHECK(std::fabs(g1(-0.7, -0.2) + g1(0.7, 0.2)) < 1e-14);
  for (double y : {-1.0, 0.5, 2.0}) CHECK(std::isfinite(g1(0.0, y)));
  CHECK(std::fabs(g2(0.9, -0.3) - g2(-0.3, 0.9)) < 1e-13);
  CHECK(std::fabs(g3(-0.5, -0.4) + g3(0.5, 0.4)) < 1e-13);
  CHECK(std::fabs(g3(0.6, -0.2) - g3(-0.2, 0.6)) < 1e-13);
  CHECK(std::fabs(greens_value(2, 0.4, 0.4) - greens_value(2, 0.4 + 1e-9, 0.4)) < 1e-7);
}

TEST_CASE("order-by-order residuals") {
  CHECK(std::fabs(greens_residual(1, 1.1, 0.4)) <= 1e-5);
  CHECK(std::fabs(greens_residual(2, 1.0, 0.2)) <= 1e-4);
  CHECK(std::fabs(greens_residual(3, 0.8, 0.1, true)) <= 1e-3);
  for (int k = 1; k <= 2; ++k) CHECK(std::fabs(greens_derivative_jump(k, 0.3)) < 1e-9);
}

TEST_CASE("mollified spectral sum reproduces the closed forms") {
  auto rep = greens_spectral_check(0.05, 60, 0.6, -0.2);
  for (int k = 0; k <= 2; ++k) CHECK(rep.find("mollified_order" + std::to_string(k))->status == CheckStatus::Pass);
  CHECK(rep.find("mollified_order3_rederived")->status == CheckStatus::Pass);
  auto far = greens_spectral_check(0.0, 60, 3.0, -3.0);
  CHECK(far.find("far_apart")->status == CheckStatus::Pass);
}
