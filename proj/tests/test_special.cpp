#include "doctest.h"
#include "ptc/quadrature.hpp"
#include "ptc/special_functions.hpp"

#include <boost/math/special_functions/airy.hpp>
#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <random>

using namespace ptc;

namespace {

// D_{-1/2} through modified Bessel functions
double d_half_bessel(double z) {
  double w = z * z / 4;
  if (z > 0) return std::sqrt(z / (2 * M_PI)) * boost::math::cyl_bessel_k(0.25, w);
  double a = -z;
  return std::sqrt(M_PI * a) / 2 * (boost::math::cyl_bessel_i(-0.25, w) + boost::math::cyl_bessel_i(0.25, w));
}

// D_{-1/2}(z) = 2 sqrt(2/pi) e^{z^2/4} int_0^inf e^{-u^4/2} cos(z u^2 + pi/4) du
double d_half_cosine(double z) {
  double i = integrate_adaptive(
      [z](double u) { return std::exp(-u * u * u * u / 2) * std::cos(z * u * u + M_PI / 4); }, 0.0, 5.0, 1e-14);
  return 2 * std::sqrt(2 / M_PI) * std::exp(z * z / 4) * i;
}

double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

}  // namespace

TEST_CASE("D_{-1/2} at the origin and against oracles") {
  double d0 = std::pow(2.0, -0.25) * std::sqrt(M_PI) / std::tgamma(0.75);
  CHECK(rel(parabolic_d_half(0.0).value, d0) < 1e-13);
  CHECK(rel(d_half_cosine(0.0), d0) < 1e-12);
  for (double z : {-10.5, -7.0, -4.0, -2.5, -1.0, -0.3, 0.4, 1.7, 3.2, 5.5, 7.9, 8.1, 11.0}) {
    CAPTURE(z);
    CHECK(rel(parabolic_d_half(z).value, d_half_bessel(z)) < 1e-11);
    CHECK(rel(parabolic_d_half_direct(z).value, d_half_bessel(z)) < 1e-11);
  }
  for (double z : {-2.0, -0.5, 0.9, 2.0}) CHECK(rel(parabolic_d_half(z).value, d_half_cosine(z)) < 1e-10);
}

TEST_CASE("D_{-1/2} branch switchovers overlap") {
  SpecialFunctionConfig cfg;
  for (double z : {-3.0, 3.0}) {
    auto a = parabolic_d_half_branch(z, DHalfBranch::Series, cfg);
    auto b = parabolic_d_half_branch(z, DHalfBranch::Integral, cfg);
    CHECK(rel(a.value, b.value) < 1e-9);
    CHECK(rel(a.derivative, b.derivative) < 1e-9);
  }
  for (double z : {8.0, 9.0}) {
    auto b = parabolic_d_half_branch(z, DHalfBranch::Integral, cfg);
    auto c = parabolic_d_half_branch(z, DHalfBranch::Asymptotic, cfg);
    CHECK(rel(c.value, b.value) < 1e-9);
    CHECK(rel(c.derivative, b.derivative) < 1e-9);
  }
  CHECK_THROWS_AS(parabolic_d_half_branch(-9.0, DHalfBranch::Asymptotic, cfg), SpecialFunctionError);
}

TEST_CASE("D_{-1/2} satisfies its ODE and the derivative is consistent") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-9.0, 9.0);
  for (int k = 0; k < 20; ++k) {
    double z = u(rng), h = 0.02;
    CAPTURE(z);
    auto f = [](double t) { return parabolic_d_half(t).value; };
    double f0 = f(z);
    double scale = std::fabs(f0) * (1 + z * z / 4);
    CHECK(std::fabs(fd_second_derivative(f, z, h) - z * z / 4 * f0) <= 1e-8 * scale);
    CHECK(std::fabs(fd_first_derivative(f, z, h) - parabolic_d_half(z).derivative) <= 1e-8 * scale);
  }
}

TEST_CASE("integer order D_n") {
  // D_2(x sqrt 2) at x = 1 equals e^{-1/2}
  CHECK(std::fabs(parabolic_d_int(2, std::sqrt(2.0)).value - std::exp(-0.5)) < 1e-14);
  CHECK(std::fabs(parabolic_d(2.0, std::sqrt(2.0)).real() - std::exp(-0.5)) < 1e-14);
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int k = 0; k < 20; ++k) {
    int n = k % 7;
    double z = u(rng), h = 0.02;
    auto f = [n](double t) { return parabolic_d_int(n, t).value; };
    double f0 = f(z);
    CHECK(std::fabs(fd_second_derivative(f, z, h) + (n + 0.5 - z * z / 4) * f0) <= 1e-8);
    CHECK(std::fabs(fd_first_derivative(f, z, h) - parabolic_d_int(n, z).derivative) <= 1e-8);
  }
  // the log form agrees with the direct form and extends past underflow
  for (int n : {0, 3, 10}) {
    auto lv = log_parabolic_d_int(n, 1.3);
    CHECK(rel(lv.value(), parabolic_d_int(n, 1.3).value) < 1e-12);
  }
  CHECK(std::isfinite(log_parabolic_d_int(380, 2.5).log_abs));
}

TEST_CASE("negative integer orders agree with the second-solution definition") {
  // C_n from the complex-argument definition versus the real Kummer form
  for (int n = 0; n <= 5; ++n) {
    for (double z : {0.3, 1.1, 2.4}) {
      std::complex<double> i(0, 1);
      std::complex<double> ip = std::pow(i, n), im = std::pow(-i, n);
      auto dp = parabolic_d(-n - 1.0, i * z), dm = parabolic_d(-n - 1.0, -i * z);
      std::complex<double> c = i / std::sqrt(2 * M_PI) * (ip * dp - im * dm);
      CHECK(std::fabs(c.imag()) < 1e-12 * (1 + std::abs(c)));
      CHECK(rel(c.real(), c_second_solution(n, z).value) < 1e-11);
      // D_n from the first line of the same definition
      std::complex<double> d = std::tgamma(n + 1.0) / std::sqrt(2 * M_PI) * (ip * dp + im * dm);
      CHECK(rel(d.real(), parabolic_d_int(n, z).value) < 1e-11);
    }
  }
  CHECK_THROWS_AS(parabolic_d(0.3, 1.0), SpecialFunctionError);
  CHECK_THROWS_AS(parabolic_d(-0.5, std::complex<double>(1.0, 1.0)), SpecialFunctionError);
}

TEST_CASE("C_n: Wronskian, parity and validation paths") {
  for (int n = 0; n <= 6; ++n) {
    CAPTURE(n);
    auto w = [n](double z) {
      auto d = parabolic_d_int(n, z);
      auto c = c_second_solution(n, z);
      return d.value * c.derivative - d.derivative * c.value;
    };
    CHECK(std::fabs(w(0.5) - w(2.0)) < 1e-8 * std::fabs(w(0.5)));
    CHECK(std::fabs(w(0.5)) > 0);
    for (int m = 0; m <= 5; ++m) {
      double sign = ((m + 1) % 2) ? -1.0 : 1.0;
      CHECK(rel(c_second_solution(m, -0.7).value, sign * c_second_solution(m, 0.7).value) < 1e-14);
    }
    for (double z : {-1.5, 0.6, 2.2, 3.5}) {
      double k = c_second_solution(n, z).value;
      CHECK(rel(c_second_solution_ode(n, z), k) < 1e-9);
      CHECK(rel(c_second_solution_integral(n, z), k) < 1e-9);
    }
  }
  // C_0(1) through the sine transform: sqrt(2/pi) e^{1/4} int e^{-t^2/2} sin t dt
  double c01 = c_second_solution(0, 1.0).value;
  CHECK(c01 > 0);
  CHECK(rel(c01, c_second_solution_integral(0, 1.0)) < 1e-12);
  // the log form survives where the plain value would underflow
  auto big = log_c_second_solution(300, 1.4);
  CHECK(big.sign != 0);
  CHECK(big.log_abs < -300);
  CHECK(rel(log_c_second_solution(7, 1.4).value(), c_second_solution(7, 1.4).value) < 1e-13);
}

TEST_CASE("Airy pair") {
  double ai0 = std::pow(3.0, -2.0 / 3.0) / std::tgamma(2.0 / 3.0);
  CHECK(rel(airy_pair(0.0).ai, ai0) < 1e-14);
  for (double r : {-2.0, 0.0, 2.0}) {
    auto a = airy_pair(r);
    CHECK(std::fabs(a.ai * a.bip - a.aip * a.bi - 1 / M_PI) < 1e-9);
  }
  for (double r : {-25.0, -8.0, -1.0, 0.5, 3.0, 11.5, 12.5, 20.0, 29.0}) {
    CAPTURE(r);
    auto a = airy_pair(r);
    CHECK(std::fabs(a.ai - boost::math::airy_ai(r)) < 1e-10 * std::max(1e-300, std::fabs(boost::math::airy_ai(r))) + 1e-13);
    CHECK(rel(a.bi, boost::math::airy_bi(r)) < 1e-10);
    CHECK(rel(a.aip, boost::math::airy_ai_prime(r)) < 1e-9);
    CHECK(rel(a.bip, boost::math::airy_bi_prime(r)) < 1e-9);
  }
  double r = 1.3;
  double d2 = fd_second_derivative([](double t) { return airy_pair(t).ai; }, r, 0.02);
  CHECK(std::fabs(d2 - r * airy_pair(r).ai) < 1e-7);
  CHECK_THROWS_AS(airy_pair(31.0), SpecialFunctionError);
}

TEST_CASE("config validation and determinism") {
  SpecialFunctionConfig bad;
  bad.target_accuracy = 1e-2;
  CHECK_THROWS(bad.validate());
  CHECK(parabolic_d_half(1.234).value == parabolic_d_half(1.234).value);
  CHECK(c_second_solution(3, 0.77).value == c_second_solution(3, 0.77).value);
}
