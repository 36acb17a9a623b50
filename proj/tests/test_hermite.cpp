#include "doctest.h"
#include "ptc/hermite_series.hpp"
#include "ptc/polynomial.hpp"

#include <random>

using namespace ptc;

namespace {

// Monomial-basis oracle: coefficients of the polynomial p with f = e^{-x^2/2} p(x).
using Mono = std::vector<Scalar>;

Mono hermite_monomial(int n) {
  Mono h0{Scalar(1)}, h1{Scalar(0), Scalar(2)};
  if (n == 0) return h0;
  Mono a = h0, b = h1;
  for (int k = 1; k < n; ++k) {
    Mono c(b.size() + 1);
    for (std::size_t i = 0; i < b.size(); ++i) c[i + 1] += b[i] * Scalar(2);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] -= a[i] * Scalar(2 * k);
    a = b;
    b = c;
  }
  return b;
}

Mono to_mono(const HermiteSeries& f) {
  Mono out(static_cast<std::size_t>(f.max_index() + 1));
  for (const auto& [n, c] : f.coeffs()) {
    Mono h = hermite_monomial(n);
    for (std::size_t i = 0; i < h.size(); ++i) out[i] += h[i] * c;
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

// d/dx [e^{-x^2/2} p] = e^{-x^2/2} (p' - x p)
Mono mono_derivative(const Mono& p) {
  Mono out(p.size() + 1);
  for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] += p[i] * Scalar(static_cast<long>(i));
  for (std::size_t i = 0; i < p.size(); ++i) out[i + 1] -= p[i];
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

HermiteSeries sample_series(std::mt19937& rng) {
  std::uniform_int_distribution<int> idx(0, 9), num(-6, 6), den(1, 5);
  HermiteSeries f;
  for (int k = 0; k < 4; ++k) f.add(idx(rng), Scalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))));
  return f;
}

}  // namespace

TEST_CASE("multiply_by_x recurrence") {
  CHECK(multiply_by_x(HermiteSeries::basis(0)) == HermiteSeries::basis(1, Scalar(Rational(1, 2))));
  HermiteSeries expect = HermiteSeries::basis(2, Scalar(Rational(1, 2))) + HermiteSeries::basis(0);
  CHECK(multiply_by_x(HermiteSeries::basis(1)) == expect);
  CHECK(multiply_by_x(HermiteSeries()).is_zero());
}

TEST_CASE("differentiate includes the Gaussian weight") {
  CHECK(differentiate(HermiteSeries::basis(0)) == HermiteSeries::basis(1, Scalar(Rational(-1, 2))));
  HermiteSeries expect = HermiteSeries::basis(0) + HermiteSeries::basis(2, Scalar(Rational(-1, 2)));
  CHECK(differentiate(HermiteSeries::basis(1)) == expect);
  for (int n = 0; n < 12; ++n) {
    HermiteSeries h = HermiteSeries::basis(n);
    CHECK(oscillator(h) == h * Scalar(Rational(2 * n + 1, 2)));
  }
}

TEST_CASE("differentiate agrees with the monomial oracle") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    HermiteSeries f = sample_series(rng);
    CHECK(to_mono(differentiate(f)) == mono_derivative(to_mono(f)));
  }
}

TEST_CASE("commutator [d, x] = 1") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    HermiteSeries f = sample_series(rng);
    CHECK(differentiate(multiply_by_x(f)) - multiply_by_x(differentiate(f)) == f);
  }
}

TEST_CASE("parity and PT conjugation") {
  CHECK(parity_reflect(HermiteSeries::basis(1)) == HermiteSeries::basis(1, Scalar(-1)));
  HermiteSeries even = HermiteSeries::basis(0) + HermiteSeries::basis(2);
  CHECK(parity_reflect(even) == even);
  HermiteSeries mixed = HermiteSeries::basis(0) + HermiteSeries::basis(1, Scalar::i());
  CHECK(parity_reflect(mixed) == HermiteSeries::basis(0) + HermiteSeries::basis(1, Scalar(0, -1)));

  CHECK(pt_conjugate(HermiteSeries::basis(1, Scalar::i())) == HermiteSeries::basis(1, Scalar::i()));
  CHECK(pt_conjugate(HermiteSeries::basis(0)) == HermiteSeries::basis(0));
  CHECK(pt_conjugate(HermiteSeries::basis(0, Scalar::i())) == HermiteSeries::basis(0, Scalar(0, -1)));

  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    HermiteSeries f = sample_series(rng);
    CHECK(parity_reflect(parity_reflect(f)) == f);
    CHECK(pt_conjugate(pt_conjugate(f)) == f);
  }
}

TEST_CASE("PT bilinear form on oscillator states") {
  // phi_n^(0) = i^n e^{-x^2/2} H_n / (pi^{1/4} sqrt(2^n n!)); the surd is divided out
  auto state = [](int n) { return HermiteSeries::basis(n, i_pow(n)); };
  CHECK(pt_bilinear(state(0), state(0)) == Scalar(1));
  CHECK(pt_bilinear(state(1), state(1)) == Scalar(-2));  // (-1) * 2^1 1!
  CHECK(pt_bilinear(state(0), state(1)).is_zero());
  HermiteSeries a = HermiteSeries::basis(0, Scalar(2)) + HermiteSeries::basis(3, Scalar(Rational(1, 3)));
  HermiteSeries b = HermiteSeries::basis(1) + HermiteSeries::basis(3, Scalar(5));
  CHECK(pt_bilinear(a, b) == pt_bilinear(b, a));
}

TEST_CASE("numeric evaluation matches exact multiplication") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  HermiteSeries f = sample_series(rng);
  HermiteSeries xf = multiply_by_x(f);
  for (int k = 0; k < 20; ++k) {
    double x = u(rng);
    auto lhs = xf.evaluate(x);
    auto rhs = x * f.evaluate(x);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
  }
  // H_2(1) = 2
  CHECK(std::abs(HermiteSeries::basis(2).evaluate(1.0) - 2.0 * std::exp(-0.5)) < 1e-14);
}

TEST_CASE("text serialization round trip") {
  HermiteSeries f = HermiteSeries::basis(0, Scalar(Rational(3, 4))) +
                    HermiteSeries::basis(5, Scalar(Rational(-1, 2), Rational(7, 3)));
  std::string t = to_text(f);
  CHECK(t == "0:3/4\n5:-1/2+7/3 i\n");
  CHECK(hermite_from_text(t) == f);
  CHECK(hermite_from_text("2:1/1+-3/4 i\n").coeff(2) == Scalar(Rational(1), Rational(-3, 4)));
}

TEST_CASE("epsilon series truncation and inverse square root") {
  ScalarSeries s(3);
  s[0] = Scalar(1);
  s[2] = Scalar(Rational(1, 3));
  ScalarSeries r = inverse_sqrt(s);
  ScalarSeries check = r * r * s;
  CHECK(check[0] == Scalar(1));
  CHECK(check[1].is_zero());
  CHECK(check[2].is_zero());
  CHECK(check[3].is_zero());
  ScalarSeries shorter(1, Scalar(2));
  CHECK((s + shorter).order() == 1);
}

TEST_CASE("polynomial division by rising factorial") {
  NPoly p = NPoly::falling(3) * NPoly{Scalar(2), Scalar(1)};
  NPoly shifted = p.shifted(3);
  NPoly d = shifted.divided_by_rising(3);
  for (long n = 0; n < 6; ++n) CHECK(d(n) * Scalar((n + 1) * (n + 2) * (n + 3)) == p(n + 3));
  NPoly bad{Scalar(1), Scalar(1)};
  CHECK_THROWS_AS(bad.divided_by_rising(2), std::domain_error);
}
