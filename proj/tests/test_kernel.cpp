#include "doctest.h"
#include "ptc/kernel.hpp"

#include <chrono>
#include <cmath>

using namespace ptc;

namespace {
Scalar q(long p, long r = 1) { return Scalar(Rational(p, r)); }
const auto M = DeltaParity::Minus;
const auto P = DeltaParity::Plus;
}  // namespace

TEST_CASE("apply_kernel on simple kernels") {
  DeltaKernel par = DeltaKernel::delta_plus();
  CHECK(apply_kernel(par, HermiteSeries::basis(1))[0] == HermiteSeries::basis(1, q(-1)));

  DeltaKernel d1 = DeltaKernel::from_terms(0, {{0, q(1), 0, 0, 1, P}});
  CHECK(apply_kernel(d1, HermiteSeries::basis(0))[0] == HermiteSeries::basis(1, q(-1, 2)));

  // 2 x y d delta(x+y) on e^{-x^2/2} gives 2x(x^2-1) e^{-x^2/2}
  DeltaKernel k = DeltaKernel::from_terms(0, {{0, q(2), 1, 1, 1, P}});
  HermiteSeries got = apply_kernel(k, HermiteSeries::basis(0))[0];
  // 2x^3 - 2x = (1/4) H_3 + (3/2) H_1 - H_1 = H_3/4 + H_1/2
  CHECK(got == HermiteSeries::basis(3, q(1, 4)) + HermiteSeries::basis(1, q(1, 2)));
}

TEST_CASE("normal form is idempotent and linear") {
  DeltaKernel k = DeltaKernel::from_terms(2, {{1, q(3), 2, 1, 3, P}, {2, q(1, 2), 0, 3, 1, M}});
  DeltaKernel again = DeltaKernel::from_terms(2, k.terms());
  CHECK(again == k);
  CHECK(again.terms().size() == k.terms().size());
  HermiteSeries f = HermiteSeries::basis(2) + HermiteSeries::basis(5, Scalar::i());
  HermiteSeries g = HermiteSeries::basis(1, q(3));
  auto lhs = apply_kernel(k, f + g);
  auto rhs = apply_kernel(k, f) + apply_kernel(k, g);
  CHECK(lhs == rhs);
  CHECK(kernel_from_text(to_text(k)) == k);
}

TEST_CASE("bilinear sum reduction") {
  BilinearHermiteSum s;
  s.terms.push_back({NPoly(q(1)), 0, 0});
  CHECK(reduce_bilinear_sum(s) == DeltaKernel::delta_minus());

  BilinearHermiteSum alt;
  alt.alternating = true;
  alt.terms.push_back({NPoly(q(1)), 0, 0});
  CHECK(reduce_bilinear_sum(alt) == DeltaKernel::delta_plus());

  // sum n h_n h_n -> number operator (x^2 - d^2 - 1)/2
  BilinearHermiteSum num;
  num.terms.push_back({NPoly::n(), 0, 0});
  DeltaKernel expect = DeltaKernel::from_terms(0, {{0, q(1, 2), 2, 0, 0, M}, {0, q(-1, 2), 0, 0, 2, M}, {0, q(-1, 2), 0, 0, 0, M}});
  CHECK(reduce_bilinear_sum(num) == expect);

  BilinearHermiteSum bad;
  bad.terms.push_back({NPoly(q(1)), -1, 0});
  CHECK_THROWS_AS(reduce_bilinear_sum(bad), ReductionError);
}

TEST_CASE("bilinear reduction acts like the sum on basis functions") {
  // sum_n alpha(n)/(2^n n!) h_{n+p}(x) int h_{n+q}(y) f(y) dy / sqrt(pi), f = h_m
  BilinearHermiteSum s;
  s.alternating = true;
  s.terms.push_back({NPoly{q(0), q(2), q(1)}, 2, -1});
  s.terms.push_back({NPoly{q(0), q(3)}, -1, 1});
  DeltaKernel k = reduce_bilinear_sum(s);
  for (int m = 0; m < 8; ++m) {
    HermiteSeries expect;
    for (const auto& t : s.terms) {
      int n = m - t.q;
      if (n < 0 || n + t.p < 0) continue;
      // int h_{n+q} h_m / sqrt(pi) = 2^m m!, times 1/(2^n n!)
      Rational w = factorial(static_cast<unsigned>(m)) / factorial(static_cast<unsigned>(n));
      Rational ratio(1 << m, 1 << n);
      ratio.canonicalize();
      w *= ratio;
      Scalar c = t.alpha(n) * w;
      if (n % 2) c = -c;
      expect.add(n + t.p, c);
    }
    CHECK(apply_kernel(k, HermiteSeries::basis(m))[0] == expect);
  }
}

TEST_CASE("C kernel from eigenfunctions matches the closed form") {
  auto t0 = std::chrono::steady_clock::now();
  DeltaKernel c = c_from_eigenfunctions(3);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(secs < 60.0);
  CHECK(c.leading() == DeltaKernel::delta_plus());
  DeltaKernel eps1 = DeltaKernel::from_terms(1, {{0, q(1), 0, 0, 0, P}, {1, Scalar(0, Rational(-4, 3)), 0, 0, 3, P},
                                                 {1, Scalar(0, -2), 1, 1, 1, P}});
  CHECK(c.truncated(1) == eps1);
  CHECK(c == reference_c_kernel());
}

TEST_CASE("C identities") {
  DeltaKernel c = c_from_eigenfunctions(3);
  CHECK(kernel_compose_check(DeltaKernel::delta_plus(), 5).all_passed());
  CHECK(kernel_compose_check(c, 12).all_passed());
  for (int n = 0; n <= 8; ++n) CHECK(kernel_eigencheck(c, n).all_passed());
  CHECK(cp_pc_check(c).all_passed());

  DeltaKernel broken = c + DeltaKernel::from_terms(3, {{2, q(1), 0, 0, 2, P}});
  CHECK_FALSE(kernel_compose_check(broken, 12).all_passed());
}

TEST_CASE("exponentiated form") {
  CHECK(exponentiated_c(0) == DeltaKernel::delta_plus());
  CHECK(exponentiated_c(3) == c_from_eigenfunctions(3));
  DeltaKernel c4 = exponentiated_c(4);
  CHECK(kernel_compose_check(c4, 12).all_passed());
  CHECK(c4.at(3) == reference_c_kernel().at(3));
}

TEST_CASE("parity, identity and Hamiltonian sums") {
  DeltaKernel p = parity_from_eigenfunctions(3);
  CHECK(p.at(0) == ReflectionOperator::reflection());
  for (int k = 1; k <= 3; ++k) CHECK(p.at(k).is_zero());
  DeltaKernel id = identity_from_eigenfunctions(3);
  CHECK(id.at(0) == ReflectionOperator::identity());
  for (int k = 1; k <= 3; ++k) CHECK(id.at(k).is_zero());
  DeltaKernel h = hamiltonian_from_eigenfunctions(3);
  CHECK(h == cubic_hamiltonian_kernel());
  for (int n = 0; n < 6; ++n)
    CHECK(apply_kernel(h.truncated(0), HermiteSeries::basis(n))[0] == HermiteSeries::basis(n, q(2 * n + 1, 2)));
}

TEST_CASE("quartic perturbative C is the parity kernel") {
  DeltaKernel c = spectral_kernel(quartic_symbolic_table(), SpectralWeight::C, 1);
  CHECK(c.at(0) == ReflectionOperator::reflection());
  CHECK(c.at(1).is_zero());
}
