#include "doctest.h"
#include "ptc/perturbation.hpp"

using namespace ptc;

namespace {
Scalar q(long p, long r = 1) { return Scalar(Rational(p, r)); }
}

TEST_CASE("cubic tables at n = 0") {
  auto wf = cubic_table_wavefunction(0);
  // bracket eps^1 = -i P_0
  HermiteSeries p0 = HermiteSeries::basis(3, q(1, 24)) + HermiteSeries::basis(1, q(3, 4));
  CHECK(wf.bracket[1] == p0 * Scalar(0, -1));
  HermiteSeries q0 = HermiteSeries::basis(6, q(1, 1152)) + HermiteSeries::basis(4, q(7, 128)) +
                     HermiteSeries::basis(2, q(27, 32));
  CHECK(wf.bracket[2] == -q0);
  CHECK(wf.a[0] == q(1));
  CHECK(wf.a[2] == q(29, 48));
  CHECK(wf.a[1].is_zero());
}

TEST_CASE("energies") {
  auto e0 = cubic_energy(0);
  CHECK(e0[0] == q(1, 2));
  CHECK(e0[1].is_zero());
  CHECK(e0[2] == q(11, 8));
  CHECK(e0[3].is_zero());
  CHECK(cubic_energy(1)[2] == q(71, 8));
  for (int n = 0; n < 5; ++n) CHECK(cubic_energy(n)[0] == q(2 * n + 1, 2));

  CHECK(quartic_energy(0)[1] == q(-3, 4));
  CHECK(quartic_energy(2)[0] == q(5, 2));
  CHECK(quartic_energy(2)[1] == q(-39, 4));
}

TEST_CASE("quartic tables") {
  auto w0 = quartic_table_wavefunction(0);
  CHECK(w0.bracket[1] == HermiteSeries::basis(4, q(1, 64)) + HermiteSeries::basis(2, q(3, 8)));
  auto w1 = quartic_table_wavefunction(1);
  CHECK(w1.bracket[1] == HermiteSeries::basis(5, q(1, 64)) + HermiteSeries::basis(3, q(5, 8)));
  for (int n = 0; n < 6; ++n) {
    auto w = quartic_table_wavefunction(n);
    CHECK(w.a[0] == q(1));
    CHECK(w.a[1].is_zero());
  }
}

TEST_CASE("recursion oracle reproduces the tables") {
  CHECK(derive_wavefunction(Model::Cubic, 0, 2).energy[2] == q(11, 8));
  for (int n = 0; n <= 10; ++n) {
    auto dc = derive_wavefunction(Model::Cubic, n, 3);
    CHECK(dc.wavefunction == cubic_table_wavefunction(n));
    CHECK(dc.energy == cubic_energy(n));
    auto dq = derive_wavefunction(Model::Quartic, n, 1);
    CHECK(dq.wavefunction == quartic_table_wavefunction(n));
    CHECK(dq.energy == quartic_energy(n));
  }
  CHECK_THROWS(derive_wavefunction(Model::Cubic, 0, 4));
  CHECK_THROWS(derive_wavefunction(Model::Quartic, 0, 2));
}

TEST_CASE("PT norm and orthogonality are exact") {
  for (int n = 0; n <= 10; ++n) {
    auto norm = pt_norm(cubic_table_wavefunction(n));
    CHECK(norm[0] == Scalar(n % 2 ? -1 : 1));
    for (int k = 1; k <= 3; ++k) CHECK(norm[k].is_zero());
    auto nq = pt_norm(quartic_table_wavefunction(n));
    CHECK(nq[0] == Scalar(n % 2 ? -1 : 1));
    CHECK(nq[1].is_zero());
  }
  for (int m = 0; m <= 8; ++m)
    for (int n = 0; n <= 8; ++n) {
      if (m == n) continue;
      auto o = pt_overlap_rational(cubic_table_wavefunction(m), cubic_table_wavefunction(n));
      for (int k = 0; k <= 3; ++k) CHECK(o[k].is_zero());
    }
}

TEST_CASE("Schroedinger residual vanishes") {
  for (int n = 0; n <= 8; ++n) {
    auto r = schrodinger_residual(cubic_table_wavefunction(n), cubic_energy(n));
    for (int k = 0; k <= 3; ++k) CHECK(r[k].is_zero());
    auto rq = schrodinger_residual(quartic_table_wavefunction(n), quartic_energy(n));
    for (int k = 0; k <= 1; ++k) CHECK(rq[k].is_zero());
  }
}

TEST_CASE("a corrupted normalization polynomial breaks the PT norm") {
  SymbolicTable bad = cubic_symbolic_table();
  bad.norm[2] = NPoly{Scalar(1), Scalar(2)} * NPoly{q(86, 144), q(82, 144), q(82, 144)};
  auto norm = pt_norm(instantiate(bad, 0));
  CHECK_FALSE(norm[2].is_zero());
}
