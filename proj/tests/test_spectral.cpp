#include "doctest.h"
#include "ptc/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>

using namespace ptc;

namespace {

// Chebyshev collocation of -1/2 phi'' + V phi = E phi along a smooth PT-symmetric path x(t),
// t in [-T, T], with Dirichlet ends. Independent of the shooting code.
std::vector<double> collocation_energies(const std::function<cplx(cplx)>& v, const std::function<cplx(double)>& path,
                                         const std::function<cplx(double)>& dpath, double t_max, int n, int count) {
  std::vector<double> s(n + 1);
  for (int j = 0; j <= n; ++j) s[j] = std::cos(M_PI * j / n);
  Eigen::MatrixXd d(n + 1, n + 1);
  auto c = [&](int j) { return (j == 0 || j == n ? 2.0 : 1.0) * (j % 2 ? -1.0 : 1.0); };
  for (int i = 0; i <= n; ++i) {
    double row = 0;
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      d(i, j) = c(i) / c(j) / (s[i] - s[j]);
      row += d(i, j);
    }
    d(i, i) = -row;
  }
  d /= t_max;
  Eigen::VectorXcd inv(n + 1);
  Eigen::VectorXcd pot(n + 1);
  for (int j = 0; j <= n; ++j) {
    double t = t_max * s[j];
    inv[j] = 1.0 / dpath(t);
    pot[j] = v(path(t));
  }
  Eigen::MatrixXcd dx = inv.asDiagonal() * d.cast<cplx>();
  Eigen::MatrixXcd h = -0.5 * dx * dx;
  h.diagonal() += pot;
  Eigen::MatrixXcd inner = h.block(1, 1, n - 1, n - 1);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(inner, false);
  std::vector<cplx> ev(es.eigenvalues().data(), es.eigenvalues().data() + n - 1);
  std::vector<double> re;
  for (auto z : ev)
    if (std::fabs(z.imag()) < 1e-6 && z.real() > 0) re.push_back(z.real());
  std::sort(re.begin(), re.end());
  re.resize(count);
  return re;
}

std::vector<double> cubic_oracle(double eps, int count) {
  auto v = [eps](cplx x) { return 0.5 * x * x + cplx(0, eps) * x * x * x; };
  return collocation_energies(v, [](double t) { return cplx(t); }, [](double) { return cplx(1.0); }, 11.0, 160, count);
}

// rays bend into arg -pi/6 and -5pi/6 through x(t) = t - i tan(pi/6) t tanh(t)
std::vector<double> quartic_oracle(double eps, int count) {
  const double k = std::tan(M_PI / 6);
  auto v = [eps](cplx x) { return 0.5 * x * x - eps * x * x * x * x; };
  auto path = [k](double t) { return cplx(t, -k * t * std::tanh(t)); };
  auto dpath = [k](double t) {
    double th = std::tanh(t);
    return cplx(1.0, -k * (th + t * (1 - th * th)));
  };
  return collocation_energies(v, path, dpath, 12.0, 200, count);
}

}  // namespace

TEST_CASE("cubic shooting energies") {
  CHECK(std::fabs(solve_shooting(Model::Cubic, 1e-4, 2).energy - 2.5) <= 1e-6);
  auto e0 = solve_shooting(Model::Cubic, 0.05, 0);
  CHECK(std::fabs(e0.energy - (0.5 + 11.0 / 8 * 0.05 * 0.05)) <= 1e-4);
  CHECK(std::fabs(e0.im_energy) <= 1e-11);
  auto oracle = cubic_oracle(0.05, 6);
  for (int n = 0; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(std::fabs(solve_shooting(Model::Cubic, 0.05, n).energy - oracle[n]) <= 1e-8);
  }
}

TEST_CASE("quartic shooting energies on the wedge contour") {
  // first-order estimate plus the second-order term -(165/8) eps^2
  auto e1 = solve_shooting(Model::Quartic, 0.01, 1);
  CHECK(std::fabs(e1.energy - (1.5 - 0.75 * 5 * 0.01 - 165.0 / 8 * 1e-4)) <= 5e-4);
  for (double eps : {0.05, 0.1}) {
    auto oracle = quartic_oracle(eps, 4);
    for (int n = 0; n <= 3; ++n) {
      CAPTURE(eps);
      CAPTURE(n);
      auto p = solve_shooting(Model::Quartic, eps, n);
      CHECK(std::fabs(p.energy - oracle[n]) <= 1e-7);
      CHECK(std::fabs(p.im_energy) <= 1e-8);
    }
  }
}

TEST_CASE("energies do not depend on contour extent or sampling") {
  for (int n : {0, 3}) {
    double a = solve_shooting(Model::Cubic, 0.05, n, ContourSpec::cubic(10.0, 0.5)).energy;
    double b = solve_shooting(Model::Cubic, 0.05, n, ContourSpec::cubic(12.0, 0.25)).energy;
    CHECK(std::fabs(a - b) <= 1e-11);
    double c = solve_shooting(Model::Quartic, 0.05, n, ContourSpec::quartic(0.05, 6.0, 0.5)).energy;
    double d = solve_shooting(Model::Quartic, 0.05, n, ContourSpec::quartic(0.05, 8.0, 0.25)).energy;
    CHECK(std::fabs(c - d) <= 1e-10);
  }
}

TEST_CASE("oscillator-basis matrix") {
  auto free = solve_oscillator_basis(0.0, 30, 6);
  for (int n = 0; n < 6; ++n) CHECK(free[n].energy == n + 0.5);
  auto m200 = solve_oscillator_basis(0.05, 200, 6);
  auto m300 = solve_oscillator_basis(0.05, 300, 6);
  for (int n = 0; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(std::fabs(m200[n].im_energy) <= 1e-8);
    CHECK(std::fabs(m200[n].energy - m300[n].energy) <= 1e-9);
    CHECK(std::fabs(m200[n].energy - solve_shooting(Model::Cubic, 0.05, n).energy) <= 1e-8);
  }
  // shooting and matrix eigenfunctions agree after normalization
  auto s2 = solve_shooting(Model::Cubic, 0.05, 2);
  for (double x : {-1.3, 0.0, 0.7}) CHECK(std::abs(s2.value_at(x) - m200[2].value_at(x)) <= 1e-7);
  CHECK_THROWS_AS(solve_oscillator_basis(0.05, 401, 3), std::invalid_argument);
}

TEST_CASE("PT normalization and orthogonality") {
  auto p1 = solve_shooting(Model::Cubic, 0.05, 1);
  CHECK(std::abs(p1.pt_norm + 1.0) <= 1e-6);
  CHECK(p1.pt_normalized);
  // PT phi = phi: phi(-x) = conj(phi(x)) on the real axis
  for (double x : {0.3, 1.1}) CHECK(std::abs(p1.value_at(-x) - std::conj(p1.value_at(x))) <= 1e-9);

  auto cubic = solve_shooting_levels(Model::Cubic, 0.05, 6, ContourSpec::cubic());
  auto g = orthogonality_matrix(cubic);
  for (int m = 0; m < 6; ++m)
    for (int n = 0; n < 6; ++n) CHECK(std::abs(g(m, n) - (m == n ? (n % 2 ? -1.0 : 1.0) : 0.0)) <= 1e-6);

  auto quartic = solve_shooting_levels(Model::Quartic, 0.05, 4, ContourSpec::quartic(0.05));
  auto q = orthogonality_matrix(quartic);
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) CHECK(std::abs(q(m, n) - (m == n ? (n % 2 ? -1.0 : 1.0) : 0.0)) <= 1e-5);

  // near the oscillator limit the state is the oscillator function up to sign
  auto free = solve_shooting(Model::Cubic, 1e-4, 0);
  CHECK(std::abs(free.value_at(0.5) - std::exp(-0.125) / std::pow(M_PI, 0.25)) <= 1e-3);

  CHECK_THROWS_AS(orthogonality_matrix({cubic[0], quartic[0]}), std::invalid_argument);
}

TEST_CASE("quartic ground state is PT symmetric on the real segment") {
  auto p = solve_shooting(Model::Quartic, 0.1, 0);
  for (double x : {0.25, 0.8, 1.5}) {
    CAPTURE(x);
    CHECK(std::fabs(p.value_at(x).real() - p.value_at(-x).real()) <= 1e-6);
    CHECK(std::fabs(p.value_at(x).imag() + p.value_at(-x).imag()) <= 1e-6);
  }
  CHECK(std::abs(p.pt_norm - 1.0) <= 1e-6);
}

TEST_CASE("argument and contour validation") {
  CHECK_THROWS_AS(solve_shooting(Model::Cubic, 0.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(solve_shooting(Model::Cubic, 0.31, 0), std::invalid_argument);
  CHECK_THROWS_AS(solve_shooting(Model::Cubic, 0.05, 11), std::invalid_argument);
  ShootingOptions tight;
  tight.tol = 1e-13;
  CHECK_THROWS_AS(solve_shooting(Model::Cubic, 0.05, 0, tight), std::invalid_argument);
  ContourSpec bent = ContourSpec::quartic(0.05);
  bent.segments.back().end = bent.segments.back().start + cplx(6.0, 0.0);
  CHECK_THROWS_AS(solve_shooting(Model::Quartic, 0.05, 0, bent), std::invalid_argument);
  ContourSpec broken = ContourSpec::cubic();
  broken.segments[1].start = 0.1;
  CHECK_THROWS_AS(solve_shooting(Model::Cubic, 0.05, 0, broken), std::invalid_argument);
}

TEST_CASE("completeness near the oscillator limit") {
  for (bool cpt : {false, true}) {
    CAPTURE(cpt);
    auto c = completeness_series(1e-4, {20, 40, 80}, 0.4, 0.1, 0.25, cpt);
    REQUIRE(c.size() == 3);
    for (const auto& p : c) CHECK(p.computed);
    CHECK(c[1].error < c[0].error);
    CHECK(c[2].error < c[1].error);
    CHECK(c[2].error <= 1e-4);
  }
}
