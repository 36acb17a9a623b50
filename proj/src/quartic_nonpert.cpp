#include "ptc/quartic_nonpert.hpp"

#include "ptc/hermite_series.hpp"
#include "ptc/perturbation.hpp"
#include "ptc/quadrature.hpp"
#include "ptc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ptc {

namespace {

const cplx I(0.0, 1.0);

cplx ipow(int n) {
  static const cplx p[4] = {1.0, I, -1.0, -I};
  return p[((n % 4) + 4) % 4];
}

void check_region(int n, double eps) {
  if (n < 0) throw std::invalid_argument("level index must be non-negative");
  if (!(eps > 0 && eps < 1.0 / (2.0 * (2 * n + 1))))
    throw std::invalid_argument("coupling outside the region-matching range 0 < eps < 1/(2(2n+1))");
}

}  // namespace

WkbRegionModel::WkbRegionModel(int n_, double eps_) : n(n_), eps(eps_) { check_region(n, eps); }

double WkbRegionModel::omega(double x) const {
  double x2 = x * x;
  return -2 * eps * x2 * x2 + x2 - 2 * n - 1;
}

double WkbRegionModel::inner_turning_point() const { return std::sqrt(2.0 * n + 1); }
double WkbRegionModel::outer_turning_point() const { return 1.0 / std::sqrt(2 * eps); }

double WkbRegionModel::r_of_x(double x) const {
  return (1 - x / outer_turning_point()) / (std::cbrt(2.0) * std::pow(eps, 2.0 / 3));
}

double WkbRegionModel::x_of_r(double r) const {
  return outer_turning_point() * (1 - std::cbrt(2.0) * std::pow(eps, 2.0 / 3) * r);
}

double WkbRegionModel::wkb_action(double x) const {
  double x1 = inner_turning_point(), x2 = outer_turning_point();
  if (x < x1 || x > x2) throw std::invalid_argument("action is defined between the turning points");
  // omega < 0 up to its inner root; s = root + tau^2 removes the square-root endpoint there
  double disc = 1 - 8 * eps * (2 * n + 1);
  if (disc <= 0) return 0.0;  // omega never turns positive
  double root = std::sqrt((1 - std::sqrt(disc)) / (4 * eps));
  if (x <= root) return 0.0;
  return integrate_adaptive(
      [&](double tau) { return 2 * tau * std::sqrt(std::max(0.0, omega(root + tau * tau))); }, 0.0,
      std::sqrt(x - root), 1e-12);
}

double WkbRegionModel::region2_decaying(double x) const {
  return std::pow(omega(x), -0.25) * std::exp(-wkb_action(x));
}

double WkbRegionModel::region2_growing(double x) const {
  return std::pow(omega(x), -0.25) * std::exp(wkb_action(x));
}

AiryValues WkbRegionModel::region3(double x) const { return airy_pair(r_of_x(x)); }

cplx NonpertCoefficient::value() const { return phase * std::exp(log_abs); }

NonpertCoefficient b_coefficient(int n, double eps) {
  check_region(n, eps);
  NonpertCoefficient b;
  b.n = n;
  b.eps = eps;
  b.log_abs = 0.25 * std::log(M_PI) - 0.5 * (std::log(2.0) + std::lgamma(n + 1.0)) + (n + 0.5) * std::log(4 / eps) -
              1 / (3 * eps);
  b.phase = -ipow(n);
  return b;
}

int default_nonpert_terms(double eps) { return std::max(40, static_cast<int>(std::ceil(12 / eps))); }

NonpertSum nonpert_c_sum(double x, double y, double eps, int terms) {
  if (!(eps > 0)) throw std::invalid_argument("coupling must be positive");
  if (std::fabs(x) > 2 || std::fabs(y) > 2) throw std::invalid_argument("|x| and |y| must not exceed 2");
  if (terms == 0) terms = default_nonpert_terms(eps);
  int need = static_cast<int>(std::ceil(8 / eps));
  if (terms < need)
    throw std::invalid_argument("partial sums do not converge before N = ceil(8/eps) = " + std::to_string(need));
  if (terms > 400) throw std::invalid_argument("at most 400 terms are supported");
  const int extra = 20;  // tail terms used for the remainder estimate
  const double zx = x * M_SQRT2, zy = y * M_SQRT2;
  const double log_pre = 0.5 * std::log(2 / eps) - 1 / (3 * eps);
  const double log_u = std::log(4 / eps);
  NonpertSum out;
  out.terms = terms;
  out.partial_sums.reserve(terms);
  cplx acc = 0.0;
  for (int n = 0; n < terms + extra; ++n) {
    LogValue dx = log_parabolic_d_int(n, zx), dy = log_parabolic_d_int(n, zy);
    LogValue cx = log_c_second_solution(n, zx), cy = log_c_second_solution(n, zy);
    double base = log_pre + n * log_u - std::lgamma(n + 1.0);
    double sign = n % 2 ? -1.0 : 1.0;
    double t = 0.0;
    if (dx.sign && cy.sign) t += dx.sign * cy.sign * std::exp(base + dx.log_abs + cy.log_abs);
    if (cx.sign && dy.sign) t += cx.sign * dy.sign * std::exp(base + cx.log_abs + dy.log_abs);
    cplx term = -I * sign * t;
    if (n < terms) {
      acc += term;
      out.partial_sums.push_back(acc);
    } else {
      out.remainder_estimate += std::abs(term);
    }
  }
  out.value = acc;
  return out;
}

NonpertIntegral nonpert_c_integral(double x, double y, double eps, const NonpertQuadSpec& spec) {
  if (!(eps >= 0.05 && eps <= 0.5)) throw std::invalid_argument("coupling must lie in [0.05, 0.5]");
  const double a = 2 * std::sqrt(2 / eps);
  // exponent shift that keeps the integrand finite: prefactor e^{-1/(3 eps) + (x^2 + y^2)/2}
  const double shift = -1 / (3 * eps) + 0.5 * (x * x + y * y);
  const double pre = std::sqrt(2 / (M_PI * M_PI * M_PI * eps));
  double err_total = 0.0;
  // d/dx of the inner exponential, over theta in [0, pi]; theta -> pi - theta conjugates the
  // integrand, so the theta integral is twice the real part over [0, pi/2].
  auto half = [&](double u, double v) {
    auto outer = [&](double t) {
      double s = t * t, c = 1 + s * s;
      auto inner = [&](double th) {
        cplx w = a * t * std::cos(th) - I * (u + s * v);
        cplx g = -2.0 * I * w / c * std::exp(w * w / c + shift);
        return g.real();
      };
      double e = 0.0;
      double val = 2 * integrate_adaptive(inner, 0.0, M_PI / 2, spec.tolerance, &e);
      err_total += 2 * e * 2 * t / std::sqrt(c);
      return val * 2 * t / std::sqrt(c);
    };
    double e = 0.0;
    double val = integrate_adaptive(outer, 0.0, 1.0, spec.tolerance, &e);
    err_total += e;
    return val;
  };
  double total = half(x, y) + half(y, x);
  // integral of |integrand| on a fixed product rule, only used as a scale
  double mag_total = 0.0;
  for (auto [u, v] : {std::pair{x, y}, {y, x}})
    for (const auto& qt : gauss_legendre_panels(0.0, 1.0, 2)) {
      double t = qt.x, s = t * t, c = 1 + s * s;
      for (const auto& qh : gauss_legendre_panels(0.0, M_PI / 2, 2)) {
        cplx w = a * t * std::cos(qh.x) - I * (u + s * v);
        mag_total += qt.w * qh.w * 2 * std::fabs((-2.0 * I * w / c * std::exp(w * w / c + shift)).real()) * 2 * t /
                     std::sqrt(c);
      }
    }
  NonpertIntegral out;
  out.value = I * pre * total;
  out.error_estimate = pre * err_total;
  out.magnitude = pre * mag_total;
  return out;
}

DeltaKernel perturbative_c_quartic() { return spectral_kernel(quartic_symbolic_table(), SpectralWeight::C, 1); }

PerturbativeQuarticSum perturbative_quartic_sum(double x, double y, double eps, int levels, double sigma) {
  if (levels < 1 || levels > 400) throw std::invalid_argument("level count must be in 1..400");
  if (!(sigma > 0)) throw std::invalid_argument("mollifier width must be positive");
  const int mmax = levels + 8;
  auto mx = mollified_oscillator_functions(x, sigma, mmax);
  auto my = mollified_oscillator_functions(y, sigma, mmax);
  auto log_norm = [](int m) { return 0.5 * (m * std::log(2.0) + std::lgamma(m + 1.0)); };
  cplx order[2] = {0.0, 0.0};
  for (int n = 0; n < levels; ++n) {
    HermiteEpsSeries p = quartic_table_wavefunction(n).payload();
    cplx fx[2] = {0.0, 0.0}, fy[2] = {0.0, 0.0};
    for (int k = 0; k <= std::min(1, p.order()); ++k)
      for (const auto& [m, c] : p[k].coeffs()) {
        double s = std::exp(log_norm(m) - log_norm(n));
        fx[k] += c.to_complex() * s * mx.at(m);
        fy[k] += c.to_complex() * s * my.at(m);
      }
    order[0] += fx[0] * fy[0];
    order[1] += fx[0] * fy[1] + fx[1] * fy[0];
  }
  PerturbativeQuarticSum out;
  out.mollified_sum = (order[0] + eps * order[1]).real();
  out.order1 = std::abs(order[1]);
  out.mollified_target = mollified_delta(x, -y, sigma);
  return out;
}

double nonpert_ratio(int n, double eps, double x) {
  Eigenpair p = solve_shooting(Model::Quartic, eps, n);
  cplx v = p.value_at(x) / ipow(n);
  cplx pred = I * b_coefficient(n, eps).value() / ipow(n) * c_second_solution(n, x * M_SQRT2).value;
  return v.imag() / pred.imag();
}

double nonpert_log_slope(double x, double y, const std::vector<double>& eps_values) {
  if (eps_values.size() < 2) throw std::invalid_argument("need at least two couplings");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double e : eps_values) {
    double mag = std::abs(nonpert_c_sum(x, y, e).value);
    if (!(mag > 0)) return std::numeric_limits<double>::quiet_NaN();
    double u = 1 / e, l = std::log(mag);
    sx += u;
    sy += l;
    sxx += u * u;
    sxy += u * l;
  }
  double k = static_cast<double>(eps_values.size());
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

VerificationReport validate_against_solver(int n, double eps) {
  if (n < 0 || n > 2) throw std::invalid_argument("level index must lie in 0..2");
  if (!(eps >= 0.05 && eps <= 0.12)) throw std::invalid_argument("coupling must lie in [0.05, 0.12]");
  Eigenpair p = solve_shooting(Model::Quartic, eps, n);
  const cplx b_over = I * b_coefficient(n, eps).value() / ipow(n);
  const char* anchor = "phi_n^nonpert(x) ~ i b_n C_n(x sqrt 2)";
  VerificationReport rep;
  double cmax = 0.0, imax = 0.0;
  std::vector<double> xs;
  for (int k = -8; k <= 8; ++k) xs.push_back(k / 8.0);
  std::vector<double> im(xs.size()), cn(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) {
    im[j] = (p.value_at(xs[j]) / ipow(n)).imag();
    cn[j] = c_second_solution(n, xs[j] * M_SQRT2).value;
    cmax = std::max(cmax, std::fabs(cn[j]));
    imax = std::max(imax, std::fabs(im[j]));
  }
  if (imax < 1e-11) throw SolverError("imaginary part is below the solver noise floor");
  for (std::size_t j = 0; j < xs.size(); ++j) {
    // skip nodes of C_n where the ratio is undefined
    if (std::fabs(cn[j]) < 0.05 * cmax) continue;
    double ratio = im[j] / (b_over.imag() * cn[j]);
    rep.pass_fail("ratio_x" + fmt(xs[j]), "Im phi_n / (b_n C_n) on the real segment", anchor, "[0.7, 1.3]", fmt(ratio),
                  0.3, ratio >= 0.7 && ratio <= 1.3, "n=" + std::to_string(n) + " eps=" + fmt(eps));
  }
  // C_n(-z) = (-1)^{n+1} C_n(z)
  double parity = n % 2 ? 1.0 : -1.0, worst = 0.0;
  for (std::size_t j = 0; j < xs.size(); ++j) worst = std::max(worst, std::fabs(im[j] - parity * im[xs.size() - 1 - j]));
  rep.pass_fail("parity", "Im phi_n has the parity of C_n", anchor, "0", fmt(worst / imax), 1e-6, worst <= 1e-6 * imax);
  return rep;
}

}  // namespace ptc
