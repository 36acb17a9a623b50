#include "ptc/quadrature.hpp"

#include "ptc/hermite_series.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <stdexcept>

namespace ptc {

std::vector<QuadPoint> gauss_legendre_panels(double a, double b, int panels) {
  using Rule = boost::math::quadrature::gauss<double, 20>;
  if (panels < 1) throw std::invalid_argument("panel count must be positive");
  const auto& xs = Rule::abscissa();
  const auto& ws = Rule::weights();
  std::vector<QuadPoint> out;
  out.reserve(static_cast<std::size_t>(panels) * 20);
  double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    double mid = a + (p + 0.5) * h, half = 0.5 * h;
    // increasing order inside each panel
    for (std::size_t k = xs.size(); k-- > 0;) out.push_back({mid - half * xs[k], half * ws[k]});
    for (std::size_t k = 0; k < xs.size(); ++k) {
      if (k == 0 && xs[0] == 0.0) continue;
      out.push_back({mid + half * xs[k], half * ws[k]});
    }
  }
  return out;
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol, double* error) {
  double err = 0.0, l1 = 0.0;
  double r = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 15, tol, &err, &l1);
  if (error) *error = err;
  if (err > 100.0 * tol * l1 && err > 1e-300)
    throw std::runtime_error("adaptive quadrature did not converge");
  return r;
}

std::complex<double> integrate_adaptive_complex(const std::function<std::complex<double>(double)>& f, double a, double b,
                                        double tol, double* error) {
  double er = 0.0, ei = 0.0;
  double re = integrate_adaptive(std::function<double(double)>([&](double t) { return f(t).real(); }), a, b, tol, &er);
  double im = integrate_adaptive(std::function<double(double)>([&](double t) { return f(t).imag(); }), a, b, tol, &ei);
  if (error) *error = std::hypot(er, ei);
  return {re, im};
}

double gaussian_mollifier(double t, double sigma) {
  return std::exp(-t * t / (2.0 * sigma * sigma)) / (sigma * std::sqrt(2.0 * M_PI));
}

double mollified_delta(double x, double y, double sigma) {
  double d = x - y;
  return std::exp(-d * d / (4.0 * sigma * sigma)) / (sigma * std::sqrt(4.0 * M_PI));
}

std::vector<double> mollified_oscillator_functions(double x, double sigma, int mmax) {
  std::vector<double> out(static_cast<std::size_t>(mmax) + 1, 0.0);
  double w = 7 * sigma;
  int panels = std::max(4, static_cast<int>(std::ceil(2 * w / 0.25)));
  for (const auto& q : gauss_legendre_panels(x - w, x + w, panels)) {
    auto psi = oscillator_functions(q.x, mmax);
    double r = q.w * gaussian_mollifier(x - q.x, sigma);
    for (int m = 0; m <= mmax; ++m) out[m] += r * psi[m];
  }
  return out;
}

}  // namespace ptc

namespace ptc {

double fd_first_derivative(const std::function<double(double)>& f, double x, double h) {
  static const double c[3] = {3.0 / 4, -3.0 / 20, 1.0 / 60};
  double s = 0;
  for (int k = 1; k <= 3; ++k) s += c[k - 1] * (f(x + k * h) - f(x - k * h));
  return s / h;
}

double fd_second_derivative(const std::function<double(double)>& f, double x, double h) {
  static const double c[3] = {3.0 / 2, -3.0 / 20, 1.0 / 90};
  double s = -49.0 / 18 * f(x);
  for (int k = 1; k <= 3; ++k) s += c[k - 1] * (f(x + k * h) + f(x - k * h));
  return s / (h * h);
}

}  // namespace ptc
