#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace ptc {

struct QuadPoint {
  double x;
  double w;
};

// Composite 20-point Gauss-Legendre rule on [a, b] split into equal panels.
std::vector<QuadPoint> gauss_legendre_panels(double a, double b, int panels);

// Adaptive 31-point Gauss-Kronrod; throws std::runtime_error when the error
// estimate stays above tol * max(1, |result|).
double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol = 1e-12,
                          double* error = nullptr);
std::complex<double> integrate_adaptive_complex(const std::function<std::complex<double>(double)>& f, double a,
                                        double b, double tol = 1e-12, double* error = nullptr);

// Gaussian mollifier of width sigma, normalised to unit mass.
double gaussian_mollifier(double t, double sigma);
// Mollified delta(x - y) for the product mollifier of width sigma in each variable.
double mollified_delta(double x, double y, double sigma);
// int rho(x - t) psi_m(t) dt for m = 0..mmax, psi_m the normalized oscillator functions.
std::vector<double> mollified_oscillator_functions(double x, double sigma, int mmax);

}  // namespace ptc

namespace ptc {

// Sixth-order central differences.
double fd_first_derivative(const std::function<double(double)>& f, double x, double h);
double fd_second_derivative(const std::function<double(double)>& f, double x, double h);

}  // namespace ptc
