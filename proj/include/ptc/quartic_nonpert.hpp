#pragma once

#include "ptc/kernel.hpp"
#include "ptc/report.hpp"
#include "ptc/special_functions.hpp"

#include <complex>
#include <vector>

namespace ptc {

using cplx = std::complex<double>;

// Three-region description of level n of -1/2 phi'' + (x^2/2 - eps x^4) phi = E phi on the real axis:
// phi'' = omega_n phi with omega_n(x) = -2 eps x^4 + x^2 - 2n - 1.
struct WkbRegionModel {
  int n = 0;
  double eps = 0.0;

  WkbRegionModel(int n, double eps);

  double omega(double x) const;
  // inner turning point sqrt(2n + 1) and outer turning point 1/sqrt(2 eps)
  double inner_turning_point() const;
  double outer_turning_point() const;
  // x = x_2 (1 - 2^{1/3} eps^{2/3} r)
  double r_of_x(double x) const;
  double x_of_r(double r) const;
  // int_{x_1}^{x} sqrt(omega_n(s)) ds for x_1 <= x <= x_2, with omega clipped at zero near the turning points
  double wkb_action(double x) const;
  // Unit-amplitude physical-optics forms omega^{-1/4} exp(-+ action) in region II.
  double region2_decaying(double x) const;
  double region2_growing(double x) const;
  // Airy pair at r(x): the perturbative part follows Bi(r), the nonperturbative part -i Ai(r).
  AiryValues region3(double x) const;
};

// b_n = -i^n pi^{1/4} (2 n!)^{-1/2} (4/eps)^{n+1/2} e^{-1/(3 eps)}, kept as log|b_n| and phase.
struct NonpertCoefficient {
  int n = 0;
  double eps = 0.0;
  double log_abs = 0.0;
  cplx phase{1.0};

  cplx value() const;
};

NonpertCoefficient b_coefficient(int n, double eps);

struct NonpertSum {
  cplx value{0.0};                  // correction to delta(x + y)
  std::vector<cplx> partial_sums;   // after 1, 2, ..., N terms
  double remainder_estimate = 0.0;  // bound on the omitted tail
  int terms = 0;
};

int default_nonpert_terms(double eps);

// -i sqrt(2/eps) e^{-1/(3 eps)} sum_{n<N} (-4/eps)^n/n! [D_n(x sqrt2) C_n(y sqrt2) + C_n(x sqrt2) D_n(y sqrt2)],
// evaluated term by term in log-magnitude form. N = 0 selects default_nonpert_terms(eps).
NonpertSum nonpert_c_sum(double x, double y, double eps, int terms = 0);

struct NonpertQuadSpec {
  double tolerance = 1e-10;  // relative tolerance of each nested adaptive integral
};

struct NonpertIntegral {
  cplx value{0.0};
  double error_estimate = 0.0;
  double magnitude = 0.0;  // the same prefactor times the integral of |integrand|, a scale for relative errors
};

// The same correction as the double integral over theta in [0, pi], s in [0, 1], with the x-derivative
// taken under the integral and s = t^2 removing the endpoint square root.
NonpertIntegral nonpert_c_integral(double x, double y, double eps, const NonpertQuadSpec& spec = {});

// First-order perturbative C kernel of the quartic theory through the kernel pipeline.
DeltaKernel perturbative_c_quartic();

struct PerturbativeQuarticSum {
  double mollified_sum = 0.0;    // order 0 plus eps times order 1, mollified
  double mollified_target = 0.0; // mollified delta(x + y)
  double order1 = 0.0;           // mollified eps^1 coefficient
};

// Mollified truncated sum of phi_n(x) phi_n(y) built from the first-order quartic eigenfunctions.
PerturbativeQuarticSum perturbative_quartic_sum(double x, double y, double eps, int levels, double sigma);

// Im(phi_n(x) / i^n) of the solver eigenfunction over the predicted Im(i b_n C_n(x sqrt 2) / i^n).
double nonpert_ratio(int n, double eps, double x);

// Least-squares slope of log|correction(x, y)| against 1/eps; NaN when the correction vanishes.
double nonpert_log_slope(double x, double y, const std::vector<double>& eps_values);

// Compares Im phi_n on the real segment of the solver eigenfunction with the b_n C_n(x sqrt 2) prediction.
VerificationReport validate_against_solver(int n, double eps);

}  // namespace ptc
