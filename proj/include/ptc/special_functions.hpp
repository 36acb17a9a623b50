#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace ptc {

struct SpecialFunctionConfig {
  double target_accuracy = 1e-10;
  int series_cutoff = 4000;
  // |z| beyond which D_{-1/2} switches to its asymptotic series
  double asymptotic_threshold = 8.0;

  void validate() const;
};

class SpecialFunctionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ValueDerivative {
  double value = 0.0;
  double derivative = 0.0;
};

// sign * exp(log_abs); sign is 0 for an exact zero.
struct LogValue {
  double log_abs = 0.0;
  int sign = 0;
  double value() const;
};

enum class DHalfBranch { Series, Integral, Asymptotic };
std::string to_string(DHalfBranch b);

// D_{-1/2}(z) and its derivative for real z.
// The default entry point interpolates a Chebyshev table built once from the
// direct evaluator on [-12, 12]; outside it the direct evaluator is used.
ValueDerivative parabolic_d_half(double z);
ValueDerivative parabolic_d_half_direct(double z, const SpecialFunctionConfig& cfg = {});
ValueDerivative parabolic_d_half_branch(double z, DHalfBranch branch, const SpecialFunctionConfig& cfg = {});
DHalfBranch parabolic_d_half_default_branch(double z, const SpecialFunctionConfig& cfg = {});

// D_nu(z) for nu = -1/2 (real z), nu = 0, 1, 2, ... (any z) and nu = -1, -2, ... (any z).
std::complex<double> parabolic_d(double nu, std::complex<double> z, const SpecialFunctionConfig& cfg = {});

// D_n(z) = 2^{-n/2} e^{-z^2/4} H_n(z / sqrt 2) for real z, with its derivative.
ValueDerivative parabolic_d_int(int n, double z);
LogValue log_parabolic_d_int(int n, double z);

// C_n(z) = i/sqrt(2 pi) [i^n D_{-n-1}(iz) - (-i)^n D_{-n-1}(-iz)], evaluated through
// the Kummer series in 100-digit arithmetic.
ValueDerivative c_second_solution(int n, double z, const SpecialFunctionConfig& cfg = {});
LogValue log_c_second_solution(int n, double z, const SpecialFunctionConfig& cfg = {});
// Validation paths: ODE integration from z = 0 and the sine-transform integral.
double c_second_solution_ode(int n, double z);
double c_second_solution_integral(int n, double z);

struct AiryValues {
  double ai = 0.0, aip = 0.0, bi = 0.0, bip = 0.0;
};
// Ai and Bi with derivatives for |r| <= 30.
AiryValues airy_pair(double r, const SpecialFunctionConfig& cfg = {});

}  // namespace ptc
