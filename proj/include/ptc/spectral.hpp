#pragma once

#include "ptc/perturbation.hpp"
#include "ptc/report.hpp"

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

namespace ptc {

using cplx = std::complex<double>;

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ContourSegment {
  cplx start;
  cplx end;
  int panels = 1;  // 20-point Gauss-Legendre panels
};

// Piecewise straight contour, ordered from the left asymptotic end to the right one.
struct ContourSpec {
  std::vector<ContourSegment> segments;
  std::array<double, 2> wedge_angles{M_PI, 0.0};  // asymptotic arguments of the left and right ends
  double matching_point = 0.0;

  // Real axis [-half_width, half_width].
  static ContourSpec cubic(double half_width = 10.0, double panel_width = 0.5);
  // Rays at arg x = -5pi/6 and -pi/6 joined to [-L, L], L = 2/sqrt(2 eps).
  static ContourSpec quartic(double eps, double ray_length = 6.0, double panel_width = 0.5);

  void validate(Model m) const;
};

// Quadrature nodes along the contour: sum_j w_j f(x_j) approximates int_C f dx.
struct ContourGrid {
  std::vector<cplx> x;
  std::vector<cplx> w;
  std::vector<int> mirror;  // index of -conj(x_j)
  std::size_t size() const { return x.size(); }
};

ContourGrid discretize(const ContourSpec& spec);

struct Eigenpair {
  int n = 0;
  Model model = Model::Cubic;
  double eps = 0.0;
  double energy = 0.0;
  double im_energy = 0.0;
  ContourGrid grid;
  std::vector<cplx> values;
  // phi and phi' at x = 0, used to evaluate at arbitrary real points
  std::array<cplx, 2> state0{};
  cplx lambda{1.0};  // PT phi = lambda phi before rescaling
  double alpha = 0.0;
  cplx pt_norm{0.0};  // (phi, phi) after normalization
  bool pt_normalized = false;
  // oscillator-basis coefficients (matrix solutions only)
  std::vector<cplx> coefficients;

  // phi at a real point, by integrating out from the origin (shooting) or from the basis (matrix).
  cplx value_at(double x) const;
};

struct ShootingOptions {
  double tol = 1e-12;
  int max_iterations = 60;
  // start the quartic solve at this coupling and continue in steps of `continuation_step`
  double continuation_start = 0.02;
  double continuation_step = 0.005;
};

// Raw glued eigenfunction, then PT-normalized unless `normalize` is false.
Eigenpair solve_shooting(Model model, double eps, int n, const ContourSpec& contour,
                         const ShootingOptions& opt = {}, bool normalize = true);
Eigenpair solve_shooting(Model model, double eps, int n, const ShootingOptions& opt = {});
// Levels 0..count-1, each seeded by extrapolating the levels below it.
std::vector<Eigenpair> solve_shooting_levels(Model model, double eps, int count, const ContourSpec& contour,
                                             const ShootingOptions& opt = {});

// Lowest `levels` eigenpairs of the cubic Hamiltonian in an oscillator basis of size N.
std::vector<Eigenpair> solve_oscillator_basis(double eps, int basis_size, int levels,
                                              const ContourGrid& grid = discretize(ContourSpec::cubic()));

Eigenpair pt_normalize_numeric(const Eigenpair& raw);

// (phi_m, phi_n) = int [PT phi_m](x) phi_n(x) dx on the shared grid.
Eigen::MatrixXcd orthogonality_matrix(const std::vector<Eigenpair>& pairs);

// PT inner product of grid samples.
cplx pt_inner(const ContourGrid& grid, const std::vector<cplx>& f, const std::vector<cplx>& g);

// Perturbative energy estimate used to seed the search.
double perturbative_energy(Model model, double eps, int n);

struct CompletenessPoint {
  int levels = 0;
  double mollified_sum = 0.0;
  double error = 0.0;
  double max_term = 0.0;  // largest single mollified term in the sum
  bool computed = false;  // false when the ladder did not reach this many levels
  int reached = 0;        // levels the ladder converged
};

// Mollified sum_{n<N} (-1)^n phi_n(x) phi_n(y), or sum_{n<N} [CPT phi_n](x) phi_n(y), against the
// mollified delta, from cubic shooting eigenpairs on a shared real-axis grid. Level counts beyond
// what the shooting ladder reaches are returned with computed = false.
std::vector<CompletenessPoint> completeness_series(double eps, const std::vector<int>& levels, double x, double y,
                                                   double sigma, bool cpt_form = false);

}  // namespace ptc
