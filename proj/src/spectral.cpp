#include "ptc/spectral.hpp"

#include "ptc/hermite_series.hpp"
#include "ptc/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace ptc {

namespace {

const cplx I(0.0, 1.0);

cplx potential(Model m, double eps, cplx x) {
  cplx x2 = x * x;
  return m == Model::Cubic ? 0.5 * x2 + I * eps * x2 * x : 0.5 * x2 - eps * x2 * x2;
}

struct Problem {
  Model model;
  double eps;
  cplx energy;
  double tol;
};

// phi and phi' scaled by exp(log_scale)
struct Walk {
  std::array<cplx, 2> y;
  double log_scale = 0.0;
};

// Integrates phi'' = 2 (V - E) phi along the segment a -> b, renormalizing every half unit.
// Records phi at the ascending fractions `at` of the segment.
void walk(const Problem& p, cplx a, cplx b, Walk& w, const std::vector<double>& at, std::vector<cplx>* vals,
          std::vector<double>* logs) {
  using namespace boost::numeric::odeint;
  using State = std::array<double, 4>;
  double len = std::abs(b - a);
  if (len == 0.0) return;
  cplx d = (b - a) / len;
  auto rhs = [&](const State& s, State& ds, double t) {
    cplx x = a + d * t;
    cplx phi(s[0], s[1]), dphi(s[2], s[3]);
    cplx f1 = d * dphi, f2 = d * 2.0 * (potential(p.model, p.eps, x) - p.energy) * phi;
    ds = {f1.real(), f1.imag(), f2.real(), f2.imag()};
  };
  auto stepper = make_controlled(p.tol * 1e-2, p.tol * 1e-2, runge_kutta_fehlberg78<State>());
  int pieces = std::max(1, static_cast<int>(std::ceil(len / 0.5)));
  std::size_t next = 0;
  for (int k = 0; k < pieces; ++k) {
    double t0 = len * k / pieces, t1 = len * (k + 1) / pieces;
    std::vector<double> times{t0};
    std::vector<bool> record{false};
    while (next < at.size() && (at[next] * len < t1 || k == pieces - 1)) {
      double t = std::max(at[next] * len, t0);
      if (t > times.back()) {
        times.push_back(t);
        record.push_back(true);
      } else {
        // coincides with the piece start
        if (vals) {
          vals->push_back(w.y[0]);
          logs->push_back(w.log_scale);
        }
      }
      ++next;
    }
    if (times.back() < t1) {
      times.push_back(t1);
      record.push_back(false);
    }
    State s{w.y[0].real(), w.y[0].imag(), w.y[1].real(), w.y[1].imag()};
    std::size_t idx = 0;
    auto obs = [&](const State& st, double) {
      if (record[idx] && vals) {
        vals->push_back(cplx(st[0], st[1]));
        logs->push_back(w.log_scale);
      }
      ++idx;
    };
    integrate_times(stepper, rhs, s, times.begin(), times.end(), (t1 - t0) / 8, obs);
    w.y = {cplx(s[0], s[1]), cplx(s[2], s[3])};
    double nrm = std::abs(w.y[0]) + std::abs(w.y[1]);
    if (!(nrm > 0) || !std::isfinite(nrm)) throw SolverError("shooting integration lost the solution");
    w.y[0] /= nrm;
    w.y[1] /= nrm;
    w.log_scale += std::log(nrm);
  }
}

// Decaying start at the far end `a` of a walk heading toward `b`; phi = 1 keeps the
// matching function analytic in E.
Walk start_walk(const Problem& p, cplx a, cplx b) {
  cplx k = std::sqrt(2.0 * (potential(p.model, p.eps, a) - p.energy));
  cplx d = (b - a) / std::abs(b - a);
  if ((k * d).real() < 0) k = -k;
  Walk w;
  w.y = {1.0, k};
  return w;
}

int matching_segment(const ContourSpec& c) {
  for (std::size_t s = 0; s < c.segments.size(); ++s)
    if (std::abs(c.segments[s].start - c.matching_point) < 1e-12) return static_cast<int>(s);
  throw std::invalid_argument("matching point must be a segment boundary");
}

std::vector<double> panel_fractions(int panels) {
  std::vector<double> f;
  for (const auto& q : gauss_legendre_panels(0.0, 1.0, panels)) f.push_back(q.x);
  return f;
}

struct Sweep {
  Walk left, right;
  std::vector<cplx> lv, rv;
  std::vector<double> ll, rl;
};

Sweep sweep(const Problem& p, const ContourSpec& c, bool record) {
  int m = matching_segment(c);
  Sweep s;
  const auto& segs = c.segments;
  s.left = start_walk(p, segs.front().start, segs.front().end);
  for (int k = 0; k < m; ++k) {
    std::vector<double> at = record ? panel_fractions(segs[k].panels) : std::vector<double>{};
    walk(p, segs[k].start, segs[k].end, s.left, at, record ? &s.lv : nullptr, record ? &s.ll : nullptr);
  }
  s.right = start_walk(p, segs.back().end, segs.back().start);
  for (int k = static_cast<int>(segs.size()) - 1; k >= m; --k) {
    std::vector<double> at;
    if (record) {
      at = panel_fractions(segs[k].panels);
      std::reverse(at.begin(), at.end());
      for (double& f : at) f = 1.0 - f;
    }
    walk(p, segs[k].end, segs[k].start, s.right, at, record ? &s.rv : nullptr, record ? &s.rl : nullptr);
  }
  return s;
}

// Wronskian of the two inward solutions at the matching point, as m * exp(s).
struct Scaled {
  cplx m;
  double s;
};

Scaled mismatch(const Problem& p, const ContourSpec& c) {
  Sweep sw = sweep(p, c, false);
  const auto &l = sw.left.y, &r = sw.right.y;
  return {l[0] * r[1] - l[1] * r[0], sw.left.log_scale + sw.right.log_scale};
}

cplx secant(Model model, double eps, const ContourSpec& c, cplx e0, cplx e1, const ShootingOptions& opt) {
  Problem p{model, eps, e0, opt.tol};
  Scaled f0 = mismatch(p, c);
  p.energy = e1;
  Scaled f1 = mismatch(p, c);
  for (int it = 0; it < opt.max_iterations; ++it) {
    if (f1.m == 0.0) return e1;
    cplx ratio = f0.m / f1.m * std::exp(f0.s - f1.s);
    cplx e2 = e1 - (e1 - e0) / (1.0 - ratio);
    if (!std::isfinite(e2.real()) || !std::isfinite(e2.imag())) break;
    // keep each step within a fraction of the level spacing
    cplx step = e2 - e1;
    if (std::abs(step) > 0.25) e2 = e1 + 0.25 * step / std::abs(step);
    e0 = e1;
    f0 = f1;
    e1 = e2;
    if (std::abs(e1 - e0) <= opt.tol * std::max(1.0, std::abs(e1))) return e1;
    p.energy = e1;
    f1 = mismatch(p, c);
  }
  throw SolverError("eigenvalue iteration did not converge");
}

cplx find_energy(Model model, double eps, int n, const ContourSpec& contour, const ShootingOptions& opt) {
  double seed = perturbative_energy(model, eps, n);
  if (model == Model::Quartic && eps > opt.continuation_start + 1e-12) {
    // continue in eps from a coupling where the first-order seed is reliable
    std::vector<double> path;
    for (double e = opt.continuation_start; e < eps - 1e-12; e += opt.continuation_step) path.push_back(e);
    cplx prev = 0.0, cur = 0.0;
    double eprev = 0.0, ecur = 0.0;
    for (std::size_t k = 0; k < path.size(); ++k) {
      double e = path[k];
      cplx guess = k == 0 ? cplx(perturbative_energy(model, e, n))
                   : k == 1 ? cur
                            : cur + (cur - prev) * ((e - ecur) / (ecur - eprev));
      cplx found = secant(model, e, ContourSpec::quartic(e), guess, guess + 1e-3, opt);
      prev = cur;
      eprev = ecur;
      cur = found;
      ecur = e;
    }
    cplx guess = path.size() < 2 ? cur : cur + (cur - prev) * ((eps - ecur) / (ecur - eprev));
    return secant(model, eps, contour, guess, guess + 1e-3, opt);
  }
  return secant(model, eps, contour, seed, seed + 1e-3, opt);
}

}  // namespace

ContourSpec ContourSpec::cubic(double half_width, double panel_width) {
  if (!(half_width > 0) || !(panel_width > 0)) throw std::invalid_argument("invalid contour size");
  int p = std::max(1, static_cast<int>(std::ceil(half_width / panel_width)));
  ContourSpec c;
  c.segments = {{-half_width, 0.0, p}, {0.0, half_width, p}};
  c.wedge_angles = {M_PI, 0.0};
  return c;
}

ContourSpec ContourSpec::quartic(double eps, double ray_length, double panel_width) {
  if (!(eps > 0) || !(ray_length > 0) || !(panel_width > 0)) throw std::invalid_argument("invalid contour size");
  double l = 2.0 / std::sqrt(2.0 * eps);
  cplx right = l + ray_length * std::polar(1.0, -M_PI / 6), left = -l + ray_length * std::polar(1.0, -5 * M_PI / 6);
  int pr = std::max(1, static_cast<int>(std::ceil(ray_length / panel_width)));
  int pl = std::max(1, static_cast<int>(std::ceil(l / panel_width)));
  ContourSpec c;
  c.segments = {{left, -l, pr}, {-l, 0.0, pl}, {0.0, l, pl}, {l, right, pr}};
  c.wedge_angles = {-5 * M_PI / 6, -M_PI / 6};
  return c;
}

void ContourSpec::validate(Model m) const {
  if (segments.empty()) throw std::invalid_argument("contour has no segments");
  for (std::size_t k = 0; k + 1 < segments.size(); ++k)
    if (std::abs(segments[k].end - segments[k + 1].start) > 1e-12) throw std::invalid_argument("contour is not connected");
  for (const auto& s : segments)
    if (s.panels < 1) throw std::invalid_argument("segment panel count must be positive");
  matching_segment(*this);
  if (m == Model::Cubic) {
    // both ends run parallel to the real axis, inside the decay wedges
    const auto &first = segments.front(), &last = segments.back();
    if (first.start.imag() != first.end.imag() || last.start.imag() != last.end.imag() ||
        !(first.start.real() < first.end.real()) || !(last.start.real() < last.end.real()))
      throw std::invalid_argument("cubic contour must end parallel to the real axis");
  } else {
    // the declared angles and the actual end segments must both point into the wedges
    double r = wedge_angles[1], l = wedge_angles[0];
    double rs = std::arg(segments.back().end - segments.back().start);
    double ls = std::arg(segments.front().start - segments.front().end);
    auto right_ok = [](double a) { return a > -M_PI / 3 && a < 0; };
    auto left_ok = [](double a) { return a > -M_PI && a < -2 * M_PI / 3; };
    if (!right_ok(r) || !left_ok(l) || !right_ok(rs) || !left_ok(ls))
      throw std::invalid_argument("quartic rays must lie inside the Stokes wedges");
  }
}

ContourGrid discretize(const ContourSpec& spec) {
  ContourGrid g;
  for (const auto& s : spec.segments) {
    cplx d = s.end - s.start;
    for (const auto& q : gauss_legendre_panels(0.0, 1.0, s.panels)) {
      g.x.push_back(s.start + d * q.x);
      g.w.push_back(d * q.w);
    }
  }
  g.mirror.assign(g.x.size(), -1);
  for (std::size_t j = 0; j < g.x.size(); ++j) {
    cplx target = -std::conj(g.x[j]);
    std::size_t guess = g.x.size() - 1 - j;
    if (std::abs(g.x[guess] - target) < 1e-9) {
      g.mirror[j] = static_cast<int>(guess);
      continue;
    }
    for (std::size_t k = 0; k < g.x.size(); ++k)
      if (std::abs(g.x[k] - target) < 1e-9) g.mirror[j] = static_cast<int>(k);
  }
  return g;
}

double perturbative_energy(Model model, double eps, int n) {
  return evaluate(model == Model::Cubic ? cubic_energy(n) : quartic_energy(n), eps).real();
}

cplx pt_inner(const ContourGrid& grid, const std::vector<cplx>& f, const std::vector<cplx>& g) {
  if (f.size() != grid.size() || g.size() != grid.size()) throw std::invalid_argument("grid size mismatch");
  cplx acc = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (grid.mirror[j] < 0) throw std::invalid_argument("contour grid is not PT symmetric");
    acc += grid.w[j] * std::conj(f[grid.mirror[j]]) * g[j];
  }
  return acc;
}

namespace {

Eigenpair assemble(Model model, double eps, int n, const ContourSpec& contour, cplx e, const ShootingOptions& opt,
                   bool normalize) {
  if (std::fabs(e.imag()) > 10 * opt.tol * std::max(1.0, std::abs(e)))
    throw SolverError("eigenvalue has an imaginary part beyond tolerance: contour may be unsuitable");
  Problem p{model, eps, e, opt.tol};
  Sweep s = sweep(p, contour, true);
  const auto &l = s.left.y, &r = s.right.y;
  // glue the right solution to the left one at the matching point
  int c = std::abs(l[0] * r[0]) >= std::abs(l[1] * r[1]) ? 0 : 1;
  cplx glue = l[c] / r[c];
  Eigenpair out;
  out.n = n;
  out.model = model;
  out.eps = eps;
  out.energy = e.real();
  out.im_energy = e.imag();
  out.grid = discretize(contour);
  out.values.reserve(out.grid.size());
  for (std::size_t j = 0; j < s.lv.size(); ++j)
    out.values.push_back(s.lv[j] * std::exp(s.ll[j] - s.left.log_scale));
  for (std::size_t j = s.rv.size(); j-- > 0;)
    out.values.push_back(glue * s.rv[j] * std::exp(s.rl[j] - s.right.log_scale));
  if (out.values.size() != out.grid.size()) throw SolverError("internal error: sample count mismatch");
  out.state0 = l;
  return normalize ? pt_normalize_numeric(out) : out;
}

void check_shooting_args(double eps, double tol) {
  if (!(eps > 0 && eps <= 0.3)) throw std::invalid_argument("coupling must lie in (0, 0.3]");
  if (tol < 1e-12 * (1 - 1e-9)) throw std::invalid_argument("tolerance must be at least 1e-12");
}

}  // namespace

Eigenpair solve_shooting(Model model, double eps, int n, const ContourSpec& contour, const ShootingOptions& opt,
                         bool normalize) {
  check_shooting_args(eps, opt.tol);
  if (n < 0 || n > 10) throw std::invalid_argument("level index must lie in 0..10");
  contour.validate(model);
  return assemble(model, eps, n, contour, find_energy(model, eps, n, contour, opt), opt, normalize);
}

namespace {

// Levels 0..count-1 in order; with `partial` the ladder stops at the first level that fails.
std::vector<Eigenpair> ladder(Model model, double eps, int count, const ContourSpec& contour,
                              const ShootingOptions& opt, bool partial) {
  check_shooting_args(eps, opt.tol);
  if (count < 1) throw std::invalid_argument("level count must be positive");
  contour.validate(model);
  std::vector<Eigenpair> out;
  std::vector<double> e;
  for (int n = 0; n < count; ++n) {
    cplx found;
    try {
      if (n < 4) {
        found = find_energy(model, eps, n, contour, opt);
      } else {
        // quadratic extrapolation from the three levels below
        double guess = 3 * e[n - 1] - 3 * e[n - 2] + e[n - 3];
        found = secant(model, eps, contour, guess, guess + 1e-3, opt);
      }
      if (n > 0 && !(found.real() > e.back() + 1e-6))
        throw SolverError("level sequence is not increasing");
    } catch (const SolverError& err) {
      if (partial) break;
      throw SolverError("level " + std::to_string(n) + ": " + err.what());
    }
    e.push_back(found.real());
    out.push_back(assemble(model, eps, n, contour, found, opt, true));
  }
  return out;
}

}  // namespace

std::vector<Eigenpair> solve_shooting_levels(Model model, double eps, int count, const ContourSpec& contour,
                                             const ShootingOptions& opt) {
  return ladder(model, eps, count, contour, opt, false);
}

Eigenpair solve_shooting(Model model, double eps, int n, const ShootingOptions& opt) {
  ContourSpec c = model == Model::Cubic ? ContourSpec::cubic() : ContourSpec::quartic(eps);
  return solve_shooting(model, eps, n, c, opt);
}

Eigenpair pt_normalize_numeric(const Eigenpair& raw) {
  Eigenpair e = raw;
  const auto& y = raw.state0;
  // PT phi(0) = conj(phi(0)) and (PT phi)'(0) = -conj(phi'(0))
  cplx lambda = std::abs(y[0]) >= std::abs(y[1]) ? std::conj(y[0]) / y[0] : -std::conj(y[1]) / y[1];
  double alpha = std::arg(lambda);
  cplx c = std::polar(1.0, alpha / 2);
  std::vector<cplx> v(raw.values.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = c * raw.values[j];
  cplx norm = pt_inner(raw.grid, v, v);
  if (std::abs(norm) < 1e-12) throw SolverError("PT norm vanishes: degenerate sample");
  double s = 1.0 / std::sqrt(std::abs(norm));
  // leading oscillator component carries the phase i^n
  cplx overlap = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j)
    overlap += raw.grid.w[j] * v[j] * oscillator_functions(raw.grid.x[j], raw.n)[raw.n];
  if ((overlap / std::pow(I, raw.n)).real() < 0) s = -s;
  for (auto& z : v) z *= s;
  e.values = std::move(v);
  e.state0 = {c * s * y[0], c * s * y[1]};
  e.lambda = lambda;
  e.alpha = alpha;
  e.pt_norm = pt_inner(e.grid, e.values, e.values);
  e.pt_normalized = true;
  return e;
}

cplx Eigenpair::value_at(double x) const {
  if (!coefficients.empty()) {
    auto psi = oscillator_functions(x, static_cast<int>(coefficients.size()) - 1);
    cplx acc = 0.0;
    for (std::size_t k = 0; k < coefficients.size(); ++k) acc += coefficients[k] * psi[k];
    return acc;
  }
  if (x == 0.0) return state0[0];
  Problem p{model, eps, cplx(energy, im_energy), 1e-12};
  Walk w;
  w.y = state0;
  std::vector<cplx> vals;
  std::vector<double> logs;
  walk(p, 0.0, x, w, {1.0}, &vals, &logs);
  return vals.back() * std::exp(logs.back());
}

std::vector<Eigenpair> solve_oscillator_basis(double eps, int basis_size, int levels, const ContourGrid& grid) {
  if (basis_size < 1 || basis_size > 400) throw std::invalid_argument("basis size must lie in 1..400");
  if (levels < 1 || levels > basis_size) throw std::invalid_argument("level count must lie in 1..basis size");
  int m = basis_size + 3;
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(m, m);
  for (int k = 0; k + 1 < m; ++k) x(k, k + 1) = x(k + 1, k) = std::sqrt((k + 1) / 2.0);
  Eigen::MatrixXd x3 = (x * x * x).topLeftCorner(basis_size, basis_size);
  Eigen::MatrixXcd h = (I * eps) * x3.cast<cplx>();
  for (int k = 0; k < basis_size; ++k) h(k, k) += k + 0.5;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) throw SolverError("matrix diagonalization failed");
  std::vector<int> order(basis_size);
  std::iota(order.begin(), order.end(), 0);
  const auto& ev = solver.eigenvalues();
  std::sort(order.begin(), order.end(), [&](int a, int b) { return ev[a].real() < ev[b].real(); });

  std::vector<Eigenpair> out;
  for (int n = 0; n < levels; ++n) {
    if (std::fabs(ev[order[n]].imag()) > 1e-8)
      throw SolverError("level " + std::to_string(n) + " has a non-real eigenvalue: raise the basis size");
    Eigen::VectorXcd v = solver.eigenvectors().col(order[n]);
    // PT symmetric form: even components real, odd components imaginary
    int big = 0;
    v.cwiseAbs().maxCoeff(&big);
    cplx target = big % 2 ? I : cplx(1.0);
    v *= target * std::abs(v[big]) / v[big];
    cplx norm = (v.transpose() * v)(0, 0);
    if (std::abs(norm) < 1e-12) throw SolverError("PT norm vanishes: raise the basis size");
    v /= std::sqrt(std::abs(norm));
    if (n < basis_size && (v[n] / std::pow(I, n)).real() < 0) v = -v;
    Eigenpair e;
    e.n = n;
    e.model = Model::Cubic;
    e.eps = eps;
    e.energy = ev[order[n]].real();
    e.im_energy = ev[order[n]].imag();
    e.coefficients.assign(v.data(), v.data() + v.size());
    e.grid = grid;
    e.values.resize(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
      auto psi = oscillator_functions(grid.x[j], basis_size - 1);
      cplx acc = 0.0;
      for (int k = 0; k < basis_size; ++k) acc += v[k] * psi[k];
      e.values[j] = acc;
    }
    e.pt_norm = (v.transpose() * v)(0, 0);
    e.pt_normalized = true;
    e.state0 = {e.value_at(0.0), 0.0};
    out.push_back(std::move(e));
  }
  return out;
}

Eigen::MatrixXcd orthogonality_matrix(const std::vector<Eigenpair>& pairs) {
  Eigen::MatrixXcd m(pairs.size(), pairs.size());
  for (std::size_t a = 0; a < pairs.size(); ++a)
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (pairs[a].grid.x != pairs[b].grid.x) throw std::invalid_argument("eigenpairs live on different grids");
      m(a, b) = pt_inner(pairs[a].grid, pairs[a].values, pairs[b].values);
    }
  return m;
}

std::vector<CompletenessPoint> completeness_series(double eps, const std::vector<int>& levels, double x, double y,
                                                   double sigma, bool cpt_form) {
  if (levels.empty()) throw std::invalid_argument("no level counts given");
  int top = *std::max_element(levels.begin(), levels.end());
  const double half_width = 12.0;
  if (std::max(std::fabs(x), std::fabs(y)) + 7 * sigma > half_width)
    throw std::invalid_argument("mollifier support must lie inside the contour");
  // real-axis eigenfunctions; the ladder stops where the matching function reaches round-off
  auto pairs = ladder(Model::Cubic, eps, top, ContourSpec::cubic(half_width), {}, true);
  int reached = static_cast<int>(pairs.size());
  if (reached == 0) throw SolverError("no eigenpairs converged");
  const ContourGrid& g = pairs.front().grid;
  auto mollify = [&](const std::vector<cplx>& f, double at) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) acc += g.w[j] * gaussian_mollifier(at - g.x[j].real(), sigma) * f[j];
    return acc;
  };
  std::vector<cplx> term(reached);
  for (int n = 0; n < reached; ++n) {
    const auto& v = pairs[n].values;
    if (!cpt_form) {
      term[n] = (n % 2 ? -1.0 : 1.0) * mollify(v, x) * mollify(v, y);
      continue;
    }
    // C = sum_m phi_m(x) phi_m(y) acting on PT phi_n
    std::vector<cplx> pt(v.size()), cpt(v.size(), 0.0);
    for (std::size_t j = 0; j < v.size(); ++j) pt[j] = std::conj(v[g.mirror[j]]);
    for (int m = 0; m < reached; ++m) {
      const auto& u = pairs[m].values;
      cplx dot = 0.0;
      for (std::size_t j = 0; j < g.size(); ++j) dot += g.w[j] * u[j] * pt[j];
      for (std::size_t j = 0; j < g.size(); ++j) cpt[j] += u[j] * dot;
    }
    term[n] = mollify(cpt, x) * mollify(v, y);
  }
  double target = mollified_delta(x, y, sigma);
  std::vector<CompletenessPoint> out;
  for (int lv : levels) {
    CompletenessPoint p;
    p.levels = lv;
    p.computed = lv <= reached;
    p.max_term = 0.0;
    if (!p.computed) {
      p.mollified_sum = p.error = std::numeric_limits<double>::quiet_NaN();
    } else {
      cplx s = 0.0;
      for (int n = 0; n < lv; ++n) {
        s += term[n];
        p.max_term = std::max(p.max_term, std::abs(term[n]));
      }
      p.mollified_sum = s.real();
      p.error = std::abs(s - target);
    }
    p.reached = reached;
    out.push_back(p);
  }
  return out;
}

}  // namespace ptc
