#include "ptc/suites.hpp"

#include "ptc/greens.hpp"
#include "ptc/hermite_series.hpp"
#include "ptc/kernel.hpp"
#include "ptc/quadrature.hpp"
#include "ptc/quartic_nonpert.hpp"
#include "ptc/special_functions.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ptc {

std::string to_string(Profile p) { return p == Profile::Quick ? "quick" : "full"; }

Profile parse_profile(const std::string& s) {
  if (s == "quick") return Profile::Quick;
  if (s == "full") return Profile::Full;
  throw std::invalid_argument("unknown profile '" + s + "' (quick|full)");
}

std::pair<mpz_class, mpz_class> square_free_split(const mpz_class& k) {
  if (sgn(k) <= 0) throw std::invalid_argument("radicand must be positive");
  mpz_class rest = k, a = 1, b = 1;
  for (mpz_class p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) a *= p;
    if (e % 2) b *= p;
  }
  b *= rest;
  return {a, b};
}

void SurdSum::add(const Scalar& c, const mpz_class& radicand) {
  if (c.is_zero()) return;
  auto [a, b] = square_free_split(radicand);
  Scalar v = c * Rational(a);
  auto it = terms_.find(b);
  if (it == terms_.end()) {
    terms_.emplace(b, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) terms_.erase(it);
}

void SurdSum::add_inverse_sqrt(const Scalar& c, const mpz_class& k) {
  // 1/sqrt(a^2 b) = sqrt(b) / (a b)
  auto [a, b] = square_free_split(k);
  add(c * Rational(mpz_class(1), a * b), b);
}

bool SurdSum::is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1); }

Scalar SurdSum::rational_part() const {
  auto it = terms_.find(1);
  return it == terms_.end() ? Scalar() : it->second;
}

std::string SurdSum::text() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [r, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + to_text(c) + ")";
    if (r != 1) out += " sqrt(" + r.get_str() + ")";
  }
  return out;
}

std::vector<Scalar> random_grid_coefficients(std::uint64_t seed, int trial, int levels) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> d(-4, 4);
  std::vector<Scalar> c;
  for (int n = 0; n < levels; ++n) {
    int re = d(rng), im = d(rng);
    c.emplace_back(Rational(re, 4), Rational(im, 4));
  }
  return c;
}

namespace {

mpz_class two_pow_factorial(int n) {
  mpz_class v = 1;
  for (int k = 1; k <= n; ++k) v *= 2 * k;
  return v;
}

std::vector<std::complex<double>> to_complex(const std::vector<Scalar>& c) {
  std::vector<std::complex<double>> out;
  for (const auto& s : c) out.push_back(s.to_complex());
  return out;
}

Rational norm_squared(const std::vector<Scalar>& c) {
  Rational s = 0;
  for (const auto& v : c) s += v.re * v.re + v.im * v.im;
  return s;
}

// exact equality of <f|f> with sum |c_n|^2 at every stored power of eps
bool cpt_exact(const std::vector<SurdSum>& s, const Rational& want) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    SurdSum expect;
    if (k == 0) expect.add(Scalar(want));
    if (!(s[k] == expect)) return false;
  }
  return true;
}

std::string surd_series_text(const std::vector<SurdSum>& s) {
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += "; ";
    out += "eps^" + std::to_string(k) + ": " + s[k].text();
  }
  return out;
}

const char* kCptAnchor = "<f|f> = int [CPT f](x) f(x) dx = sum_n |c_n|^2";

ContourSpec default_contour(Model model, double eps) {
  return model == Model::Cubic ? ContourSpec::cubic() : ContourSpec::quartic(eps);
}

std::string label(const std::vector<Scalar>& c) {
  std::string out;
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (c[n].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_text(c[n]) + ") phi_" + std::to_string(n);
  }
  return out;
}

}  // namespace

CptGram::CptGram(const SymbolicTable& table, int levels_) : levels(levels_) {
  if (levels < 1) throw std::invalid_argument("need at least one level");
  DeltaKernel c = spectral_kernel(table, SpectralWeight::C, table.order());
  std::vector<HermiteEpsSeries> pay, cpt;
  for (int n = 0; n < levels; ++n) {
    pay.push_back(instantiate(table, n).payload());
    // T conjugates the coefficients (eps is real), P reflects x, then C acts
    cpt.push_back(apply_kernel(c, pay.back().map([](const HermiteSeries& h) { return pt_conjugate(h); })));
  }
  r.assign(levels, std::vector<ScalarSeries>(levels, ScalarSeries(0)));
  for (int m = 0; m < levels; ++m)
    for (int n = 0; n < levels; ++n) r[m][n] = convolve(cpt[m], pay[n], gaussian_pairing);
}

std::vector<SurdSum> CptGram::norm(const std::vector<Scalar>& c) const {
  if (static_cast<int>(c.size()) > levels) throw std::invalid_argument("more coefficients than levels");
  int order = r[0][0].order();
  std::vector<SurdSum> out(static_cast<std::size_t>(order) + 1);
  for (std::size_t m = 0; m < c.size(); ++m)
    for (std::size_t n = 0; n < c.size(); ++n) {
      if (c[m].is_zero() || c[n].is_zero()) continue;
      // CPT is antilinear: the coefficient of phi_m enters conjugated
      Scalar cc = c[m].conj() * c[n];
      mpz_class k = two_pow_factorial(static_cast<int>(m)) * two_pow_factorial(static_cast<int>(n));
      for (int e = 0; e <= order; ++e) out[e].add_inverse_sqrt(cc * r[m][n][e], k);
    }
  return out;
}

std::complex<double> cpt_norm_numeric(const std::vector<Eigenpair>& pairs, const std::vector<std::complex<double>>& c) {
  if (pairs.empty() || c.size() > pairs.size()) throw std::invalid_argument("more coefficients than eigenpairs");
  const ContourGrid& g = pairs[0].grid;
  std::vector<std::complex<double>> f(g.size(), 0.0);
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (pairs[n].grid.x != g.x) throw std::invalid_argument("eigenpairs live on different grids");
    for (std::size_t j = 0; j < g.size(); ++j) f[j] += c[n] * pairs[n].values[j];
  }
  std::vector<std::complex<double>> ptf(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (g.mirror[j] < 0) throw std::invalid_argument("contour grid is not PT symmetric");
    ptf[j] = std::conj(f[g.mirror[j]]);
  }
  // int [C PT f] f = sum_m (int phi_m PT f)(int phi_m f)
  std::complex<double> acc = 0.0;
  for (const auto& p : pairs) {
    std::complex<double> a = 0.0, b = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      a += g.w[j] * p.values[j] * ptf[j];
      b += g.w[j] * p.values[j] * f[j];
    }
    acc += a * b;
  }
  return acc;
}

VerificationReport cpt_norm_suite(Model model, double eps, int levels, int trials, std::uint64_t seed,
                                  const CptNormOptions& opt) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (levels < 3) throw std::invalid_argument("need at least three levels");
  VerificationReport rep;
  rep.environment.seed = seed;
  const std::string ctx = to_string(model) + " levels=" + std::to_string(levels);
  std::vector<std::vector<Scalar>> examples(3, std::vector<Scalar>(levels));
  examples[0][0] = Scalar(1);
  examples[1][1] = Scalar(1);
  examples[2][0] = Scalar(3);
  examples[2][2] = Scalar(0, 4);
  const char* names[3] = {"phi0", "phi1", "3phi0_4iphi2"};

  if (opt.symbolic) {
    const SymbolicTable& table = opt.table ? *opt.table : symbolic_table(model);
    CptGram gram(table, levels);
    const std::string orders = "through eps^" + std::to_string(table.order());
    for (int n = 0; n < levels; ++n) {
      std::vector<Scalar> c(levels);
      c[n] = Scalar(1);
      auto s = gram.norm(c);
      rep.pass_fail("symbolic_norm_n" + std::to_string(n), "<phi_n|phi_n> = 1 exactly " + orders, kCptAnchor, "1",
                    surd_series_text(s), 0.0, cpt_exact(s, 1), ctx);
    }
    for (int k = 0; k < 3; ++k) {
      Rational want = norm_squared(examples[k]);
      auto s = gram.norm(examples[k]);
      rep.pass_fail("symbolic_" + std::string(names[k]), "<f|f> for f = " + label(examples[k]), kCptAnchor,
                    rational_text(want), surd_series_text(s), 0.0, cpt_exact(s, want), ctx);
    }
    int exact = 0;
    std::string first_bad;
    for (int t = 0; t < trials; ++t) {
      auto c = random_grid_coefficients(seed, t, levels);
      auto s = gram.norm(c);
      if (cpt_exact(s, norm_squared(c)))
        ++exact;
      else if (first_bad.empty())
        first_bad = "trial " + std::to_string(t) + ": " + surd_series_text(s);
    }
    rep.pass_fail("symbolic_random_trials", "<f|f> = sum |c_n|^2 exactly for random rational-grid coefficients",
                  kCptAnchor, std::to_string(trials) + "/" + std::to_string(trials),
                  std::to_string(exact) + "/" + std::to_string(trials), 0.0, exact == trials,
                  first_bad.empty() ? ctx + " seed=" + std::to_string(seed) : first_bad);
  }

  if (opt.numeric) {
    std::vector<Eigenpair> pairs;
    try {
      pairs = solve_shooting_levels(model, eps, levels, default_contour(model, eps));
    } catch (const std::exception& e) {
      rep.pass_fail("numeric_solve", "solver eigenpairs for the numeric suite", "plumbing", "converged", e.what(), 0.0,
                    false);
      return rep;
    }
    const double tol = 1e-6;
    const std::string nctx = ctx + " eps=" + fmt(eps);
    for (int k = 0; k < 3; ++k) {
      double want = norm_squared(examples[k]).get_d();
      auto v = cpt_norm_numeric(pairs, to_complex(examples[k]));
      double err = std::abs(v - want);
      rep.pass_fail("numeric_" + std::string(names[k]), "<f|f> for f = " + label(examples[k]) + ", solver eigenfunctions",
                    kCptAnchor, fmt(want), fmt(v.real()) + "," + fmt(v.imag()), tol, err <= tol * want, nctx);
    }
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
      auto c = random_grid_coefficients(seed, t, levels);
      double want = norm_squared(c).get_d();
      if (want == 0) continue;
      worst = std::max(worst, std::abs(cpt_norm_numeric(pairs, to_complex(c)) - want) / want);
    }
    rep.pass_fail("numeric_random_trials", "max relative deviation of <f|f> from sum |c_n|^2 over random trials",
                  kCptAnchor, "<= " + fmt(tol), fmt(worst), tol, worst <= tol,
                  nctx + " trials=" + std::to_string(trials) + " seed=" + std::to_string(seed));
  }
  return rep;
}

VerificationReport cpt_completeness_check(Model model, double eps, int levels) {
  VerificationReport rep;
  const char* anchor = "sum_n [CPT phi_n](x) phi_n(y) = delta(x - y)";
  const double x = 0.4, y = 0.1, sigma = 0.25, tol = 1e-4;
  if (levels < 4) throw std::invalid_argument("need at least four levels");
  const std::vector<int> counts{levels / 4, levels / 2, levels};
  const std::string tag = to_string(model) + "_eps" + fmt(eps) + "_";
  if (model == Model::Quartic) {
    rep.skip(tag + "completeness", "mollified CPT completeness", anchor,
             "quartic eigenfunctions grow on the real axis; the mollified real-axis form does not apply");
    return rep;
  }
  std::vector<CompletenessPoint> pts;
  if (eps == 0.0) {
    // C P T phi_n = phi_n for the oscillator: the sum reduces to the Hermite completeness relation
    auto mx = mollified_oscillator_functions(x, sigma, levels);
    auto my = mollified_oscillator_functions(y, sigma, levels);
    double target = mollified_delta(x, y, sigma);
    for (int n : counts) {
      CompletenessPoint p;
      p.levels = n;
      p.computed = true;
      p.reached = levels;
      for (int m = 0; m < n; ++m) p.mollified_sum += mx[m] * my[m];
      p.error = std::fabs(p.mollified_sum - target);
      pts.push_back(p);
    }
  } else {
    pts = completeness_series(eps, counts, x, y, sigma, true);
  }
  const std::string ctx = "x=0.4 y=0.1 sigma=0.25 eps=" + fmt(eps);
  const auto& last = pts.back();
  rep.pass_fail(tag + "deviation_N" + std::to_string(levels), "mollified CPT completeness deviation", anchor,
                "<= " + fmt(tol), last.computed ? fmt(last.error) : "not computed", tol,
                last.computed && last.error <= tol,
                last.computed ? ctx : ctx + "; solver ladder reached " + std::to_string(last.reached) + " levels");
  bool decreasing = true;
  std::string seq;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    seq += (i ? ", " : "") + std::to_string(pts[i].levels) + ":" + (pts[i].computed ? fmt(pts[i].error) : "n/a");
    if (!pts[i].computed || (i && !(pts[i].error < pts[i - 1].error))) decreasing = false;
  }
  rep.pass_fail(tag + "decreasing", "deviation strictly decreases with N", anchor, "strictly decreasing", seq, 0.0,
                decreasing, ctx);
  return rep;
}

// ---- module suites ----

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1e-300}); }

const SymbolicTable& cubic_of(const SuiteOptions& opt) {
  return opt.cubic_table ? *opt.cubic_table : cubic_symbolic_table();
}

template <class F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// slope of log|d| against log eps
double scaling_exponent(const std::vector<double>& eps, const std::vector<double>& d) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0, k = static_cast<double>(eps.size());
  for (std::size_t i = 0; i < eps.size(); ++i) {
    double u = std::log(eps[i]), v = std::log(std::max(d[i], 1e-300));
    sx += u;
    sy += v;
    sxx += u * u;
    sxy += u * v;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace

VerificationReport special_suite(const SuiteOptions&) {
  VerificationReport rep;
  const char* plumb = "plumbing";
  {
    double worst = 0;
    for (double z : {0.5, 2.0, 4.0}) {
      auto s = parabolic_d_half_branch(z, DHalfBranch::Series), i = parabolic_d_half_branch(z, DHalfBranch::Integral);
      worst = std::max({worst, rel(s.value, i.value), rel(s.derivative, i.derivative)});
    }
    rep.numeric("d_half_series_integral", "D_{-1/2} series and integral branches overlap", plumb, 0.0, worst, 1e-9);
  }
  {
    double worst = 0;
    for (double z : {9.0, 11.0}) {
      auto i = parabolic_d_half_branch(z, DHalfBranch::Integral), a = parabolic_d_half_branch(z, DHalfBranch::Asymptotic);
      worst = std::max({worst, rel(i.value, a.value), rel(i.derivative, a.derivative)});
    }
    rep.numeric("d_half_integral_asymptotic", "D_{-1/2} integral and asymptotic branches overlap", plumb, 0.0, worst,
                1e-9);
  }
  {
    double worst = 0;
    for (double z : {-3.0, -0.7, 0.0, 1.3, 4.0}) worst = std::max(worst, rel(parabolic_d_half(z).value, parabolic_d_half_direct(z).value));
    rep.numeric("d_half_table", "tabulated D_{-1/2} against the direct evaluator", plumb, 0.0, worst, 1e-11);
  }
  {
    double worst = 0;
    for (int n = 0; n <= 5; ++n)
      for (double z : {-1.5, 0.4, 2.2}) {
        // D_n(z) = 2^{-n/2} e^{-z^2/4} H_n(z/sqrt 2)
        double h = std::pow(2.0, -0.5 * n) * std::exp(-z * z / 4) * std::hermite(n, z / M_SQRT2);
        worst = std::max(worst, std::fabs(parabolic_d_int(n, z).value - h));
      }
    rep.numeric("d_int_hermite", "D_n against Gaussian-weighted Hermite polynomials",
                "D_n(z) = 2^{-n/2} e^{-z^2/4} H_n(z/sqrt 2)", 0.0, worst, 1e-13);
  }
  {
    double worst = 0;
    for (int n = 0; n <= 3; ++n) {
      auto w = [n](double z) {
        auto d = parabolic_d_int(n, z);
        auto c = c_second_solution(n, z);
        return d.value * c.derivative - d.derivative * c.value;
      };
      worst = std::max(worst, rel(w(0.3), w(2.1)));
    }
    rep.numeric("c_wronskian", "Wronskian of D_n and C_n is constant", "C_n is a second solution of the D_n equation",
                0.0, worst, 1e-8);
  }
  {
    double worst = 0;
    for (int n = 0; n <= 2; ++n)
      for (double z : {0.5, 1.5}) {
        double k = c_second_solution(n, z).value;
        worst = std::max({worst, rel(c_second_solution_ode(n, z), k), rel(c_second_solution_integral(n, z), k)});
      }
    rep.numeric("c_three_paths", "C_n by Kummer series, ODE and sine transform", plumb, 0.0, worst, 1e-9);
  }
  {
    double worst = 0;
    for (int n = 0; n <= 3; ++n) {
      double s = n % 2 ? 1.0 : -1.0;
      worst = std::max(worst, rel(c_second_solution(n, -0.9).value, s * c_second_solution(n, 0.9).value));
    }
    rep.numeric("c_parity", "C_n(-z) = (-1)^{n+1} C_n(z)", plumb, 0.0, worst, 1e-13);
  }
  {
    double worst = 0;
    for (double r : {-6.0, -1.0, 0.0, 2.5, 8.0}) {
      auto a = airy_pair(r);
      worst = std::max(worst, std::fabs(a.ai * a.bip - a.aip * a.bi - 1 / M_PI));
    }
    rep.numeric("airy_wronskian", "Ai Bi' - Ai' Bi = 1/pi", plumb, 0.0, worst, 1e-9);
  }
  return rep;
}

VerificationReport perturbation_suite(const SuiteOptions& opt) {
  VerificationReport rep;
  const SymbolicTable& cubic = cubic_of(opt);
  const char* anchor_pt = "(phi_n, phi_n) = (-1)^n exactly through the stored order";
  {
    // x H_n = H_{n+1}/2 + n H_{n-1}
    bool ok = true;
    for (int n = 1; n <= 6; ++n)
      ok = ok && multiply_by_x(HermiteSeries::basis(n)) ==
                     HermiteSeries::basis(n + 1, Rational(1, 2)) + HermiteSeries::basis(n - 1, Rational(n));
    rep.pass_fail("hermite_recurrence", "x H_n = H_{n+1}/2 + n H_{n-1}", "plumbing", "exact", ok ? "exact" : "mismatch",
                  0.0, ok);
    HermiteSeries f = HermiteSeries::basis(3, Scalar(Rational(2, 7), Rational(-1, 3))) + HermiteSeries::basis(0, Scalar(5));
    bool rt = hermite_from_text(to_text(f)) == f;
    rep.pass_fail("hermite_text_roundtrip", "text serialization round trip", "plumbing", "equal", rt ? "equal" : "differs",
                  0.0, rt);
  }
  const int nmax = opt.profile == Profile::Full ? 10 : 6;
  for (Model m : {Model::Cubic, Model::Quartic}) {
    const SymbolicTable& table = m == Model::Cubic ? cubic : quartic_symbolic_table();
    const std::string name = to_string(m);
    std::string bad;
    for (int n = 0; n <= nmax; ++n) {
      auto d = derive_wavefunction(m, n, table.order());
      if (!(d.wavefunction == instantiate(table, n)) || !(d.energy == energy_series(table, n)))
        bad += (bad.empty() ? "" : ",") + std::to_string(n);
    }
    rep.pass_fail(name + "_recursion_vs_table",
                  "Rayleigh-Schroedinger recursion reproduces the tabulated expansion for n <= " + std::to_string(nmax),
                  "phi_n and E_n expansion tables", "identical", bad.empty() ? "identical" : "differs at n=" + bad, 0.0,
                  bad.empty());
    for (int n = 0; n <= 5; ++n) {
      auto norm = pt_norm(instantiate(table, n));
      bool ok = norm[0] == Scalar(n % 2 ? -1 : 1);
      std::string txt = to_text(norm[0]);
      for (int k = 1; k <= norm.order(); ++k) {
        ok = ok && norm[k].is_zero();
        txt += "; " + to_text(norm[k]);
      }
      rep.pass_fail(name + "_pt_norm_n" + std::to_string(n), "PT norm of phi_" + std::to_string(n) + " is exact",
                    anchor_pt, n % 2 ? "-1" : "1", txt, 0.0, ok);
    }
    bool ortho = true;
    for (int a = 0; a <= 5 && ortho; ++a)
      for (int b = a + 1; b <= 5 && ortho; ++b) {
        auto o = pt_overlap_rational(instantiate(table, a), instantiate(table, b));
        for (int k = 0; k <= o.order(); ++k) ortho = ortho && o[k].is_zero();
      }
    rep.pass_fail(name + "_pt_orthogonality", "(phi_m, phi_n) = 0 exactly for m != n <= 5",
                  "(phi_m, phi_n) = (-1)^n delta_mn", "0", ortho ? "0" : "nonzero", 0.0, ortho);
    bool resid = true;
    for (int n = 0; n <= 5; ++n) {
      auto r = schrodinger_residual(instantiate(table, n), energy_series(table, n));
      for (int k = 0; k <= r.order(); ++k) resid = resid && r[k].is_zero();
    }
    rep.pass_fail(name + "_schrodinger_residual", "(H - E_n) phi_n = 0 order by order for n <= 5",
                  "H phi_n = E_n phi_n", "0", resid ? "0" : "nonzero", 0.0, resid);
  }
  {
    auto e = energy_series(cubic, 0);
    bool ok = e[0] == Scalar(Rational(1, 2)) && e[1].is_zero() && e[2] == Scalar(Rational(11, 8)) && e[3].is_zero();
    rep.pass_fail("cubic_ground_energy", "E_0 = 1/2 + 11/8 eps^2 + O(eps^4)", "E_n = n + 1/2 + (30n^2+30n+11)/8 eps^2",
                  "1/2, 0, 11/8, 0",
                  to_text(e[0]) + ", " + to_text(e[1]) + ", " + to_text(e[2]) + ", " + to_text(e[3]), 0.0, ok);
  }
  return rep;
}

VerificationReport kernel_suite(const SuiteOptions& opt) {
  VerificationReport rep;
  const SymbolicTable& cubic = cubic_of(opt);
  DeltaKernel c;
  double secs = seconds([&] { c = spectral_kernel(cubic, SpectralWeight::C, 3); });
  const char* anchor_c = "C(x,y) = sum_n phi_n(x) phi_n(y)";
  bool same = c == reference_c_kernel();
  rep.pass_fail("c_closed_form", "C kernel from the eigenfunction sum equals the closed form term for term", anchor_c,
                "closed form", same ? "identical" : pretty(c), 0.0, same);
  rep.pass_fail("c_runtime", "third-order C kernel runtime", "plumbing", "<= 60 s", fmt(secs) + " s", 60.0, secs <= 60.0);
  rep.merge(kernel_compose_check(c, 12), "c_squared");
  rep.merge(kernel_compose_check(exponentiated_c(4), 12, "expC"), "exp_c4_squared");
  for (int n = 0; n <= 8; ++n) rep.merge(kernel_eigencheck(c, n, cubic));
  rep.merge(cp_pc_check(c), "cp_pc");

  auto zero_orders = [&](const std::string& id, const std::string& desc, const char* anchor, const DeltaKernel& k,
                         int from) {
    std::string nz;
    for (int e = from; e <= k.order(); ++e)
      if (!k.at(e).is_zero()) nz += (nz.empty() ? "" : ",") + std::to_string(e);
    rep.pass_fail(id, desc, anchor, "0", nz.empty() ? "0" : "nonzero at eps^" + nz, 0.0, nz.empty());
  };
  auto p = spectral_kernel(cubic, SpectralWeight::Parity, 3);
  zero_orders("parity_sum", "parity sum has no eps^1..eps^3 terms", "P(x,y) = sum (-1)^n phi_n(x) phi_n(-y)", p, 1);
  auto id = spectral_kernel(cubic, SpectralWeight::Identity, 3);
  zero_orders("identity_sum", "completeness sum has no eps^1..eps^3 terms",
              "sum (-1)^n phi_n(x) phi_n(y) = delta(x - y)", id, 1);
  auto h = spectral_kernel(cubic, SpectralWeight::Hamiltonian, 3);
  zero_orders("hamiltonian_sum", "Hamiltonian sum has no eps^2, eps^3 terms",
              "H(x,y) = sum (-1)^n E_n phi_n(x) phi_n(y)", h, 2);
  bool hk = h == cubic_hamiltonian_kernel();
  rep.pass_fail("hamiltonian_kernel", "Hamiltonian sum equals the differential operator kernel",
                "H(x,y) = sum (-1)^n E_n phi_n(x) phi_n(y)", "H delta(x-y)", hk ? "identical" : pretty(h), 0.0, hk);
  zero_orders("quartic_c_first_order", "quartic C sum has no eps^1 term", "C_quartic = P + O(e^{-1/(3 eps)})",
              perturbative_c_quartic(), 1);

  const int trials = 100;
  CptNormOptions sym;
  sym.numeric = false;
  sym.table = &cubic;
  rep.merge(cpt_norm_suite(Model::Cubic, 0.05, 6, trials, opt.seed, sym), "cpt_cubic");
  sym.table = nullptr;
  rep.merge(cpt_norm_suite(Model::Quartic, 0.05, 4, opt.profile == Profile::Full ? trials : 20, opt.seed, sym),
            "cpt_quartic");
  return rep;
}

VerificationReport solver_suite(const SuiteOptions& opt) {
  VerificationReport rep;
  const char* anchor_spec = "H phi_n = E_n phi_n with real E_n";
  {
    auto matrix = solve_oscillator_basis(0.05, 200, 6);
    double worst = 0;
    for (int n = 0; n <= 5; ++n)
      worst = std::max(worst, std::fabs(solve_shooting(Model::Cubic, 0.05, n).energy - matrix[n].energy));
    rep.numeric("cubic_shooting_vs_matrix", "shooting vs oscillator-basis energies, n <= 5, eps = 0.05", anchor_spec,
                0.0, worst, 1e-8);
  }
  {
    const std::vector<double> eps{0.01, 0.02, 0.04};
    double worst = std::numeric_limits<double>::infinity();
    std::string detail;
    for (int n = 0; n <= 3; ++n) {
      std::vector<double> d;
      for (double e : eps)
        d.push_back(std::fabs(solve_shooting(Model::Cubic, e, n).energy - evaluate(cubic_energy(n), e).real()));
      double s = scaling_exponent(eps, d);
      detail += (n ? ", " : "") + fmt(s);
      worst = std::min(worst, s);
    }
    rep.pass_fail("cubic_energy_scaling", "|E_num - E_pert| scaling exponent over eps = 0.01, 0.02, 0.04, n <= 3",
                  "E_n = n + 1/2 + (30n^2+30n+11)/8 eps^2 + O(eps^4)", ">= 3.5", detail, 3.5, worst >= 3.5);
  }
  {
    const std::vector<double> eps{0.005, 0.01, 0.02};
    double worst = std::numeric_limits<double>::infinity(), im = 0;
    std::string detail;
    for (int n = 0; n <= 3; ++n) {
      std::vector<double> d;
      for (double e : eps) {
        auto p = solve_shooting(Model::Quartic, e, n);
        im = std::max(im, std::fabs(p.im_energy));
        d.push_back(std::fabs(p.energy - (n + 0.5 - 0.75 * (2 * n * n + 2 * n + 1) * e)));
      }
      double s = scaling_exponent(eps, d);
      detail += (n ? ", " : "") + fmt(s);
      worst = std::min(worst, s);
    }
    rep.pass_fail("quartic_energy_scaling", "|E_num - E_first_order| scaling exponent over eps = 0.005, 0.01, 0.02, n <= 3",
                  "E_n = n + 1/2 - 3/4 (2n^2+2n+1) eps + O(eps^2)", ">= 1.8", detail, 1.8, worst >= 1.8);
    rep.numeric("quartic_im_energy", "largest |Im E_n| in the quartic scaling solves", anchor_spec, 0.0, im, 1e-8);
  }
  auto ortho = [&](const std::string& id, Model m, double eps, int count, double tol) {
    auto pairs = solve_shooting_levels(m, eps, count, default_contour(m, eps));
    auto g = orthogonality_matrix(pairs);
    double worst = 0;
    for (int a = 0; a < count; ++a)
      for (int b = 0; b < count; ++b)
        worst = std::max(worst, std::abs(g(a, b) - (a == b ? (b % 2 ? -1.0 : 1.0) : 0.0)));
    rep.numeric(id, "PT inner-product matrix vs diag((-1)^n), " + to_string(m) + " eps=" + fmt(eps),
                "(phi_m, phi_n) = (-1)^n delta_mn", 0.0, worst, tol);
  };
  ortho("cubic_pt_orthonormality", Model::Cubic, 0.05, 6, 1e-6);
  ortho("quartic_pt_orthonormality", Model::Quartic, 0.05, 4, 1e-5);

  CptNormOptions num;
  num.symbolic = false;
  rep.merge(cpt_norm_suite(Model::Cubic, 0.05, 6, 100, opt.seed, num), "cpt_cubic");
  rep.merge(cpt_norm_suite(Model::Quartic, 0.05, 4, opt.profile == Profile::Full ? 100 : 20, opt.seed, num),
            "cpt_quartic");

  rep.merge(cpt_completeness_check(Model::Cubic, 0.0, 80), "completeness");
  rep.merge(cpt_completeness_check(Model::Cubic, 1e-4, 80), "completeness");
  rep.merge(cpt_completeness_check(Model::Quartic, 0.05, 80), "completeness");
  if (opt.profile == Profile::Full) rep.merge(cpt_completeness_check(Model::Cubic, 0.05, 80), "completeness");
  return rep;
}

VerificationReport greens_suite(const SuiteOptions& opt) {
  VerificationReport rep;
  const char* anchor = "(-1/2 d_x^2 + x^2/2) G_k = x^3 G_{k-1}, G_{-1} = delta(x - y)";
  const int pts = opt.profile == Profile::Full ? 21 : 10;
  const double tols[4] = {1e-6, 1e-5, 1e-4, 1e-3};
  auto grid_residual = [&](int k, bool derived) {
    double worst = 0;
    for (int i = 0; i < pts; ++i)
      for (int j = 0; j < pts; ++j) {
        double x = -2 + 4.0 * i / (pts - 1), y = -2 + 4.0 * j / (pts - 1);
        if (std::fabs(x - y) < 0.1) continue;
        worst = std::max(worst, std::fabs(greens_residual(k, x, y, derived)));
      }
    return worst;
  };
  const std::string grid = std::to_string(pts) + "x" + std::to_string(pts) + " grid on [-2,2]^2, |x-y| >= 0.1";
  for (int k = 0; k <= 3; ++k)
    rep.numeric("residual_g" + std::to_string(k), "max off-diagonal ODE residual of G_" + std::to_string(k) + ", " + grid,
                anchor, 0.0, grid_residual(k, false), tols[k]);
  rep.numeric("residual_g3_rederived", "max off-diagonal ODE residual of the re-derived G_3, " + grid, anchor, 0.0,
              grid_residual(3, true), tols[3]);
  {
    double worst = 0;
    for (double y : {-1.2, 0.3, 1.7}) worst = std::max(worst, std::fabs(greens_derivative_jump(0, y) + 2));
    rep.numeric("g0_jump", "d_x G_0 jumps by -2 across x = y", "G_0 jump condition", 0.0, worst, 1e-6);
  }
  {
    double worst = 0;
    for (int k = 1; k <= 2; ++k)
      for (double y : {-0.8, 0.3}) worst = std::max(worst, std::fabs(greens_derivative_jump(k, y)));
    rep.numeric("g12_no_jump", "higher orders have continuous x-derivatives across x = y", "G_k jump conditions", 0.0,
                worst, 1e-9);
  }
  {
    bool ok = true;
    for (int k = 1; k <= 2; ++k) ok = ok && (oscillator_x(greens_expr(k)) - greens_expr(k - 1).times(monomial(1, 3, 0))).is_zero();
    ok = ok && (oscillator_x(g3_derived_expr()) - g2_expr().times(monomial(1, 3, 0))).is_zero();
    rep.pass_fail("symbolic_hierarchy", "exact symbolic cancellation for G_1, G_2 and the re-derived G_3", anchor, "0",
                  ok ? "0" : "nonzero", 0.0, ok);
  }
  rep.merge(greens_spectral_check(0.05, 60, 0.6, -0.2), "spectral_a");
  if (opt.profile == Profile::Full) rep.merge(greens_spectral_check(0.05, 60, -1.1, 0.4), "spectral_b");
  rep.merge(greens_spectral_check(0.0, 60, 3.0, -3.0), "spectral_far");
  return rep;
}

VerificationReport quartic_suite(const SuiteOptions& opt) {
  VerificationReport rep;
  const char* anchor = "C = P + nonperturbative correction as a sum over n and as a double integral";
  for (auto [x, y] : {std::pair{0.0, 0.0}, {0.5, -0.3}, {1.0, 1.0}}) {
    auto s = nonpert_c_sum(x, y, 0.2, 60);
    auto i = nonpert_c_integral(x, y, 0.2);
    double scale = std::max({std::abs(s.value), std::abs(i.value), 1e-10 * i.magnitude});
    // both vanish identically at (0,0): exact agreement
    double diff = std::abs(s.value - i.value);
    double r = diff == 0 ? 0.0 : diff / scale;
    rep.pass_fail("sum_vs_integral_" + fmt(x) + "_" + fmt(y), "sum and integral of the correction, eps = 0.2", anchor,
                  "rel <= 1e-3", "sum=" + fmt(s.value.imag()) + "i integral=" + fmt(i.value.imag()) + "i rel=" + fmt(r),
                  1e-3, r <= 1e-3);
  }
  {
    auto a = nonpert_c_sum(0.7, -0.2, 0.2), b = nonpert_c_sum(-0.2, 0.7, 0.2);
    rep.numeric("correction_symmetric", "correction is symmetric in x and y", anchor, 0.0,
                std::abs(a.value - b.value) / std::abs(a.value), 1e-12);
    rep.numeric("correction_imaginary", "correction is purely imaginary", anchor, 0.0,
                std::fabs(a.value.real()) / std::abs(a.value), 1e-12);
  }
  const std::vector<double> eps{0.1, 0.125, 0.15, 0.2};
  {
    double s = nonpert_log_slope(0.0, 0.0, eps);
    rep.pass_fail("log_slope_origin", "slope of log|correction(0,0)| against 1/eps", "correction ~ e^{-1/(3 eps)}",
                  "-1/3 within 10%", fmt(s), 1.0 / 30, std::fabs(s + 1.0 / 3) <= 1.0 / 30,
                  std::isnan(s) ? "correction vanishes identically at (0,0)" : "");
    double g = nonpert_log_slope(0.5, -0.3, eps);
    rep.skip("log_slope_generic", "slope of log|correction(0.5,-0.3)| against 1/eps", "correction ~ e^{-1/(3 eps)}",
             "diagnostic: " + fmt(g));
  }
  {
    auto q = perturbative_quartic_sum(0.3, 0.2, 0.05, 80, 0.25);
    double d = std::fabs(q.mollified_sum - q.mollified_target);
    rep.numeric("perturbative_c_parity", "mollified perturbative C sum vs delta(x + y), eps = 0.05",
                "C_quartic = P + O(e^{-1/(3 eps)})", 0.0, d, std::exp(-1 / (3 * 0.05)));
  }
  {
    auto b0 = b_coefficient(0, 0.1);
    double closed = std::pow(M_PI, 0.25) * std::sqrt(4 / 0.1) * std::exp(-1 / 0.3) / M_SQRT2;
    rep.numeric("b0_closed_form", "|b_0| from the log form", "b_n = -i^n pi^{1/4} (2 n!)^{-1/2} (4/eps)^{n+1/2} e^{-1/(3 eps)}",
                closed, std::abs(b0.value()), 1e-14 * closed);
  }
  for (int n = 0; n <= 1; ++n) {
    auto v = validate_against_solver(n, 0.1);
    rep.merge(v, "solver_n" + std::to_string(n));
  }
  {
    double far = nonpert_ratio(0, 0.12, 0.5), near = nonpert_ratio(0, opt.profile == Profile::Full ? 0.05 : 0.06, 0.5);
    bool ok = std::fabs(near - 1) < std::fabs(far - 1);
    rep.pass_fail("solver_ratio_trend", "ratio moves toward 1 as eps decreases (n = 0, x = 0.5)",
                  "phi_n^nonpert(x) ~ i b_n C_n(x sqrt 2)", "closer to 1", "eps=0.12: " + fmt(far) + ", smaller eps: " + fmt(near),
                  0.0, ok);
  }
  return rep;
}

SymbolicTable mutated_cubic_table() {
  SymbolicTable bad = cubic_symbolic_table();
  bad.norm[2] = NPoly{Scalar(1), Scalar(2)} * NPoly{Scalar(Rational(86, 144)), Scalar(Rational(82, 144)),
                                                    Scalar(Rational(82, 144))};
  return bad;
}

VerificationReport run_all(const SuiteOptions& opt) {
  VerificationReport rep;
  rep.environment.seed = opt.seed;
  rep.environment.profile = to_string(opt.profile);
  auto run = [&](const std::string& name, VerificationReport (*suite)(const SuiteOptions&)) {
    try {
      VerificationReport r;
      double secs = seconds([&] { r = suite(opt); });
      rep.merge(r, name);
      rep.skip(name + ".suite_runtime", "suite wall time", "plumbing", "diagnostic: " + fmt(secs) + " s");
    } catch (const std::exception& e) {
      rep.pass_fail(name + ".suite_error", "suite raised an exception", "plumbing", "no exception", e.what(), 0.0, false);
    }
  };
  run("special_functions", special_suite);
  run("perturbation", perturbation_suite);
  run("kernel", kernel_suite);
  run("solver", solver_suite);
  run("greens", greens_suite);
  run("quartic", quartic_suite);
  return rep;
}

}  // namespace ptc
