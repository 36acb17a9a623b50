#include "ptc/greens.hpp"

#include "ptc/hermite_series.hpp"
#include "ptc/perturbation.hpp"
#include "ptc/quadrature.hpp"
#include "ptc/special_functions.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace ptc {

namespace {

using B = GreensBasis;

void add_poly(BiPoly& a, const BiPoly& b, int sign = 1) {
  for (const auto& [k, c] : b) {
    auto& v = a[k];
    if (sign > 0) v += c; else v -= c;
    v.canonicalize();
    if (sgn(v) == 0) a.erase(k);
  }
}

BiPoly mul_poly(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) add_poly(out, {{{ka.first + kb.first, ka.second + kb.second}, ca * cb}});
  return out;
}

BiPoly dx_poly(const BiPoly& p) {
  BiPoly out;
  for (const auto& [k, c] : p)
    if (k.first > 0) add_poly(out, {{{k.first - 1, k.second}, c * k.first}});
  return out;
}

BiPoly swap_poly(const BiPoly& p) {
  BiPoly out;
  for (const auto& [k, c] : p) out[{k.second, k.first}] = c;
  return out;
}

double eval_poly(const BiPoly& p, double x, double y) {
  double acc = 0.0;
  for (const auto& [k, c] : p) acc += c.get_d() * std::pow(x, k.first) * std::pow(y, k.second);
  return acc;
}

B swap_basis(B b) {
  switch (b) {
    case B::DV: return B::UD;
    case B::UD: return B::DV;
    case B::Jx: return B::Jy;
    case B::Jy: return B::Jx;
    default: return b;
  }
}

}  // namespace

BiPoly monomial(const Rational& c, int i, int j) {
  BiPoly p;
  Rational v = c;
  v.canonicalize();
  if (sgn(v) != 0) p[{i, j}] = v;
  return p;
}

GreensExpr GreensExpr::basis(GreensBasis b, const Rational& c) {
  GreensExpr g;
  g.add(b, monomial(c, 0, 0));
  return g;
}

void GreensExpr::add(GreensBasis b, const BiPoly& p) {
  auto& slot = t_[b];
  add_poly(slot, p);
  if (slot.empty()) t_.erase(b);
}

GreensExpr& GreensExpr::operator+=(const GreensExpr& o) {
  for (const auto& [b, p] : o.t_) add(b, p);
  return *this;
}

GreensExpr& GreensExpr::operator-=(const GreensExpr& o) {
  for (const auto& [b, p] : o.t_) {
    BiPoly neg;
    for (const auto& [k, c] : p) neg[k] = -c;
    add(b, neg);
  }
  return *this;
}

GreensExpr GreensExpr::times(const BiPoly& p) const {
  GreensExpr out;
  for (const auto& [b, q] : t_) out.add(b, mul_poly(q, p));
  return out;
}

GreensExpr GreensExpr::times(const Rational& c) const { return times(monomial(c, 0, 0)); }

GreensExpr GreensExpr::dx() const {
  // u'' = x^2 u and d_x^2 J = x^2 J - 2 x^4 G_0
  const BiPoly x2 = monomial(1, 2, 0), m2x4 = monomial(-2, 4, 0);
  GreensExpr out;
  for (const auto& [b, p] : t_) {
    out.add(b, dx_poly(p));
    switch (b) {
      case B::UV: out.add(B::DV, p); break;
      case B::DV: out.add(B::UV, mul_poly(p, x2)); break;
      case B::UD: out.add(B::DD, p); break;
      case B::DD: out.add(B::UD, mul_poly(p, x2)); break;
      case B::J: out.add(B::Jx, p); break;
      case B::Jx:
        out.add(B::J, mul_poly(p, x2));
        out.add(B::UV, mul_poly(p, m2x4));
        break;
      case B::Jy: out.add(B::Jxy, p); break;
      case B::Jxy:
        out.add(B::Jy, mul_poly(p, x2));
        out.add(B::UD, mul_poly(p, m2x4));
        break;
    }
  }
  return out;
}

GreensExpr GreensExpr::swap_xy() const {
  GreensExpr out;
  for (const auto& [b, p] : t_) out.add(swap_basis(b), swap_poly(p));
  return out;
}

GreensExpr GreensExpr::dy() const { return swap_xy().dx().swap_xy(); }

GreensExpr ladder_l(const GreensExpr& g) {
  return g.dx().times(monomial(1, 2, 0)) + g.dy().times(monomial(1, 0, 2)) -
         g.times(monomial(1, 1, 0)) - g.times(monomial(1, 0, 1));
}

GreensExpr oscillator_x(const GreensExpr& g) {
  return g.dx().dx().times(Rational(-1, 2)) + g.times(monomial(Rational(1, 2), 2, 0));
}

GreensExpr g0_expr() { return GreensExpr::basis(B::UV); }

GreensExpr g1_expr() { return ladder_l(g0_expr()).times(Rational(-1, 3)); }

GreensExpr g2_expr() {
  return ladder_l(ladder_l(g0_expr())).times(Rational(1, 18)) + GreensExpr::basis(B::J, Rational(7, 6));
}

namespace {

BiPoly poly(std::initializer_list<std::tuple<long, long, int, int>> terms) {
  BiPoly p;
  for (auto [num, den, i, j] : terms) add_poly(p, monomial(Rational(num, den), i, j));
  return p;
}

GreensExpr third_order(const BiPoly& px, const BiPoly& qx, const Rational& jcoef) {
  GreensExpr g;
  g.add(B::DV, px);
  g.add(B::UD, swap_poly(px));
  BiPoly q = qx;
  add_poly(q, swap_poly(qx));
  g.add(B::UV, q);
  g = g.times(Rational(-1, 9));
  return g + ladder_l(GreensExpr::basis(B::J)).times(jcoef);
}

}  // namespace

GreensExpr g3_expr() {
  BiPoly px = poly({{5, 36, 8, 0}, {1, 12, 2, 6}, {56, 15, 4, 0}, {112, 5, 0, 0}});
  BiPoly qx = poly({{25, 36, 7, 0}, {-1, 12, 6, 1}, {-112, 15, 3, 0}});
  return third_order(px, qx, Rational(-7, 12));
}

GreensExpr g3_derived_expr() {
  BiPoly px = poly({{1, 18, 8, 0}, {1, 6, 2, 6}, {56, 15, 4, 0}, {112, 5, 0, 0}});
  BiPoly qx = poly({{5, 18, 7, 0}, {-1, 6, 6, 1}, {-112, 15, 3, 0}});
  return third_order(px, qx, Rational(-7, 18));
}

GreensExpr greens_expr(int order) {
  switch (order) {
    case 0: return g0_expr();
    case 1: return g1_expr();
    case 2: return g2_expr();
    case 3: return g3_expr();
    default: throw std::invalid_argument("Green's function order must be 0..3");
  }
}

namespace {

// Q(x) = D_{-1/2}(x sqrt 2) decays to the right, P(x) = Q(-x) to the left.
ValueDerivative q_factor(double x) {
  auto d = parabolic_d_half(x * M_SQRT2);
  return {d.value, M_SQRT2 * d.derivative};
}

ValueDerivative p_factor(double x) {
  auto d = parabolic_d_half(-x * M_SQRT2);
  return {d.value, -M_SQRT2 * d.derivative};
}

// Cumulative integrals on a uniform grid over [-c, c]:
//   K(s) = int_{-c}^s z^4 Q P dz,  T(s) = int_s^c z^4 Q^2 dz.
// Values between grid points add one 20-point Gauss-Legendre panel.
class JTable {
 public:
  JTable(double c, int per_unit) : c_(c) {
    if (!(c > 0) || per_unit < 1) throw std::invalid_argument("invalid quadrature spec");
    n_ = static_cast<int>(std::ceil(2 * c * per_unit));
    h_ = 2 * c / n_;
    k_.assign(n_ + 1, 0.0);
    t_.assign(n_ + 1, 0.0);
    for (int j = 0; j < n_; ++j) k_[j + 1] = k_[j] + panel_qp(node(j), node(j + 1));
    for (int j = n_; j-- > 0;) t_[j] = t_[j + 1] + panel_qq(node(j), node(j + 1));
    auto qc = q_factor(c);
    // int_c^inf z^4 Q^2 <= c^3 Q(c)^2 for Q ~ e^{-z^2/2}, plus the matching left tail of P^2
    tail_ = 2 * std::pow(c, 3) * qc.value * qc.value;
  }

  double k(double s) const {
    s = clamp(s);
    int j = index(s);
    return k_[j] + panel_qp(node(j), s);
  }
  double t(double s) const {
    s = clamp(s);
    int j = index(s);
    return t_[j + 1] + panel_qq(s, node(j + 1));
  }
  double tail() const { return tail_; }

 private:
  double node(int j) const { return j == n_ ? c_ : -c_ + j * h_; }
  double clamp(double s) const { return std::min(std::max(s, -c_), c_); }
  int index(double s) const { return std::min(n_ - 1, static_cast<int>(std::floor((s + c_) / h_))); }

  static double panel_qp(double a, double b) {
    if (b <= a) return 0.0;
    double acc = 0.0;
    for (const auto& q : gauss_legendre_panels(a, b, 1)) {
      double z2 = q.x * q.x;
      acc += q.w * z2 * z2 * q_factor(q.x).value * p_factor(q.x).value;
    }
    return acc;
  }
  static double panel_qq(double a, double b) {
    if (b <= a) return 0.0;
    double acc = 0.0;
    for (const auto& q : gauss_legendre_panels(a, b, 1)) {
      double z2 = q.x * q.x, v = q_factor(q.x).value;
      acc += q.w * z2 * z2 * v * v;
    }
    return acc;
  }

  double c_, h_ = 0, tail_ = 0;
  int n_ = 0;
  std::vector<double> k_, t_;
};

const JTable& j_table(const GreensQuadSpec& spec) {
  static std::mutex mu;
  static std::map<std::pair<double, int>, std::unique_ptr<JTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{spec.cutoff, spec.panels_per_unit}];
  if (!slot) slot = std::make_unique<JTable>(spec.cutoff, spec.panels_per_unit);
  return *slot;
}

struct Factors {
  ValueDerivative u, v;  // u(x) v(y) on the chosen side
};

Factors side_factors(double x, double y, bool above) {
  return above ? Factors{q_factor(x), p_factor(y)} : Factors{p_factor(x), q_factor(y)};
}

}  // namespace

JValues j_integral(double x, double y, const GreensQuadSpec& spec) {
  if (std::fabs(x) > spec.cutoff || std::fabs(y) > spec.cutoff)
    throw std::domain_error("Green's function arguments must lie inside the quadrature cutoff");
  const JTable& tab = j_table(spec);
  bool swapped = x > y;
  double a = swapped ? y : x, b = swapped ? x : y;
  // for a <= b: J = Q(a)Q(b) F1(a) + P(a)Q(b) M(a,b) + P(a)P(b) F3(b)
  double f1 = tab.t(-a), m = tab.k(b) - tab.k(a), f3 = tab.t(b);
  auto qa = q_factor(a), pa = p_factor(a), qb = q_factor(b), pb = p_factor(b);
  auto combo = [&](double qa_, double pa_, double qb_, double pb_) {
    return qa_ * qb_ * f1 + pa_ * qb_ * m + pa_ * pb_ * f3;
  };
  // derivatives in a and b: the boundary terms of the integrals cancel
  double j = combo(qa.value, pa.value, qb.value, pb.value);
  double ja = combo(qa.derivative, pa.derivative, qb.value, pb.value);
  double jb = combo(qa.value, pa.value, qb.derivative, pb.derivative);
  double jab = combo(qa.derivative, pa.derivative, qb.derivative, pb.derivative);
  JValues out;
  out.j = j;
  out.jx = swapped ? jb : ja;
  out.jy = swapped ? ja : jb;
  out.jxy = jab;
  double scale = std::max({std::fabs(qa.value * qb.value), std::fabs(pa.value * qb.value),
                           std::fabs(pa.value * pb.value)});
  out.tail_bound = scale * tab.tail();
  return out;
}

namespace {

double evaluate_side(const GreensExpr& g, double x, double y, const GreensQuadSpec& spec, bool above) {
  Factors f = side_factors(x, y, above);
  bool needs_j = false;
  for (const auto& [b, p] : g.terms())
    if (b == B::J || b == B::Jx || b == B::Jy || b == B::Jxy) needs_j = true;
  JValues jv;
  if (needs_j) jv = j_integral(x, y, spec);
  double acc = 0.0;
  for (const auto& [b, p] : g.terms()) {
    double base = 0.0;
    switch (b) {
      case B::UV: base = f.u.value * f.v.value; break;
      case B::DV: base = f.u.derivative * f.v.value; break;
      case B::UD: base = f.u.value * f.v.derivative; break;
      case B::DD: base = f.u.derivative * f.v.derivative; break;
      case B::J: base = jv.j; break;
      case B::Jx: base = jv.jx; break;
      case B::Jy: base = jv.jy; break;
      case B::Jxy: base = jv.jxy; break;
    }
    acc += eval_poly(p, x, y) * base;
  }
  return acc;
}

}  // namespace

double evaluate(const GreensExpr& g, double x, double y, const GreensQuadSpec& spec, GreensSide side) {
  switch (side) {
    case GreensSide::Above: return evaluate_side(g, x, y, spec, true);
    case GreensSide::Below: return evaluate_side(g, x, y, spec, false);
    case GreensSide::Auto: break;
  }
  if (x > y) return evaluate_side(g, x, y, spec, true);
  if (x < y) return evaluate_side(g, x, y, spec, false);
  // theta(0) = 1/2
  return 0.5 * (evaluate_side(g, x, y, spec, true) + evaluate_side(g, x, y, spec, false));
}

namespace {

const GreensExpr& cached(int order, bool derived) {
  static const GreensExpr e[5] = {g0_expr(), g1_expr(), g2_expr(), g3_expr(), g3_derived_expr()};
  if (order < 0 || order > 3) throw std::invalid_argument("Green's function order must be 0..3");
  return e[order == 3 && derived ? 4 : order];
}

void check_domain(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y) || std::fabs(x) > 8 || std::fabs(y) > 8)
    throw std::domain_error("Green's function arguments must satisfy |x|, |y| <= 8");
}

}  // namespace

double greens_value(int order, double x, double y, const GreensQuadSpec& spec) {
  check_domain(x, y);
  return evaluate(cached(order, false), x, y, spec);
}

double g0(double x, double y) { return greens_value(0, x, y); }
double g1(double x, double y) { return greens_value(1, x, y); }
double g2(double x, double y, const GreensQuadSpec& spec) { return greens_value(2, x, y, spec); }
double g3(double x, double y, const GreensQuadSpec& spec) { return greens_value(3, x, y, spec); }
double g3_derived(double x, double y, const GreensQuadSpec& spec) {
  check_domain(x, y);
  return evaluate(cached(3, true), x, y, spec);
}

double greens_residual(int order, double x, double y, bool derived, const GreensQuadSpec& spec) {
  check_domain(x, y);
  double gap = std::fabs(x - y);
  if (gap == 0.0) throw std::domain_error("residual is defined off the diagonal only");
  GreensSide side = x > y ? GreensSide::Above : GreensSide::Below;
  const GreensExpr& g = cached(order, derived);
  auto f = [&](double t) { return evaluate(g, t, y, spec, side); };
  double h = std::min(0.05, gap / 4);
  double r = -0.5 * fd_second_derivative(f, x, h) + 0.5 * x * x * f(x);
  if (order > 0) r -= x * x * x * evaluate(cached(order - 1, false), x, y, spec, side);
  return r;
}

double greens_derivative_jump(int order, double y, const GreensQuadSpec& spec) {
  check_domain(y, y);
  GreensExpr d = cached(order, false).dx();
  return evaluate(d, y, y, spec, GreensSide::Above) - evaluate(d, y, y, spec, GreensSide::Below);
}

namespace {

double log_inv_norm(int n) { return 0.5 * (n * std::log(2.0) + std::lgamma(n + 1.0)); }

// int int rho(x - s) rho(y - t) G(s, t) ds dt, splitting the inner integral at t = s.
double mollified_closed_form(const GreensExpr& g, double x, double y, double sigma) {
  double w = 7 * sigma;
  int panels = std::max(4, static_cast<int>(std::ceil(2 * w / 0.5)));
  double acc = 0.0;
  for (const auto& qs : gauss_legendre_panels(x - w, x + w, panels)) {
    double lo = y - w, hi = y + w, inner = 0.0;
    auto piece = [&](double a, double b, GreensSide side) {
      if (b - a <= 0) return;
      int p = std::max(1, static_cast<int>(std::ceil((b - a) / 0.5)));
      for (const auto& qt : gauss_legendre_panels(a, b, p))
        inner += qt.w * gaussian_mollifier(y - qt.x, sigma) * evaluate(g, qs.x, qt.x, {}, side);
    };
    double cut = std::min(std::max(qs.x, lo), hi);
    piece(lo, cut, GreensSide::Above);  // t < s
    piece(cut, hi, GreensSide::Below);
    acc += qs.w * gaussian_mollifier(x - qs.x, sigma) * inner;
  }
  return acc;
}

// eps^k coefficients of sum_n (-1)^n phi_n(x) phi_n(y) / E_n for n < levels,
// with each phi_n replaced by its values from `px`, `py` (psi-table per point).
std::vector<std::complex<double>> spectral_orders(int levels, const std::vector<double>& px,
                                                  const std::vector<double>& py) {
  std::vector<std::complex<double>> out(4, 0.0);
  for (int n = 0; n < levels; ++n) {
    auto wf = cubic_table_wavefunction(n);
    HermiteEpsSeries p = wf.payload();
    std::vector<std::complex<double>> fx(4, 0.0), fy(4, 0.0), inv(4, 0.0);
    for (int k = 0; k <= std::min(3, p.order()); ++k)
      for (const auto& [m, c] : p[k].coeffs()) {
        double s = std::exp(log_inv_norm(m) - log_inv_norm(n));
        fx[k] += c.to_complex() * s * px.at(m);
        fy[k] += c.to_complex() * s * py.at(m);
      }
    ScalarSeries e = inverse(cubic_energy(n).truncated(3));
    for (int k = 0; k <= std::min(3, e.order()); ++k) inv[k] = e[k].to_complex();
    double sign = n % 2 ? -1.0 : 1.0;
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; a + b <= 3; ++b)
        for (int c = 0; a + b + c <= 3; ++c) out[a + b + c] += sign * fx[a] * fy[b] * inv[c];
  }
  return out;
}

}  // namespace

VerificationReport greens_spectral_check(double eps, int levels, double x, double y,
                                         const GreensSpectralOptions& opt) {
  if (levels < 1 || levels > 400) throw std::invalid_argument("level count must be in 1..400");
  if (!(opt.sigma > 0)) throw std::invalid_argument("mollifier width must be positive");
  check_domain(x, y);
  VerificationReport rep;
  if (opt.mollified_levels < 1 || opt.mollified_levels > 400)
    throw std::invalid_argument("level count must be in 1..400");
  const int mmax = std::max(levels, opt.mollified_levels) + 12;
  // expected eps^k coefficient of G: G_0, -i G_1, -G_2, i G_3
  const std::complex<double> phase[4] = {1.0, {0, -1}, -1.0, {0, 1}};
  const char* anchor = "G(x,y) = sum_n (-1)^n phi_n(x) phi_n(y) / E_n";

  auto mx = mollified_oscillator_functions(x, opt.sigma, mmax);
  auto my = mollified_oscillator_functions(y, opt.sigma, mmax);
  auto mol = spectral_orders(opt.mollified_levels, mx, my);
  for (int k = 0; k <= 3; ++k) {
    double closed = mollified_closed_form(cached(k, false), x, y, opt.sigma);
    std::complex<double> want = phase[k] * closed;
    double err = std::abs(mol[k] - want);
    rep.pass_fail("mollified_order" + std::to_string(k),
                  "mollified spectral sum vs mollified closed form, eps^" + std::to_string(k), anchor,
                  fmt(want.real()) + "," + fmt(want.imag()), fmt(mol[k].real()) + "," + fmt(mol[k].imag()), 1e-4,
                  err <= 1e-4, "sigma=" + fmt(opt.sigma) + " levels=" + std::to_string(opt.mollified_levels));
  }

  {
    double closed = mollified_closed_form(cached(3, true), x, y, opt.sigma);
    std::complex<double> want = phase[3] * closed;
    rep.pass_fail("mollified_order3_rederived", "mollified spectral sum vs the re-derived third order", anchor,
                  fmt(want.imag()), fmt(mol[3].imag()), 1e-4, std::abs(mol[3] - want) <= 1e-4);
  }

  if (opt.include_raw) {
    auto raw = spectral_orders(levels, oscillator_functions(x, mmax), oscillator_functions(y, mmax));
    double closed0 = g0(x, y);
    rep.numeric("raw_order0", "truncated spectral sum vs G_0 at the point", anchor, closed0, raw[0].real(), 1e-5);
    // one level more estimates the truncation error of the plain sum
    auto raw_next = spectral_orders(levels + 1, oscillator_functions(x, mmax), oscillator_functions(y, mmax));
    rep.skip("raw_truncation", "change of the plain eps^0 sum from one more level", "plumbing",
             "diagnostic: " + fmt(std::abs(raw_next[0] - raw[0])));
    if (eps != 0.0) {
      // eps-coefficient by central differencing the full truncated sum in eps
      auto full = [&](double e) {
        std::complex<double> s = 0.0, p = 1.0;
        for (int k = 0; k <= 3; ++k, p *= e) s += raw[k] * p;
        return s;
      };
      std::complex<double> d1 = (full(eps) - full(-eps)) / (2 * eps);
      std::complex<double> want = phase[1] * g1(x, y);
      rep.numeric("raw_order1_fd", "eps-derivative of the truncated sum vs -i G_1", anchor, 0.0,
                  std::abs(d1 - want), 1e-4);
    }
    if (std::fabs(x - y) >= 5.0) {
      rep.pass_fail("far_apart", "both representations small when far apart", anchor, "<=1e-3",
                    fmt(std::abs(raw[0])) + "," + fmt(g0(x, y)), 1e-3,
                    std::abs(raw[0]) <= 1e-3 && std::fabs(g0(x, y)) <= 1e-3);
    }
  }
  return rep;
}

}  // namespace ptc
