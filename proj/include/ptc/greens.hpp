#pragma once

#include "ptc/report.hpp"
#include "ptc/scalar.hpp"

#include <map>
#include <string>
#include <utility>

namespace ptc {

// Polynomial in (x, y) with rational coefficients, keyed by exponent pair.
using BiPoly = std::map<std::pair<int, int>, Rational>;

// Building blocks of the Green's function hierarchy. With u(x) v(y) the two
// decaying parabolic cylinder factors of G_0 on the current side of x = y:
//   UV = u v, DV = u' v, UD = u v', DD = u' v',
//   J = int z^4 G_0(z,x) G_0(z,y) dz and its derivatives Jx, Jy, Jxy.
enum class GreensBasis { UV, DV, UD, DD, J, Jx, Jy, Jxy };

class GreensExpr {
 public:
  using Map = std::map<GreensBasis, BiPoly>;

  GreensExpr() = default;
  static GreensExpr basis(GreensBasis b, const Rational& c = Rational(1));

  void add(GreensBasis b, const BiPoly& p);
  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  GreensExpr& operator+=(const GreensExpr& o);
  GreensExpr& operator-=(const GreensExpr& o);
  friend GreensExpr operator+(GreensExpr a, const GreensExpr& b) { return a += b; }
  friend GreensExpr operator-(GreensExpr a, const GreensExpr& b) { return a -= b; }
  friend bool operator==(const GreensExpr& a, const GreensExpr& b) { return a.t_ == b.t_; }

  GreensExpr times(const BiPoly& p) const;
  GreensExpr times(const Rational& c) const;
  GreensExpr dx() const;
  GreensExpr dy() const;
  GreensExpr swap_xy() const;

 private:
  Map t_;
};

BiPoly monomial(const Rational& c, int i, int j);

// x^2 d_x - x + y^2 d_y - y
GreensExpr ladder_l(const GreensExpr& g);
// -1/2 d_x^2 + x^2/2
GreensExpr oscillator_x(const GreensExpr& g);

GreensExpr g0_expr();
GreensExpr g1_expr();
GreensExpr g2_expr();
// third order in its tabulated closed form
GreensExpr g3_expr();
// third order re-derived from the second-order solution (differs from the tabulated form)
GreensExpr g3_derived_expr();
GreensExpr greens_expr(int order);

struct GreensQuadSpec {
  double cutoff = 8.0;       // |z| truncation of the z-integral
  int panels_per_unit = 2;   // 20-point Gauss-Legendre panels per unit length
};

struct JValues {
  double j = 0, jx = 0, jy = 0, jxy = 0;
  double tail_bound = 0;
};

// z-integral and its first derivatives at (x, y).
JValues j_integral(double x, double y, const GreensQuadSpec& spec = {});

enum class GreensSide { Auto, Above, Below };  // Above: x > y

double evaluate(const GreensExpr& g, double x, double y, const GreensQuadSpec& spec = {},
                GreensSide side = GreensSide::Auto);

double g0(double x, double y);
double g1(double x, double y);
double g2(double x, double y, const GreensQuadSpec& spec = {});
double g3(double x, double y, const GreensQuadSpec& spec = {});
double g3_derived(double x, double y, const GreensQuadSpec& spec = {});
double greens_value(int order, double x, double y, const GreensQuadSpec& spec = {});

// (-1/2 d_x^2 + x^2/2) G_k - x^3 G_{k-1} by sixth-order finite differences in x.
// Pass derived = true to use the re-derived third order.
double greens_residual(int order, double x, double y, bool derived = false, const GreensQuadSpec& spec = {});
// d_x G_k(y+, y) - d_x G_k(y-, y)
double greens_derivative_jump(int order, double y, const GreensQuadSpec& spec = {});

struct GreensSpectralOptions {
  double sigma = 0.35;          // mollifier width for the convergent comparison
  int mollified_levels = 200;  // levels in the mollified sum
  bool include_raw = true;
};

// Spectral sum sum_n (-1)^n phi_n(x) phi_n(y) / E_n built from the cubic perturbative
// eigenfunctions versus the closed forms, order by order in eps.
VerificationReport greens_spectral_check(double eps, int levels, double x, double y,
                                         const GreensSpectralOptions& opt = {});

}  // namespace ptc
