#pragma once

#include <gmpxx.h>

#include <complex>
#include <ostream>
#include <string>

namespace ptc {

using Rational = mpq_class;

// Exact complex rational re + i*im.
struct Scalar {
  Rational re{0};
  Rational im{0};

  Scalar() = default;
  Scalar(long v) : re(v) {}
  Scalar(const Rational& r) : re(r) { re.canonicalize(); }
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  static Scalar i() { return Scalar(0, 1); }
  static Scalar frac(long p, long q) { return Scalar(Rational(p, q)); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  Scalar conj() const { return Scalar(re, -im); }

  Scalar& operator+=(const Scalar& o) { re += o.re; im += o.im; return *this; }
  Scalar& operator-=(const Scalar& o) { re -= o.re; im -= o.im; return *this; }
  Scalar& operator*=(const Scalar& o);
  Scalar& operator*=(const Rational& r) { re *= r; im *= r; return *this; }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

inline Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
inline Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
inline Scalar operator-(const Scalar& a) { return Scalar(-a.re, -a.im); }
inline Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
inline Scalar operator*(Scalar a, const Rational& r) { return a *= r; }
inline Scalar operator*(const Rational& r, Scalar a) { return a *= r; }
Scalar operator/(const Scalar& a, const Scalar& b);
inline bool operator==(const Scalar& a, const Scalar& b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

// i^k for any integer k.
Scalar i_pow(long k);

// "p/q" with the sign on the numerator.
std::string rational_text(const Rational& r);
Rational parse_rational(const std::string& s);

// "re/denom" or "re/denom+im/denom i".
std::string to_text(const Scalar& s);
Scalar parse_scalar(const std::string& s);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

Rational factorial(unsigned n);

}  // namespace ptc
