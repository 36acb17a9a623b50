#pragma once

#include "ptc/scalar.hpp"

#include <initializer_list>
#include <vector>

namespace ptc {

// Polynomial in the level index n with exact complex rational coefficients.
class NPoly {
 public:
  NPoly() = default;
  NPoly(const Scalar& c);
  NPoly(std::initializer_list<Scalar> coeffs);
  explicit NPoly(std::vector<Scalar> coeffs);

  static NPoly n();
  // n (n-1) ... (n-k+1)
  static NPoly falling(int k);
  // product of (n - r) over the given roots
  static NPoly from_roots(std::initializer_list<long> roots, const Scalar& lead = Scalar(1));

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int k) const;

  Scalar operator()(long n) const;
  Scalar operator()(const Rational& n) const;

  // p(n + t)
  NPoly shifted(long t) const;
  // p(n) / ((n+1)(n+2)...(n+t)); throws std::domain_error when not exact
  NPoly divided_by_rising(int t) const;
  NPoly conj() const;

  NPoly& operator+=(const NPoly& o);
  NPoly& operator-=(const NPoly& o);
  NPoly& operator*=(const Scalar& s);

  friend NPoly operator+(NPoly a, const NPoly& b) { return a += b; }
  friend NPoly operator-(NPoly a, const NPoly& b) { return a -= b; }
  friend NPoly operator*(const NPoly& a, const NPoly& b);
  friend NPoly operator*(NPoly a, const Scalar& s) { return a *= s; }
  friend NPoly operator*(const Scalar& s, NPoly a) { return a *= s; }
  friend bool operator==(const NPoly& a, const NPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Scalar> c_;
};

}  // namespace ptc
