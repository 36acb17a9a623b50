#pragma once

#include "ptc/scalar.hpp"

#include <complex>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptc {

// e^{-x^2/2} * sum_n c_n H_n(x) with exact coefficients; zero coefficients are never stored.
class HermiteSeries {
 public:
  using Map = std::map<int, Scalar>;

  HermiteSeries() = default;
  explicit HermiteSeries(const Map& coeffs);
  static HermiteSeries basis(int n, const Scalar& c = Scalar(1));

  const Map& coeffs() const { return c_; }
  Scalar coeff(int n) const;
  bool is_zero() const { return c_.empty(); }
  int max_index() const { return c_.empty() ? -1 : c_.rbegin()->first; }
  std::size_t size() const { return c_.size(); }

  // Adds c*H_n in place; drops the entry if it cancels.
  void add(int n, const Scalar& c);

  HermiteSeries& operator+=(const HermiteSeries& o);
  HermiteSeries& operator-=(const HermiteSeries& o);
  HermiteSeries& operator*=(const Scalar& s);

  friend HermiteSeries operator+(HermiteSeries a, const HermiteSeries& b) { return a += b; }
  friend HermiteSeries operator-(HermiteSeries a, const HermiteSeries& b) { return a -= b; }
  friend HermiteSeries operator-(HermiteSeries a) { return a *= Scalar(-1); }
  friend HermiteSeries operator*(HermiteSeries a, const Scalar& s) { return a *= s; }
  friend HermiteSeries operator*(const Scalar& s, HermiteSeries a) { return a *= s; }
  friend bool operator==(const HermiteSeries& a, const HermiteSeries& b) { return a.c_ == b.c_; }

  std::complex<double> evaluate(std::complex<double> x) const;
  std::complex<double> evaluate(double x) const { return evaluate(std::complex<double>(x, 0.0)); }
  // pi^{-1/4} (2^m m!)^{-1/2} times the series, evaluated without overflow for large indices
  std::complex<double> evaluate_scaled(double x, int m) const;

 private:
  Map c_;
};

HermiteSeries multiply_by_x(const HermiteSeries& f);
HermiteSeries differentiate(const HermiteSeries& f);
HermiteSeries parity_reflect(const HermiteSeries& f);
HermiteSeries conjugate(const HermiteSeries& f);
HermiteSeries pt_conjugate(const HermiteSeries& f);

// int f g dx / sqrt(pi), no conjugation.
Scalar gaussian_pairing(const HermiteSeries& f, const HermiteSeries& g);
// int [PT f] g dx / sqrt(pi).
Scalar pt_bilinear(const HermiteSeries& f, const HermiteSeries& g);

// (-1/2 d^2 + 1/2 x^2) f
HermiteSeries oscillator(const HermiteSeries& f);

std::string to_text(const HermiteSeries& f);
HermiteSeries hermite_from_text(const std::string& text);

// Normalized oscillator functions psi_0..psi_nmax at x, pi^{-1/4}(2^n n!)^{-1/2} e^{-x^2/2} H_n(x).
std::vector<double> oscillator_functions(double x, int nmax);
std::vector<std::complex<double>> oscillator_functions(std::complex<double> x, int nmax);

// Truncated power series in epsilon; terms.size() == order + 1.
template <class T>
class EpsilonSeries {
 public:
  EpsilonSeries() : terms_(1) {}
  explicit EpsilonSeries(int order) : terms_(static_cast<std::size_t>(check(order)) + 1) {}
  EpsilonSeries(int order, const T& constant) : EpsilonSeries(order) { terms_[0] = constant; }
  explicit EpsilonSeries(std::vector<T> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw std::invalid_argument("empty epsilon series");
  }

  int order() const { return static_cast<int>(terms_.size()) - 1; }
  const T& operator[](int k) const { return terms_.at(static_cast<std::size_t>(k)); }
  T& operator[](int k) { return terms_.at(static_cast<std::size_t>(k)); }
  const std::vector<T>& terms() const { return terms_; }

  EpsilonSeries truncated(int order) const {
    int m = std::min(order, this->order());
    return EpsilonSeries(std::vector<T>(terms_.begin(), terms_.begin() + m + 1));
  }

  template <class F>
  auto map(F f) const {
    using R = decltype(f(terms_[0]));
    std::vector<R> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(f(t));
    return EpsilonSeries<R>(std::move(out));
  }

  EpsilonSeries& operator+=(const EpsilonSeries& o) {
    terms_.resize(static_cast<std::size_t>(std::min(order(), o.order())) + 1);
    for (std::size_t k = 0; k < terms_.size(); ++k) terms_[k] += o.terms_[k];
    return *this;
  }
  EpsilonSeries& operator-=(const EpsilonSeries& o) {
    terms_.resize(static_cast<std::size_t>(std::min(order(), o.order())) + 1);
    for (std::size_t k = 0; k < terms_.size(); ++k) terms_[k] -= o.terms_[k];
    return *this;
  }
  friend EpsilonSeries operator+(EpsilonSeries a, const EpsilonSeries& b) { return a += b; }
  friend EpsilonSeries operator-(EpsilonSeries a, const EpsilonSeries& b) { return a -= b; }
  friend bool operator==(const EpsilonSeries& a, const EpsilonSeries& b) { return a.terms_ == b.terms_; }

 private:
  static int check(int order) {
    if (order < 0) throw std::invalid_argument("negative epsilon order");
    return order;
  }
  std::vector<T> terms_;
};

// Cauchy product truncated at the smaller order.
template <class A, class B, class Mul>
auto convolve(const EpsilonSeries<A>& a, const EpsilonSeries<B>& b, Mul mul) {
  using R = decltype(mul(a[0], b[0]));
  int order = std::min(a.order(), b.order());
  EpsilonSeries<R> out(order);
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j) out[i + j] += mul(a[i], b[j]);
  return out;
}

using ScalarSeries = EpsilonSeries<Scalar>;
using HermiteEpsSeries = EpsilonSeries<HermiteSeries>;

ScalarSeries operator*(const ScalarSeries& a, const ScalarSeries& b);
HermiteEpsSeries operator*(const ScalarSeries& a, const HermiteEpsSeries& f);
// 1/sqrt(s) for s[0] == 1
ScalarSeries inverse_sqrt(const ScalarSeries& s);
ScalarSeries inverse(const ScalarSeries& s);

std::string to_text(const HermiteEpsSeries& f);

}  // namespace ptc
