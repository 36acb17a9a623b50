#include "ptc/polynomial.hpp"

#include <stdexcept>

namespace ptc {

NPoly::NPoly(const Scalar& c) : c_{c} { trim(); }
NPoly::NPoly(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }
NPoly::NPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

NPoly NPoly::n() { return NPoly{Scalar(0), Scalar(1)}; }

NPoly NPoly::falling(int k) {
  NPoly p(Scalar(1));
  for (int r = 0; r < k; ++r) p = p * NPoly{Scalar(-r), Scalar(1)};
  return p;
}

NPoly NPoly::from_roots(std::initializer_list<long> roots, const Scalar& lead) {
  NPoly p(lead);
  for (long r : roots) p = p * NPoly{Scalar(-r), Scalar(1)};
  return p;
}

Scalar NPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Scalar();
  return c_[static_cast<std::size_t>(k)];
}

Scalar NPoly::operator()(const Rational& n) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= n;
    acc += *it;
  }
  return acc;
}

Scalar NPoly::operator()(long n) const { return (*this)(Rational(n)); }

NPoly NPoly::shifted(long t) const {
  // Horner in the polynomial ring: p(n+t) = (...(c_d (n+t) + c_{d-1})(n+t) + ...)
  NPoly acc;
  NPoly lin{Scalar(t), Scalar(1)};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + NPoly(*it);
  return acc;
}

NPoly NPoly::divided_by_rising(int t) const {
  std::vector<Scalar> q = c_;
  for (int r = 1; r <= t; ++r) {
    // synthetic division by (n + r)
    if (q.empty()) return NPoly();
    std::vector<Scalar> out(q.size() - 1);
    Scalar carry;
    for (std::size_t k = q.size(); k-- > 0;) {
      Scalar v = q[k] + carry;
      if (k == 0) {
        if (!v.is_zero()) throw std::domain_error("polynomial not divisible by rising factorial");
        break;
      }
      out[k - 1] = v;
      carry = v * Scalar(-r);
    }
    q = std::move(out);
  }
  return NPoly(std::move(q));
}

NPoly NPoly::conj() const {
  std::vector<Scalar> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.conj());
  return NPoly(std::move(out));
}

NPoly& NPoly::operator+=(const NPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

NPoly& NPoly::operator-=(const NPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

NPoly& NPoly::operator*=(const Scalar& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

NPoly operator*(const NPoly& a, const NPoly& b) {
  if (a.is_zero() || b.is_zero()) return NPoly();
  std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return NPoly(std::move(out));
}

void NPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

}  // namespace ptc
