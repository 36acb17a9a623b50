#include "ptc/weyl.hpp"

#include <stdexcept>
#include <vector>

namespace ptc {

namespace {

Rational binomial(int k, int j) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(j));
  return Rational(b);
}

// b (b-1) ... (b-j+1)
Rational falling(int b, int j) {
  Rational r(1);
  for (int s = 0; s < j; ++s) r *= b - s;
  return r;
}

}  // namespace

WeylOperator WeylOperator::identity(const Scalar& c) { return monomial(0, 0, c); }
WeylOperator WeylOperator::x() { return monomial(1, 0); }
WeylOperator WeylOperator::d() { return monomial(0, 1); }

WeylOperator WeylOperator::monomial(int a, int k, const Scalar& c) {
  WeylOperator w;
  w.add(a, k, c);
  return w;
}

void WeylOperator::add(int a, int k, const Scalar& c) {
  if (a < 0 || k < 0) throw std::invalid_argument("negative power in Weyl monomial");
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(Key{a, k}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

WeylOperator WeylOperator::reflected() const {
  WeylOperator out;
  for (const auto& [key, c] : t_) out.add(key.first, key.second, (key.first + key.second) % 2 ? -c : c);
  return out;
}

WeylOperator WeylOperator::conj() const {
  WeylOperator out;
  for (const auto& [key, c] : t_) out.add(key.first, key.second, c.conj());
  return out;
}

WeylOperator WeylOperator::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative operator power");
  WeylOperator r = identity();
  for (int k = 0; k < e; ++k) r = r * *this;
  return r;
}

HermiteSeries WeylOperator::apply(const HermiteSeries& f) const {
  if (t_.empty()) return {};
  int kmax = 0;
  for (const auto& [key, c] : t_) kmax = std::max(kmax, key.second);
  std::vector<HermiteSeries> derivs{f};
  for (int k = 1; k <= kmax; ++k) derivs.push_back(differentiate(derivs.back()));
  // group by derivative order, then multiply by x powers in ascending order
  HermiteSeries out;
  for (int k = 0; k <= kmax; ++k) {
    HermiteSeries g = derivs[static_cast<std::size_t>(k)];
    int apow = 0;
    for (const auto& [key, c] : t_) {
      if (key.second != k) continue;
      while (apow < key.first) {
        g = multiply_by_x(g);
        ++apow;
      }
      out += g * c;
    }
  }
  return out;
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& o) {
  for (const auto& [key, c] : o.t_) add(key.first, key.second, c);
  return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& o) {
  for (const auto& [key, c] : o.t_) add(key.first, key.second, -c);
  return *this;
}

WeylOperator& WeylOperator::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [key, c] : t_) c *= s;
  return *this;
}

WeylOperator operator*(const WeylOperator& a, const WeylOperator& b) {
  // (x^a d^k)(x^b d^l) = sum_j C(k,j) b!/(b-j)! x^{a+b-j} d^{k-j+l}
  WeylOperator out;
  for (const auto& [ka, ca] : a.t_) {
    for (const auto& [kb, cb] : b.t_) {
      Scalar c = ca * cb;
      int jmax = std::min(ka.second, kb.first);
      for (int j = 0; j <= jmax; ++j)
        out.add(ka.first + kb.first - j, ka.second - j + kb.second,
                c * (binomial(ka.second, j) * falling(kb.first, j)));
    }
  }
  return out;
}

HermiteSeries ReflectionOperator::apply(const HermiteSeries& f) const {
  return direct.apply(f) + reflected.apply(parity_reflect(f));
}

ReflectionOperator& ReflectionOperator::operator+=(const ReflectionOperator& o) {
  direct += o.direct;
  reflected += o.reflected;
  return *this;
}

ReflectionOperator& ReflectionOperator::operator-=(const ReflectionOperator& o) {
  direct -= o.direct;
  reflected -= o.reflected;
  return *this;
}

ReflectionOperator operator*(const ReflectionOperator& a, const ReflectionOperator& b) {
  // (A0 + A1 R)(B0 + B1 R) = A0 B0 + A1 (R B1 R) + (A0 B1 + A1 (R B0 R)) R
  ReflectionOperator out;
  out.direct = a.direct * b.direct + a.reflected * b.reflected.reflected();
  out.reflected = a.direct * b.reflected + a.reflected * b.direct.reflected();
  return out;
}

}  // namespace ptc
