#pragma once

#include "ptc/hermite_series.hpp"

#include <map>
#include <utility>

namespace ptc {

// Normal-ordered differential operator sum c * x^a d^k (x to the left).
class WeylOperator {
 public:
  using Key = std::pair<int, int>;  // (a, k)
  using Map = std::map<Key, Scalar>;

  WeylOperator() = default;
  static WeylOperator identity(const Scalar& c = Scalar(1));
  static WeylOperator x();
  static WeylOperator d();
  static WeylOperator monomial(int a, int k, const Scalar& c = Scalar(1));

  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add(int a, int k, const Scalar& c);

  // R W R with R the reflection x -> -x
  WeylOperator reflected() const;
  WeylOperator conj() const;
  WeylOperator pow(int e) const;

  HermiteSeries apply(const HermiteSeries& f) const;

  WeylOperator& operator+=(const WeylOperator& o);
  WeylOperator& operator-=(const WeylOperator& o);
  WeylOperator& operator*=(const Scalar& s);

  friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
  friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
  friend WeylOperator operator*(WeylOperator a, const Scalar& s) { return a *= s; }
  friend WeylOperator operator*(const Scalar& s, WeylOperator a) { return a *= s; }
  friend WeylOperator operator*(const WeylOperator& a, const WeylOperator& b);
  friend bool operator==(const WeylOperator& a, const WeylOperator& b) { return a.t_ == b.t_; }

 private:
  Map t_;
};

// D0 + D1 R: a differential operator plus a differential operator composed with reflection.
struct ReflectionOperator {
  WeylOperator direct;
  WeylOperator reflected;

  static ReflectionOperator identity() { return {WeylOperator::identity(), {}}; }
  static ReflectionOperator reflection() { return {{}, WeylOperator::identity()}; }

  bool is_zero() const { return direct.is_zero() && reflected.is_zero(); }
  ReflectionOperator conj() const { return {direct.conj(), reflected.conj()}; }
  HermiteSeries apply(const HermiteSeries& f) const;

  ReflectionOperator& operator+=(const ReflectionOperator& o);
  ReflectionOperator& operator-=(const ReflectionOperator& o);
  friend ReflectionOperator operator+(ReflectionOperator a, const ReflectionOperator& b) { return a += b; }
  friend ReflectionOperator operator-(ReflectionOperator a, const ReflectionOperator& b) { return a -= b; }
  friend ReflectionOperator operator*(const ReflectionOperator& a, const ReflectionOperator& b);
  friend ReflectionOperator operator*(const ReflectionOperator& a, const Scalar& s) {
    return {a.direct * s, a.reflected * s};
  }
  friend bool operator==(const ReflectionOperator& a, const ReflectionOperator& b) {
    return a.direct == b.direct && a.reflected == b.reflected;
  }
};

}  // namespace ptc
