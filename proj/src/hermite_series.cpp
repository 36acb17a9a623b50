#include "ptc/hermite_series.hpp"

#include <cmath>
#include <sstream>

namespace ptc {

namespace {

const double kPiQuarter = std::pow(M_PI, -0.25);

Rational two_pow_fact(int n) {
  Rational r = factorial(static_cast<unsigned>(n));
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(n));
  return r * Rational(p);
}

// log of pi^{1/4} sqrt(2^n n!)
double log_inv_norm(int n) {
  return 0.25 * std::log(M_PI) + 0.5 * (n * std::log(2.0) + std::lgamma(n + 1.0));
}

template <class T>
std::vector<T> psi_table(T x, int nmax) {
  std::vector<T> psi(static_cast<std::size_t>(std::max(nmax, 0)) + 1);
  psi[0] = kPiQuarter * std::exp(-x * x / 2.0);
  if (nmax >= 1) psi[1] = std::sqrt(2.0) * x * psi[0];
  for (int n = 1; n < nmax; ++n)
    psi[n + 1] = std::sqrt(2.0 / (n + 1)) * x * psi[n] - std::sqrt(double(n) / (n + 1)) * psi[n - 1];
  return psi;
}

}  // namespace

std::vector<double> oscillator_functions(double x, int nmax) { return psi_table<double>(x, nmax); }

std::vector<std::complex<double>> oscillator_functions(std::complex<double> x, int nmax) {
  return psi_table<std::complex<double>>(x, nmax);
}

HermiteSeries::HermiteSeries(const Map& coeffs) {
  for (const auto& [n, c] : coeffs) add(n, c);
}

HermiteSeries HermiteSeries::basis(int n, const Scalar& c) {
  HermiteSeries f;
  f.add(n, c);
  return f;
}

Scalar HermiteSeries::coeff(int n) const {
  auto it = c_.find(n);
  return it == c_.end() ? Scalar() : it->second;
}

void HermiteSeries::add(int n, const Scalar& c) {
  if (n < 0) throw std::invalid_argument("negative Hermite index");
  if (c.is_zero()) return;
  auto [it, inserted] = c_.try_emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

HermiteSeries& HermiteSeries::operator+=(const HermiteSeries& o) {
  for (const auto& [n, c] : o.c_) add(n, c);
  return *this;
}

HermiteSeries& HermiteSeries::operator-=(const HermiteSeries& o) {
  for (const auto& [n, c] : o.c_) add(n, -c);
  return *this;
}

HermiteSeries& HermiteSeries::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& [n, c] : c_) c *= s;
  return *this;
}

std::complex<double> HermiteSeries::evaluate(std::complex<double> x) const {
  if (c_.empty()) return 0.0;
  auto psi = oscillator_functions(x, max_index());
  std::complex<double> acc = 0.0;
  for (const auto& [n, c] : c_) acc += c.to_complex() * psi[n] * std::exp(log_inv_norm(n));
  return acc;
}

std::complex<double> HermiteSeries::evaluate_scaled(double x, int m) const {
  if (c_.empty()) return 0.0;
  auto psi = oscillator_functions(x, max_index());
  double lm = log_inv_norm(m);
  std::complex<double> acc = 0.0;
  for (const auto& [n, c] : c_) acc += c.to_complex() * psi[n] * std::exp(log_inv_norm(n) - lm);
  return acc;
}

HermiteSeries multiply_by_x(const HermiteSeries& f) {
  HermiteSeries out;
  for (const auto& [n, c] : f.coeffs()) {
    out.add(n + 1, c * Rational(1, 2));
    if (n > 0) out.add(n - 1, c * Rational(n));
  }
  return out;
}

HermiteSeries differentiate(const HermiteSeries& f) {
  // d/dx e^{-x^2/2} H_n = e^{-x^2/2} (2n H_{n-1} - x H_n) = e^{-x^2/2} (n H_{n-1} - H_{n+1}/2)
  HermiteSeries out;
  for (const auto& [n, c] : f.coeffs()) {
    out.add(n + 1, c * Rational(-1, 2));
    if (n > 0) out.add(n - 1, c * Rational(n));
  }
  return out;
}

HermiteSeries parity_reflect(const HermiteSeries& f) {
  HermiteSeries out;
  for (const auto& [n, c] : f.coeffs()) out.add(n, n % 2 ? -c : c);
  return out;
}

HermiteSeries conjugate(const HermiteSeries& f) {
  HermiteSeries out;
  for (const auto& [n, c] : f.coeffs()) out.add(n, c.conj());
  return out;
}

HermiteSeries pt_conjugate(const HermiteSeries& f) { return conjugate(parity_reflect(f)); }

Scalar gaussian_pairing(const HermiteSeries& f, const HermiteSeries& g) {
  Scalar acc;
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  auto it = a.begin();
  auto jt = b.begin();
  while (it != a.end() && jt != b.end()) {
    if (it->first < jt->first) {
      ++it;
    } else if (jt->first < it->first) {
      ++jt;
    } else {
      acc += it->second * jt->second * two_pow_fact(it->first);
      ++it;
      ++jt;
    }
  }
  return acc;
}

Scalar pt_bilinear(const HermiteSeries& f, const HermiteSeries& g) {
  return gaussian_pairing(pt_conjugate(f), g);
}

HermiteSeries oscillator(const HermiteSeries& f) {
  HermiteSeries d2 = differentiate(differentiate(f));
  HermiteSeries x2 = multiply_by_x(multiply_by_x(f));
  return (x2 - d2) * Scalar(Rational(1, 2));
}

std::string to_text(const HermiteSeries& f) {
  std::ostringstream os;
  for (const auto& [n, c] : f.coeffs()) os << n << ':' << to_text(c) << '\n';
  return os.str();
}

HermiteSeries hermite_from_text(const std::string& text) {
  HermiteSeries f;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("missing ':' in '" + line + "'");
    f.add(std::stoi(line.substr(0, colon)), parse_scalar(line.substr(colon + 1)));
  }
  return f;
}

ScalarSeries operator*(const ScalarSeries& a, const ScalarSeries& b) {
  return convolve(a, b, [](const Scalar& u, const Scalar& v) { return u * v; });
}

HermiteEpsSeries operator*(const ScalarSeries& a, const HermiteEpsSeries& f) {
  return convolve(a, f, [](const Scalar& u, const HermiteSeries& g) { return u * g; });
}

ScalarSeries inverse(const ScalarSeries& s) {
  if (s[0].is_zero()) throw std::domain_error("series not invertible");
  ScalarSeries out(s.order());
  Scalar inv0 = Scalar(1) / s[0];
  out[0] = inv0;
  for (int k = 1; k <= s.order(); ++k) {
    Scalar acc;
    for (int j = 1; j <= k; ++j) acc += s[j] * out[k - j];
    out[k] = -acc * inv0;
  }
  return out;
}

ScalarSeries inverse_sqrt(const ScalarSeries& s) {
  if (s[0] != Scalar(1)) throw std::domain_error("inverse_sqrt needs unit leading term");
  // r^2 s = 1 with r_0 = 1
  ScalarSeries r(s.order());
  r[0] = Scalar(1);
  for (int k = 1; k <= s.order(); ++k) {
    r[k] = Scalar();
    ScalarSeries t = r * r * s;
    // t_k = 2 r_k + (terms without r_k); here r_k = 0 so t_k is the rest
    r[k] = t[k] * Scalar(Rational(-1, 2));
  }
  return r;
}

std::string to_text(const HermiteEpsSeries& f) {
  std::ostringstream os;
  for (int k = 0; k <= f.order(); ++k) {
    os << "# eps^" << k << '\n' << to_text(f[k]);
  }
  return os.str();
}

}  // namespace ptc
