#include "ptc/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace ptc {

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  Rational d = b.re * b.re + b.im * b.im;
  if (sgn(d) == 0) throw std::domain_error("division by zero scalar");
  Scalar q = a * b.conj();
  q.re /= d;
  q.im /= d;
  return q;
}

Scalar i_pow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return Scalar(1);
    case 1: return Scalar(0, 1);
    case 2: return Scalar(-1);
    default: return Scalar(0, -1);
  }
}

std::string rational_text(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  std::string t = s;
  if (!t.empty() && t.front() == '+') t.erase(0, 1);
  Rational r;
  if (r.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

std::string to_text(const Scalar& s) {
  std::string out = rational_text(s.re);
  if (!s.is_real()) out += "+" + rational_text(s.im) + " i";
  return out;
}

Scalar parse_scalar(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty()) throw std::invalid_argument("empty scalar");
  if (s.back() != 'i') return Scalar(parse_rational(s));
  s.pop_back();
  std::size_t cut = std::string::npos;
  for (std::size_t k = 1; k < s.size(); ++k)
    if ((s[k] == '+' || s[k] == '-') && std::isdigit(static_cast<unsigned char>(s[k - 1]))) {
      cut = k;
      break;
    }
  if (cut == std::string::npos) return Scalar(0, parse_rational(s));
  std::string im = s.substr(cut);
  if (im.size() >= 2 && im[0] == '+') im.erase(0, 1);
  return Scalar(parse_rational(s.substr(0, cut)), parse_rational(im));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_text(s); }

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

}  // namespace ptc
