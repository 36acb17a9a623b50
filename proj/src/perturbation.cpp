#include "ptc/perturbation.hpp"

#include <cmath>
#include <stdexcept>

namespace ptc {

namespace {

Scalar q(long p, long r = 1) { return Scalar(Rational(p, r)); }

NPoly poly(std::initializer_list<long> c, long denom = 1) {
  std::vector<Scalar> v;
  for (long x : c) v.push_back(q(x, denom));
  return NPoly(std::move(v));
}

// falling(k) * p
NPoly fall(int k, const NPoly& p) { return NPoly::falling(k) * p; }

std::vector<HermiteTerm> scaled(std::vector<HermiteTerm> terms, const Scalar& s) {
  for (auto& t : terms) t.coeff *= s;
  return terms;
}

SymbolicTable make_cubic() {
  SymbolicTable t;
  t.model = Model::Cubic;
  std::vector<HermiteTerm> p = {
      {3, NPoly(q(1, 24))},
      {1, poly({3, 3}, 4)},
      {-1, poly({0, 0, -3}, 2)},
      {-3, fall(3, NPoly(q(-1, 3)))},
  };
  std::vector<HermiteTerm> qq = {
      {6, NPoly(q(1, 1152))},
      {4, poly({7, 4}, 128)},
      {2, poly({27, 33, 7}, 32)},
      {-2, fall(2, poly({1, -19, 7}, 8))},
      {-4, fall(4, poly({-3, 4}, 8))},
      {-6, fall(6, NPoly(q(1, 18)))},
  };
  std::vector<HermiteTerm> r = {
      {9, NPoly(q(1, 82944))},
      {7, poly({5, 2}, 3072)},
      {5, poly({549, 465, 80}, 7680)},
      {3, poly({7506, 9832, 3639, 488}, 6912)},
      {1, poly({228, 408, 203, -1, 20}, 128) * q(3)},
      {-1, fall(1, poly({44, 81, 326, 81, 20}, 64) * q(-3))},
      {-3, fall(3, poly({-825, 4018, -2175, 488}, 864) * q(-1))},
      {-5, fall(5, poly({164, -305, 80}, 240) * q(-1))},
      {-7, fall(7, poly({-3, 2}, 24) * q(-1))},
      {-9, fall(9, NPoly(q(-1, 162)))},
  };
  // H_n - i P eps - Q eps^2 + i R eps^3
  t.bracket = {{{0, NPoly(q(1))}},
               scaled(p, Scalar(0, -1)),
               scaled(qq, q(-1)),
               scaled(r, Scalar(0, 1))};
  t.energy = {poly({1, 2}, 2), NPoly(), poly({11, 30, 30}, 8), NPoly()};
  // 1 + (2n+1)(82n^2+82n+87)/144 eps^2
  t.norm = {NPoly(q(1)), NPoly(), poly({1, 2}) * poly({87, 82, 82}, 144), NPoly()};
  return t;
}

SymbolicTable make_quartic() {
  SymbolicTable t;
  t.model = Model::Quartic;
  std::vector<HermiteTerm> p = {
      {4, NPoly(q(1, 64))},
      {2, poly({3, 2}, 8)},
      {-2, fall(2, poly({-1, 2}, 2) * q(-1))},
      {-4, fall(4, NPoly(q(-1, 4)))},
  };
  t.bracket = {{{0, NPoly(q(1))}}, p};
  t.energy = {poly({1, 2}, 2), poly({1, 2, 2}) * q(-3, 4)};
  t.norm = {NPoly(q(1)), NPoly()};
  return t;
}

// x^3 f or x^4 f
HermiteSeries apply_power(const HermiteSeries& f, int p) {
  HermiteSeries g = f;
  for (int k = 0; k < p; ++k) g = multiply_by_x(g);
  return g;
}

// V f with V = i x^3 (cubic) or -x^4 (quartic)
HermiteSeries potential(Model m, const HermiteSeries& f) {
  return m == Model::Cubic ? apply_power(f, 3) * Scalar::i() : apply_power(f, 4) * q(-1);
}

Rational two_pow_fact(int n) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(n));
  return factorial(static_cast<unsigned>(n)) * Rational(p);
}

}  // namespace

std::string to_string(Model m) { return m == Model::Cubic ? "cubic" : "quartic"; }

Model parse_model(const std::string& s) {
  if (s == "cubic") return Model::Cubic;
  if (s == "quartic") return Model::Quartic;
  throw std::invalid_argument("unknown model '" + s + "'");
}

int max_order(Model m) { return m == Model::Cubic ? 3 : 1; }

const SymbolicTable& cubic_symbolic_table() {
  static const SymbolicTable t = make_cubic();
  return t;
}

const SymbolicTable& quartic_symbolic_table() {
  static const SymbolicTable t = make_quartic();
  return t;
}

const SymbolicTable& symbolic_table(Model m) {
  return m == Model::Cubic ? cubic_symbolic_table() : quartic_symbolic_table();
}

PerturbativeWavefunction instantiate(const SymbolicTable& table, int n) {
  if (n < 0) throw std::invalid_argument("level index must be nonnegative");
  PerturbativeWavefunction wf;
  wf.n = n;
  wf.model = table.model;
  wf.bracket = HermiteEpsSeries(table.order());
  wf.a = ScalarSeries(table.order());
  for (int k = 0; k <= table.order(); ++k) {
    for (const auto& term : table.bracket[static_cast<std::size_t>(k)]) {
      int idx = n + term.shift;
      if (idx < 0) continue;
      wf.bracket[k].add(idx, term.coeff(n));
    }
    wf.a[k] = table.norm[static_cast<std::size_t>(k)](n);
  }
  return wf;
}

ScalarSeries energy_series(const SymbolicTable& table, int n) {
  ScalarSeries e(table.order());
  for (int k = 0; k <= table.order(); ++k) e[k] = table.energy[static_cast<std::size_t>(k)](n);
  return e;
}

PerturbativeWavefunction cubic_table_wavefunction(int n) { return instantiate(cubic_symbolic_table(), n); }
PerturbativeWavefunction quartic_table_wavefunction(int n) {
  return instantiate(quartic_symbolic_table(), n);
}
ScalarSeries cubic_energy(int n) { return energy_series(cubic_symbolic_table(), n); }
ScalarSeries quartic_energy(int n) { return energy_series(quartic_symbolic_table(), n); }

HermiteEpsSeries PerturbativeWavefunction::payload() const {
  ScalarSeries phase(order(), i_pow(n));
  return (phase * a) * bracket;
}

std::complex<double> PerturbativeWavefunction::evaluate(double x, double eps) const {
  HermiteEpsSeries p = payload();
  std::complex<double> acc = 0.0;
  double e = 1.0;
  for (int k = 0; k <= p.order(); ++k, e *= eps) acc += e * p[k].evaluate_scaled(x, n);
  return acc;
}

Derivation derive_wavefunction(Model model, int n, int order) {
  if (n < 0) throw std::invalid_argument("level index must be nonnegative");
  if (order < 0 || order > max_order(model))
    throw std::invalid_argument("order out of range for " + to_string(model) + " model");

  std::vector<HermiteSeries> psi{HermiteSeries::basis(n)};
  ScalarSeries energy(order);
  energy[0] = Scalar(Rational(2 * n + 1, 2));

  for (int k = 1; k <= order; ++k) {
    HermiteSeries vpsi = potential(model, psi[k - 1]);
    // intermediate normalization: psi_j has no H_n component for j >= 1
    energy[k] = vpsi.coeff(n);
    HermiteSeries rhs = psi[0] * energy[k] - vpsi;
    for (int j = 1; j < k; ++j) rhs += psi[k - j] * energy[j];
    if (!rhs.coeff(n).is_zero())
      throw std::logic_error("solvability condition violated at order " + std::to_string(k));
    HermiteSeries next;
    for (const auto& [m, c] : rhs.coeffs()) next.add(m, c * Scalar(Rational(1, m - n)));
    psi.push_back(std::move(next));
  }

  Derivation d;
  d.wavefunction.n = n;
  d.wavefunction.model = model;
  d.wavefunction.bracket = HermiteEpsSeries(psi);
  d.energy = energy;

  // PT norm of the bracket fixes a_n: a^2 <B,B> = 2^n n!
  HermiteEpsSeries b = d.wavefunction.bracket;
  ScalarSeries s = convolve(b, b, [](const HermiteSeries& u, const HermiteSeries& v) {
    return gaussian_pairing(u, v);
  });
  Rational scale = 1 / two_pow_fact(n);
  for (int k = 0; k <= s.order(); ++k) s[k] *= scale;
  d.wavefunction.a = inverse_sqrt(s);

  HermiteEpsSeries res = schrodinger_residual(d.wavefunction, d.energy);
  for (int k = 0; k <= res.order(); ++k)
    if (!res[k].is_zero()) throw std::logic_error("recursion residual nonzero at order " + std::to_string(k));
  return d;
}

HermiteEpsSeries schrodinger_residual(const PerturbativeWavefunction& wf, const ScalarSeries& energy) {
  const HermiteEpsSeries& b = wf.bracket;
  int order = std::min(b.order(), energy.order());
  HermiteEpsSeries out(order);
  for (int k = 0; k <= order; ++k) {
    HermiteSeries r = oscillator(b[k]);
    if (k >= 1) r += potential(wf.model, b[k - 1]);
    for (int j = 0; j <= k; ++j) r -= b[k - j] * energy[j];
    out[k] = r;
  }
  return out;
}

ScalarSeries pt_overlap_rational(const PerturbativeWavefunction& m, const PerturbativeWavefunction& n) {
  HermiteEpsSeries pm = m.payload().map([](const HermiteSeries& f) { return pt_conjugate(f); });
  HermiteEpsSeries pn = n.payload();
  return convolve(pm, pn, [](const HermiteSeries& u, const HermiteSeries& v) { return gaussian_pairing(u, v); });
}

ScalarSeries pt_norm(const PerturbativeWavefunction& wf) {
  ScalarSeries s = pt_overlap_rational(wf, wf);
  Rational scale = 1 / two_pow_fact(wf.n);
  for (int k = 0; k <= s.order(); ++k) s[k] *= scale;
  return s;
}

std::complex<double> evaluate(const ScalarSeries& s, double eps) {
  std::complex<double> acc = 0.0;
  double e = 1.0;
  for (int k = 0; k <= s.order(); ++k, e *= eps) acc += e * s[k].to_complex();
  return acc;
}

}  // namespace ptc
