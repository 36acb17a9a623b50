#include "ptc/kernel.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ptc {

namespace {

Scalar q(long p, long r = 1) { return Scalar(Rational(p, r)); }

ReflectionOperator term_operator(const KernelTerm& t) {
  WeylOperator w = WeylOperator::monomial(t.a, t.k, t.coeff) * WeylOperator::monomial(t.b, 0);
  if (t.parity == DeltaParity::Minus) return {w, {}};
  return {{}, t.b % 2 ? w * Scalar(-1) : w};
}

// (x - d)^p, (x + d)^q and N^j with N = (x^2 - d^2 - 1)/2
struct LadderCache {
  std::vector<WeylOperator> raise{WeylOperator::identity()};
  std::vector<WeylOperator> lower{WeylOperator::identity()};
  std::vector<WeylOperator> number{WeylOperator::identity()};

  const WeylOperator& up(int p) {
    while (static_cast<int>(raise.size()) <= p) raise.push_back(raise.back() * (WeylOperator::x() - WeylOperator::d()));
    return raise[static_cast<std::size_t>(p)];
  }
  const WeylOperator& down(int p) {
    while (static_cast<int>(lower.size()) <= p) lower.push_back(lower.back() * (WeylOperator::x() + WeylOperator::d()));
    return lower[static_cast<std::size_t>(p)];
  }
  const WeylOperator& num(int j) {
    static const WeylOperator n = (WeylOperator::monomial(2, 0) - WeylOperator::monomial(0, 2) -
                                   WeylOperator::identity()) * q(1, 2);
    while (static_cast<int>(number.size()) <= j) number.push_back(number.back() * n);
    return number[static_cast<std::size_t>(j)];
  }
};

std::string parity_text(DeltaParity p) { return p == DeltaParity::Minus ? "minus" : "plus"; }

VerificationReport single(const std::string& id, const std::string& desc, const std::string& anchor,
                          const std::string& expected, const std::string& computed, bool ok) {
  VerificationReport r;
  r.pass_fail(id, desc, anchor, expected, computed, 0.0, ok);
  return r;
}

}  // namespace

DeltaKernel::DeltaKernel(int order) : ops_(order) {}

DeltaKernel DeltaKernel::from_terms(int order, const std::vector<KernelTerm>& terms) {
  DeltaKernel k(order);
  for (const auto& t : terms) k.add(t);
  return k;
}

DeltaKernel DeltaKernel::from_operators(const EpsilonSeries<ReflectionOperator>& ops) {
  DeltaKernel k(ops.order());
  k.ops_ = ops;
  return k;
}

DeltaKernel DeltaKernel::delta_minus() {
  DeltaKernel k(0);
  k.ops_[0] = ReflectionOperator::identity();
  return k;
}

DeltaKernel DeltaKernel::delta_plus() {
  DeltaKernel k(0);
  k.ops_[0] = ReflectionOperator::reflection();
  return k;
}

void DeltaKernel::add(const KernelTerm& t) {
  if (t.eps_power < 0) throw std::invalid_argument("negative eps power");
  if (t.eps_power > order()) return;
  ops_[t.eps_power] += term_operator(t);
}

std::vector<KernelTerm> DeltaKernel::terms() const {
  std::vector<KernelTerm> out;
  for (int e = 0; e <= order(); ++e) {
    for (const auto& [key, c] : ops_[e].direct.terms())
      out.push_back({e, c, key.first, 0, key.second, DeltaParity::Minus});
    for (const auto& [key, c] : ops_[e].reflected.terms())
      out.push_back({e, c, key.first, 0, key.second, DeltaParity::Plus});
  }
  std::stable_sort(out.begin(), out.end(), [](const KernelTerm& u, const KernelTerm& v) {
    return std::tie(u.eps_power, u.parity, u.k, u.a) < std::tie(v.eps_power, v.parity, v.k, v.a);
  });
  return out;
}

DeltaKernel DeltaKernel::truncated(int order) const { return from_operators(ops_.truncated(order)); }

DeltaKernel DeltaKernel::conj() const {
  return from_operators(ops_.map([](const ReflectionOperator& r) { return r.conj(); }));
}

DeltaKernel operator+(const DeltaKernel& a, const DeltaKernel& b) { return DeltaKernel::from_operators(a.ops_ + b.ops_); }
DeltaKernel operator-(const DeltaKernel& a, const DeltaKernel& b) { return DeltaKernel::from_operators(a.ops_ - b.ops_); }

DeltaKernel operator*(const DeltaKernel& a, const DeltaKernel& b) {
  return DeltaKernel::from_operators(
      convolve(a.ops_, b.ops_, [](const ReflectionOperator& u, const ReflectionOperator& v) { return u * v; }));
}

std::string to_text(const DeltaKernel& k) {
  std::ostringstream os;
  os << "# eps_power, re, im, a, b, k, parity\n";
  os << "# order " << k.order() << '\n';
  for (const auto& t : k.terms())
    os << t.eps_power << ", " << rational_text(t.coeff.re) << ", " << rational_text(t.coeff.im) << ", " << t.a
       << ", " << t.b << ", " << t.k << ", " << parity_text(t.parity) << '\n';
  return os.str();
}

DeltaKernel kernel_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int order = -1;
  std::vector<KernelTerm> terms;
  while (std::getline(is, line)) {
    if (line.rfind("# order", 0) == 0) {
      order = std::stoi(line.substr(7));
      continue;
    }
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      cell.erase(0, cell.find_first_not_of(' '));
      cell.erase(cell.find_last_not_of(' ') + 1);
      f.push_back(cell);
    }
    if (f.size() != 7) throw std::invalid_argument("kernel line needs 7 fields: " + line);
    KernelTerm t;
    t.eps_power = std::stoi(f[0]);
    t.coeff = Scalar(parse_rational(f[1]), parse_rational(f[2]));
    t.a = std::stoi(f[3]);
    t.b = std::stoi(f[4]);
    t.k = std::stoi(f[5]);
    if (f[6] == "minus") t.parity = DeltaParity::Minus;
    else if (f[6] == "plus") t.parity = DeltaParity::Plus;
    else throw std::invalid_argument("bad parity '" + f[6] + "'");
    terms.push_back(t);
  }
  if (order < 0)
    for (const auto& t : terms) order = std::max(order, t.eps_power);
  return DeltaKernel::from_terms(std::max(order, 0), terms);
}

std::string pretty(const DeltaKernel& k) {
  std::ostringstream os;
  int last = -1;
  for (const auto& t : k.terms()) {
    if (t.eps_power != last) {
      if (last >= 0) os << '\n';
      os << "eps^" << t.eps_power << ":";
      last = t.eps_power;
    }
    os << "  (" << to_text(t.coeff) << ")";
    if (t.a) os << " x^" << t.a;
    if (t.k) os << " d^" << t.k;
    os << (t.parity == DeltaParity::Minus ? " delta(x-y)" : " delta(x+y)");
  }
  os << '\n';
  return os.str();
}

HermiteEpsSeries apply_kernel(const DeltaKernel& k, const HermiteSeries& f) {
  HermiteEpsSeries out(k.order());
  for (int e = 0; e <= k.order(); ++e) out[e] = k.at(e).apply(f);
  return out;
}

HermiteEpsSeries apply_kernel(const DeltaKernel& k, const HermiteEpsSeries& f) {
  return convolve(k.operators(), f, [](const ReflectionOperator& r, const HermiteSeries& g) { return r.apply(g); });
}

DeltaKernel reduce_bilinear_sum(const BilinearHermiteSum& s) {
  // group by shifted indices after re-indexing so that both shifts are nonnegative
  std::map<std::pair<int, int>, NPoly> grouped;
  for (const auto& term : s.terms) {
    if (term.alpha.is_zero()) continue;
    int t = std::max(0, -std::min(term.p, term.q));
    NPoly a;
    try {
      a = term.alpha.shifted(t).divided_by_rising(t) * Scalar(Rational(1, 1 << t));
    } catch (const std::domain_error&) {
      throw ReductionError("bilinear term with shifts (" + std::to_string(term.p) + ", " + std::to_string(term.q) +
                           ") has a prefactor that does not vanish on absent indices");
    }
    if (s.alternating && t % 2) a *= Scalar(-1);
    grouped[{term.p + t, term.q + t}] += a;
  }

  LadderCache cache;
  WeylOperator total;
  for (const auto& [pq, alpha] : grouped) {
    if (alpha.is_zero()) continue;
    WeylOperator middle;
    for (int j = 0; j <= alpha.degree(); ++j) middle += cache.num(j) * alpha.coeff(j);
    WeylOperator op = cache.up(pq.first) * middle * cache.down(pq.second);
    // alternating sums carry R to the right: R (x+d)^q = (-1)^q (x+d)^q R
    if (s.alternating && pq.second % 2) op *= Scalar(-1);
    total += op;
  }
  EpsilonSeries<ReflectionOperator> ops(0);
  if (s.alternating) ops[0].reflected = total;
  else ops[0].direct = total;
  return DeltaKernel::from_operators(ops);
}

std::vector<BilinearHermiteSum> spectral_bilinear_sums(const SymbolicTable& table, SpectralWeight w, int order) {
  if (order < 0 || order > table.order()) throw std::invalid_argument("order exceeds expansion table");
  // a_n^2 as polynomial series
  std::vector<NPoly> a2(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j) a2[static_cast<std::size_t>(i + j)] += table.norm[i] * table.norm[j];

  std::vector<BilinearHermiteSum> sums;
  for (int k = 0; k <= order; ++k) {
    std::map<std::pair<int, int>, NPoly> acc;
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; i + j <= k; ++j) {
        int rest = k - i - j;
        NPoly pref;
        if (w == SpectralWeight::Hamiltonian) {
          for (int l = 0; l <= rest; ++l) pref += a2[static_cast<std::size_t>(l)] * table.energy[rest - l];
        } else {
          pref = a2[static_cast<std::size_t>(rest)];
        }
        if (pref.is_zero()) continue;
        for (const auto& tp : table.bracket[i]) {
          for (const auto& tq : table.bracket[j]) {
            NPoly alpha = pref * tp.coeff * tq.coeff;
            if (w == SpectralWeight::Parity && (tq.shift % 2 != 0)) alpha *= Scalar(-1);
            acc[{tp.shift, tq.shift}] += alpha;
          }
        }
      }
    }
    BilinearHermiteSum s;
    s.alternating = (w == SpectralWeight::C || w == SpectralWeight::Parity);
    for (auto& [pq, alpha] : acc)
      if (!alpha.is_zero()) s.terms.push_back({alpha, pq.first, pq.second});
    sums.push_back(std::move(s));
  }
  return sums;
}

DeltaKernel spectral_kernel(const SymbolicTable& table, SpectralWeight w, int order) {
  auto sums = spectral_bilinear_sums(table, w, order);
  EpsilonSeries<ReflectionOperator> ops(order);
  for (int k = 0; k <= order; ++k) ops[k] = reduce_bilinear_sum(sums[static_cast<std::size_t>(k)]).at(0);
  return DeltaKernel::from_operators(ops);
}

DeltaKernel c_from_eigenfunctions(int order) { return spectral_kernel(cubic_symbolic_table(), SpectralWeight::C, order); }
DeltaKernel parity_from_eigenfunctions(int order) {
  return spectral_kernel(cubic_symbolic_table(), SpectralWeight::Parity, order);
}
DeltaKernel identity_from_eigenfunctions(int order) {
  return spectral_kernel(cubic_symbolic_table(), SpectralWeight::Identity, order);
}
DeltaKernel hamiltonian_from_eigenfunctions(int order) {
  return spectral_kernel(cubic_symbolic_table(), SpectralWeight::Hamiltonian, order);
}

WeylOperator generator_a() {
  WeylOperator x = WeylOperator::x(), d = WeylOperator::d();
  return d.pow(3) * q(4, 3) - x * d * x * q(2);
}

WeylOperator generator_b() {
  WeylOperator x = WeylOperator::x(), d = WeylOperator::d();
  return d.pow(5) * q(128, 15) - x * d.pow(3) * x * q(40, 3) + x.pow(2) * d * x.pow(2) * q(8) - d * q(32);
}

DeltaKernel exponentiated_c(int order) {
  if (order < 0) throw std::invalid_argument("negative order");
  EpsilonSeries<WeylOperator> g(order);
  if (order >= 1) g[1] = generator_a() * Scalar(0, -1);
  if (order >= 3) g[3] = generator_b() * Scalar(0, -1);
  auto mul = [](const WeylOperator& u, const WeylOperator& v) { return u * v; };
  EpsilonSeries<WeylOperator> term(order, WeylOperator::identity());
  EpsilonSeries<WeylOperator> sum = term;
  for (int j = 1; j <= order; ++j) {
    term = convolve(term, g, mul);
    Rational inv = 1 / factorial(static_cast<unsigned>(j));
    sum += term.map([&](const WeylOperator& w) { return w * Scalar(inv); });
  }
  EpsilonSeries<ReflectionOperator> ops(order);
  for (int k = 0; k <= order; ++k) ops[k].reflected = sum[k];
  return DeltaKernel::from_operators(ops);
}

std::vector<KernelTerm> reference_c_terms() {
  const auto P = DeltaParity::Plus;
  const Scalar i = Scalar::i();
  return {
      {0, q(1), 0, 0, 0, P},
      {1, q(-4, 3) * i, 0, 0, 3, P},
      {1, q(-2) * i, 1, 1, 1, P},
      {2, q(-8, 9), 0, 0, 6, P},
      {2, q(-8, 3), 1, 1, 4, P},
      {2, q(-2), 2, 2, 2, P},
      {2, q(12), 0, 0, 2, P},
      {3, q(32, 81) * i, 0, 0, 9, P},
      {3, q(16, 9) * i, 1, 1, 7, P},
      {3, q(8, 3) * i, 2, 2, 5, P},
      {3, q(-176, 5) * i, 0, 0, 5, P},
      {3, q(4, 3) * i, 3, 3, 3, P},
      {3, q(-48) * i, 1, 1, 3, P},
      {3, q(-8) * i, 2, 2, 1, P},
      {3, q(64) * i, 0, 0, 1, P},
  };
}

DeltaKernel reference_c_kernel() { return DeltaKernel::from_terms(3, reference_c_terms()); }

DeltaKernel cubic_hamiltonian_kernel() {
  const auto M = DeltaParity::Minus;
  return DeltaKernel::from_terms(3, {{0, q(-1, 2), 0, 0, 2, M}, {0, q(1, 2), 2, 0, 0, M}, {1, Scalar::i(), 3, 0, 0, M}});
}

VerificationReport kernel_compose_check(const DeltaKernel& k, int basis_size, const std::string& label) {
  if (basis_size < 1) throw std::invalid_argument("basis size must be positive");
  std::string failure;
  for (int m = 0; m < basis_size && failure.empty(); ++m) {
    HermiteSeries f = HermiteSeries::basis(m);
    HermiteEpsSeries g = apply_kernel(k, apply_kernel(k, f));
    for (int e = 0; e <= g.order(); ++e) {
      bool ok = e == 0 ? g[0] == f : g[e].is_zero();
      if (!ok) {
        failure = "m=" + std::to_string(m) + " eps^" + std::to_string(e);
        break;
      }
    }
  }
  return single("compose." + label, label + " applied twice is the identity on H_m, m<" + std::to_string(basis_size),
                "C^2 = 1 through eps^" + std::to_string(k.order()), "identity",
                failure.empty() ? "identity" : "mismatch at " + failure, failure.empty());
}

VerificationReport kernel_eigencheck(const DeltaKernel& k, int n, const SymbolicTable& table) {
  PerturbativeWavefunction wf = instantiate(table, n);
  HermiteEpsSeries phi = wf.payload().truncated(k.order());
  HermiteEpsSeries lhs = apply_kernel(k, phi);
  Scalar sign(n % 2 ? -1 : 1);
  std::string failure;
  for (int e = 0; e <= lhs.order(); ++e)
    if (!(lhs[e] == phi[e] * sign)) {
      failure = "eps^" + std::to_string(e);
      break;
    }
  return single("eigen.n" + std::to_string(n), "C phi_n = (-1)^n phi_n", "C eigenvalues on eigenstates",
                std::string(n % 2 ? "-" : "+") + "phi_" + std::to_string(n),
                failure.empty() ? "match" : "mismatch at " + failure, failure.empty());
}

VerificationReport cp_pc_check(const DeltaKernel& c) {
  DeltaKernel p = DeltaKernel::from_operators(EpsilonSeries<ReflectionOperator>(c.order(), ReflectionOperator::reflection()));
  bool ok = c * p == (p * c).conj();
  return single("cp_pc", "C P equals the complex conjugate of P C", "CP = (PC)*", "equal",
                ok ? "equal" : "differ", ok);
}

}  // namespace ptc
