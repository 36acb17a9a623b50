#pragma once

#include "ptc/hermite_series.hpp"
#include "ptc/polynomial.hpp"

#include <string>
#include <vector>

namespace ptc {

enum class Model { Cubic, Quartic };

std::string to_string(Model m);
Model parse_model(const std::string& s);
int max_order(Model m);

// coeff(n) * H_{n+shift}
struct HermiteTerm {
  int shift = 0;
  NPoly coeff;
};

// Level-independent description of an expansion: bracket, energy and normalization
// as polynomials in n, one entry per power of epsilon.
struct SymbolicTable {
  Model model = Model::Cubic;
  std::vector<std::vector<HermiteTerm>> bracket;
  std::vector<NPoly> energy;
  std::vector<NPoly> norm;

  int order() const { return static_cast<int>(bracket.size()) - 1; }
};

// phi_n = i^n a_n pi^{-1/4} (2^n n!)^{-1/2} e^{-x^2/2} [bracket].
struct PerturbativeWavefunction {
  int n = 0;
  Model model = Model::Cubic;
  HermiteEpsSeries bracket;
  ScalarSeries a;

  int order() const { return bracket.order(); }
  // i^n a_n [bracket]; the normalization factor pi^{-1/4}(2^n n!)^{-1/2} is left out.
  HermiteEpsSeries payload() const;
  std::complex<double> evaluate(double x, double eps) const;

  friend bool operator==(const PerturbativeWavefunction& u, const PerturbativeWavefunction& v) {
    return u.n == v.n && u.model == v.model && u.bracket == v.bracket && u.a == v.a;
  }
};

const SymbolicTable& cubic_symbolic_table();
const SymbolicTable& quartic_symbolic_table();
const SymbolicTable& symbolic_table(Model m);

PerturbativeWavefunction instantiate(const SymbolicTable& table, int n);
ScalarSeries energy_series(const SymbolicTable& table, int n);

PerturbativeWavefunction cubic_table_wavefunction(int n);
PerturbativeWavefunction quartic_table_wavefunction(int n);
ScalarSeries cubic_energy(int n);
ScalarSeries quartic_energy(int n);

struct Derivation {
  PerturbativeWavefunction wavefunction;
  ScalarSeries energy;
};

// Rayleigh-Schroedinger recursion in the Hermite basis, PT-normalized.
Derivation derive_wavefunction(Model model, int n, int order);

// (H - E) applied to the bracket, order by order; exact zero for a correct expansion.
HermiteEpsSeries schrodinger_residual(const PerturbativeWavefunction& wf, const ScalarSeries& energy);

// int phi_m phi_n dx with the surd (2^m m! 2^n n!)^{-1/2} divided out:
// (phi_m, phi_n) = surd * result.
ScalarSeries pt_overlap_rational(const PerturbativeWavefunction& m, const PerturbativeWavefunction& n);
// (phi_n, phi_n), rational through the stored order.
ScalarSeries pt_norm(const PerturbativeWavefunction& wf);

// Evaluates a scalar series at a numeric epsilon.
std::complex<double> evaluate(const ScalarSeries& s, double eps);

}  // namespace ptc
