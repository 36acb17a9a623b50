#pragma once

#include "ptc/perturbation.hpp"
#include "ptc/report.hpp"
#include "ptc/weyl.hpp"

#include <string>
#include <vector>

namespace ptc {

enum class DeltaParity { Minus, Plus };  // delta(x - y), delta(x + y)

// coeff * eps^eps_power * x^a y^b d_x^k delta(x -+ y)
struct KernelTerm {
  int eps_power = 0;
  Scalar coeff;
  int a = 0;
  int b = 0;
  int k = 0;
  DeltaParity parity = DeltaParity::Minus;
};

// Two-point distribution sum of polynomial-coefficient delta derivatives, truncated in eps.
// Stored in normal form: per eps power, an operator D0 + D1 R acting as
// D0 delta(x-y) + D1 delta(x+y) with no y powers left.
class DeltaKernel {
 public:
  explicit DeltaKernel(int order = 0);
  static DeltaKernel from_terms(int order, const std::vector<KernelTerm>& terms);
  static DeltaKernel from_operators(const EpsilonSeries<ReflectionOperator>& ops);
  static DeltaKernel delta_minus();
  static DeltaKernel delta_plus();

  int order() const { return ops_.order(); }
  const ReflectionOperator& at(int eps_power) const { return ops_[eps_power]; }
  const EpsilonSeries<ReflectionOperator>& operators() const { return ops_; }

  void add(const KernelTerm& t);
  // normal-form term list, sorted by (eps power, parity, k, a)
  std::vector<KernelTerm> terms() const;
  DeltaKernel truncated(int order) const;
  DeltaKernel normalized() const { return *this; }
  // complex conjugate of every coefficient (eps real)
  DeltaKernel conj() const;
  // value at eps = 0
  DeltaKernel leading() const { return truncated(0); }

  friend DeltaKernel operator+(const DeltaKernel& a, const DeltaKernel& b);
  friend DeltaKernel operator-(const DeltaKernel& a, const DeltaKernel& b);
  // operator composition truncated at the smaller order
  friend DeltaKernel operator*(const DeltaKernel& a, const DeltaKernel& b);
  friend bool operator==(const DeltaKernel& a, const DeltaKernel& b) { return a.ops_ == b.ops_; }

 private:
  EpsilonSeries<ReflectionOperator> ops_;
};

std::string to_text(const DeltaKernel& k);
DeltaKernel kernel_from_text(const std::string& text);
// human-readable form, e.g. "eps^1: -4/3 i d^3 delta(x+y) + ..."
std::string pretty(const DeltaKernel& k);

HermiteEpsSeries apply_kernel(const DeltaKernel& k, const HermiteSeries& f);
HermiteEpsSeries apply_kernel(const DeltaKernel& k, const HermiteEpsSeries& f);

// sum_{n>=0} [(-1)^n if alternating] alpha(n)/(2^n n!) H_{n+p}(x) H_{n+q}(y) e^{-(x^2+y^2)/2}/sqrt(pi)
struct BilinearTerm {
  NPoly alpha;
  int p = 0;
  int q = 0;
};

struct BilinearHermiteSum {
  bool alternating = false;
  std::vector<BilinearTerm> terms;
};

class ReductionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Single-order kernel; throws ReductionError for irreducible terms.
DeltaKernel reduce_bilinear_sum(const BilinearHermiteSum& s);

enum class SpectralWeight {
  C,            // sum phi_n(x) phi_n(y)
  Parity,       // sum (-1)^n phi_n(x) phi_n(-y)
  Identity,     // sum (-1)^n phi_n(x) phi_n(y)
  Hamiltonian,  // sum (-1)^n E_n phi_n(x) phi_n(y)
};

// Bilinear sums for each eps power generated by the given expansion table.
std::vector<BilinearHermiteSum> spectral_bilinear_sums(const SymbolicTable& table, SpectralWeight w, int order);
DeltaKernel spectral_kernel(const SymbolicTable& table, SpectralWeight w, int order);

DeltaKernel c_from_eigenfunctions(int order = 3);
DeltaKernel parity_from_eigenfunctions(int order = 3);
DeltaKernel identity_from_eigenfunctions(int order = 3);
DeltaKernel hamiltonian_from_eigenfunctions(int order = 3);

// exp(-i eps A - i eps^3 B) delta(x+y)
WeylOperator generator_a();
WeylOperator generator_b();
DeltaKernel exponentiated_c(int order);

// The closed-form third-order C kernel with its x y coefficient products.
DeltaKernel reference_c_kernel();
std::vector<KernelTerm> reference_c_terms();

// (-1/2 d^2 + 1/2 x^2 + i eps x^3) delta(x-y)
DeltaKernel cubic_hamiltonian_kernel();

VerificationReport kernel_compose_check(const DeltaKernel& k, int basis_size, const std::string& label = "C");
VerificationReport kernel_eigencheck(const DeltaKernel& k, int n, const SymbolicTable& table = cubic_symbolic_table());
// C P = (P C)^* at the kernel level
VerificationReport cp_pc_check(const DeltaKernel& c);

}  // namespace ptc
