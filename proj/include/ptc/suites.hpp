#pragma once

#include "ptc/perturbation.hpp"
#include "ptc/report.hpp"
#include "ptc/spectral.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ptc {

enum class Profile { Quick, Full };
std::string to_string(Profile p);
Profile parse_profile(const std::string& s);

// Exact sum_r c_r sqrt(r) over square-free radicands r.
class SurdSum {
 public:
  // adds c / sqrt(k) for a positive integer k
  void add_inverse_sqrt(const Scalar& c, const mpz_class& k);
  void add(const Scalar& c, const mpz_class& radicand = 1);
  bool is_rational() const;
  Scalar rational_part() const;
  const std::map<mpz_class, Scalar>& terms() const { return terms_; }
  bool operator==(const SurdSum& o) const { return terms_ == o.terms_; }
  std::string text() const;

 private:
  std::map<mpz_class, Scalar> terms_;
};

// (a, b) with k = a^2 b and b square free.
std::pair<mpz_class, mpz_class> square_free_split(const mpz_class& k);

// Coefficients (re + i im)/4 with re, im uniform on -4..4.
std::vector<Scalar> random_grid_coefficients(std::uint64_t seed, int trial, int levels);

// <phi_m|phi_n> = int [CPT phi_m](x) phi_n(x) dx through the C kernel, parity and conjugation, with the
// surd (2^m m! 2^n n!)^{-1/2} divided out, for m, n < levels.
struct CptGram {
  int levels = 0;
  std::vector<std::vector<ScalarSeries>> r;

  CptGram(const SymbolicTable& table, int levels);
  // <f|f> for f = sum c_n phi_n, one exact surd sum per power of eps
  std::vector<SurdSum> norm(const std::vector<Scalar>& c) const;
};
// The same quantity from solver eigenpairs on a shared grid, with the truncated numeric C kernel
// C(x, y) = sum_m phi_m(x) phi_m(y).
std::complex<double> cpt_norm_numeric(const std::vector<Eigenpair>& pairs, const std::vector<std::complex<double>>& c);

struct CptNormOptions {
  bool symbolic = true;
  bool numeric = true;
  const SymbolicTable* table = nullptr;  // override of the expansion table
};

VerificationReport cpt_norm_suite(Model model, double eps, int levels, int trials, std::uint64_t seed,
                                  const CptNormOptions& opt = {});

// Mollified sum_{n<N} [CPT phi_n](x) phi_n(y) against delta(x - y) at (0.4, 0.1), width 0.25,
// for N = 20, 40, 80 (N = max level count). eps = 0 uses oscillator functions.
VerificationReport cpt_completeness_check(Model model, double eps, int levels);

struct SuiteOptions {
  Profile profile = Profile::Quick;
  std::uint64_t seed = 42;
  const SymbolicTable* cubic_table = nullptr;  // replaces the cubic table, for mutation testing
};

VerificationReport special_suite(const SuiteOptions& opt);
VerificationReport perturbation_suite(const SuiteOptions& opt);
VerificationReport kernel_suite(const SuiteOptions& opt);
VerificationReport solver_suite(const SuiteOptions& opt);
VerificationReport greens_suite(const SuiteOptions& opt);
VerificationReport quartic_suite(const SuiteOptions& opt);

// All module suites in dependency order, ids prefixed by module.
VerificationReport run_all(const SuiteOptions& opt);

// One-coefficient corruption of the cubic table (87 -> 86 in the normalization polynomial).
SymbolicTable mutated_cubic_table();

}  // namespace ptc
