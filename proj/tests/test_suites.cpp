#include "doctest.h"
#include "ptc/suites.hpp"

#include <cmath>

using namespace ptc;

TEST_CASE("square-free split and surd sums") {
  auto [a, b] = square_free_split(mpz_class(72));
  CHECK(a == 6);
  CHECK(b == 2);
  auto [c, d] = square_free_split(mpz_class(2 * 3 * 3 * 5 * 5 * 5));
  CHECK(c == 15);
  CHECK(d == 10);
  CHECK_THROWS_AS(square_free_split(mpz_class(0)), std::invalid_argument);

  SurdSum s;
  s.add_inverse_sqrt(Scalar(3), mpz_class(8));  // 3/sqrt 8 = 3/4 sqrt 2
  s.add(Scalar(Rational(-3, 4)), mpz_class(2));
  CHECK(s.terms().empty());
  CHECK(s.is_rational());
  s.add(Scalar(Rational(1, 2)), mpz_class(18));  // 1/2 sqrt 18 = 3/2 sqrt 2
  CHECK_FALSE(s.is_rational());
  CHECK(s.terms().at(2) == Scalar(Rational(3, 2)));
  s.add_inverse_sqrt(Scalar(5), mpz_class(25));
  CHECK(s.rational_part() == Scalar(1));
}

TEST_CASE("random coefficients are deterministic and on the grid") {
  auto a = random_grid_coefficients(42, 3, 6), b = random_grid_coefficients(42, 3, 6);
  CHECK(a == b);
  CHECK_FALSE(a == random_grid_coefficients(43, 3, 6));
  for (const auto& c : a) {
    CHECK(Rational(c.re * 4).get_den() == 1);
    CHECK(abs(c.re) <= 1);
    CHECK(abs(c.im) <= 1);
  }
}

TEST_CASE("exact CPT norm") {
  CptGram g(cubic_symbolic_table(), 4);
  // phi_1 alone: the C factor cancels the negative PT norm
  auto one = g.norm({Scalar(0), Scalar(1)});
  REQUIRE(one.size() == 4);
  CHECK(one[0].rational_part() == Scalar(1));
  CHECK(one[0].is_rational());
  for (int k = 1; k <= 3; ++k) CHECK(one[k].terms().empty());
  auto mix = g.norm({Scalar(3), Scalar(0), Scalar(0, 4)});
  CHECK(mix[0].rational_part() == Scalar(25));
  // mixed levels: cross terms cancel inside every surd class, 1 + 1 + 13/16 + 1
  auto cross = g.norm({Scalar(1), Scalar(1), Scalar(Rational(1, 2), Rational(-3, 4)), Scalar(0, 1)});
  CHECK(cross[0].is_rational());
  CHECK(cross[0].rational_part() == Scalar(Rational(61, 16)));
  for (int k = 1; k <= 3; ++k) CHECK(cross[k].terms().empty());

  // a corrupted normalization breaks exactness
  SymbolicTable bad = mutated_cubic_table();
  CptGram gb(bad, 2);
  auto broken = gb.norm({Scalar(1)});
  CHECK_FALSE(broken[2].terms().empty());
}

TEST_CASE("CPT norm suite") {
  auto rep = cpt_norm_suite(Model::Cubic, 0.05, 6, 25, 7);
  CHECK(rep.all_passed());
  CHECK(rep.find("symbolic_3phi0_4iphi2")->status == CheckStatus::Pass);
  CHECK(rep.find("numeric_random_trials")->status == CheckStatus::Pass);
  CHECK_THROWS_AS(cpt_norm_suite(Model::Cubic, 0.05, 6, 0, 7), std::invalid_argument);
}

TEST_CASE("CPT completeness") {
  auto free = cpt_completeness_check(Model::Cubic, 0.0, 80);
  CHECK(free.all_passed());
  auto quartic = cpt_completeness_check(Model::Quartic, 0.05, 80);
  REQUIRE(quartic.checks().size() == 1);
  CHECK(quartic.checks()[0].status == CheckStatus::Skip);
}

TEST_CASE("suites are deterministic and catch a corrupted coefficient") {
  SuiteOptions opt;
  auto a = perturbation_suite(opt), b = perturbation_suite(opt);
  REQUIRE(a.checks().size() == b.checks().size());
  for (std::size_t i = 0; i < a.checks().size(); ++i) CHECK(a.checks()[i].computed == b.checks()[i].computed);
  CHECK(a.all_passed());
  SymbolicTable bad = mutated_cubic_table();
  opt.cubic_table = &bad;
  auto m = perturbation_suite(opt);
  CHECK(m.find("cubic_pt_norm_n0")->status == CheckStatus::Fail);
  CHECK(parse_profile("full") == Profile::Full);
  CHECK_THROWS_AS(parse_profile("slow"), std::invalid_argument);
}
