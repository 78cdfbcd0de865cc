#include "qformlab/eisenstein.hpp"
#include "qformlab/quadforms.hpp"

#include <doctest.h>

using namespace qformlab;

TEST_SUITE("eisenstein") {
  const DirichletChar kOne(1), kM4(-4);

  TEST_CASE("constant terms and leading coefficient") {
    CHECK(eisenstein3(EisensteinSpec(kM4, kOne), 5).q_coefficient(0) == Rational(-1, 4));
    CHECK(eisenstein3(EisensteinSpec(kOne, kM4), 5).q_coefficient(0) == Rational(0));
    for (int d : {-3, -4, -8, -24}) {
      CHECK(eisenstein3(EisensteinSpec(DirichletChar(d), kOne), 3).q_coefficient(1) == Rational(1));
      CHECK(eisenstein3(EisensteinSpec(kOne, DirichletChar(d)), 3).q_coefficient(1) == Rational(1));
    }
    CHECK(eisenstein3(EisensteinSpec(DirichletChar(-3), DirichletChar(8)), 3).q_coefficient(1) == Rational(1));
  }

  TEST_CASE("parity is enforced") {
    CHECK_THROWS(EisensteinSpec(DirichletChar(8), kOne));
    CHECK_THROWS(EisensteinSpec(kM4, DirichletChar(-3)));
    CHECK_THROWS(EisensteinSpec(kM4, kOne, 0));
  }

  TEST_CASE("text form") {
    const auto s = EisensteinSpec::parse("E3[-4,1,2]");
    CHECK(s.chi == kM4);
    CHECK(s.psi == kOne);
    CHECK(s.scale == 2);
    CHECK(s.to_string() == "E3[-4,1,2]");
    CHECK(EisensteinSpec::parse("E3[1,-8]").scale == 1);
    CHECK_THROWS(EisensteinSpec::parse("E3[-4,1,x]"));
  }

  TEST_CASE("scaling") {
    for (const auto& [chi, psi] : {std::pair{kM4, kOne}, std::pair{kOne, DirichletChar(-3)}}) {
      const auto base = eisenstein3(EisensteinSpec(chi, psi, 1), 40);
      for (std::int64_t t : {2, 3, 6, 8}) {
        const auto e = eisenstein3(EisensteinSpec(chi, psi, t), 40 * t);
        for (std::int64_t n = 0; n < 40 * t; ++n) {
          CHECK(e.q_coefficient(n) == (n % t ? Rational(0) : base.q_coefficient(n / t)));
        }
      }
    }
  }

  TEST_CASE("six squares pin down the index convention") {
    const auto f = linear_combination<Rational, Rational>({Rational(-4), Rational(16)},
                                                {eisenstein3(EisensteinSpec(kM4, kOne), 51),
                                                 eisenstein3(EisensteinSpec(kOne, kM4), 51)});
    CHECK(f.q_coefficient(0) == Rational(1));
    const auto form = QuadForm::from_coefficients({1, 1, 1, 1, 1, 1});
    for (std::int64_t n = 1; n <= 50; ++n) CHECK(f.q_coefficient(n) == Rational(rep_count_bruteforce(form, n)));
  }
}
