#include "qformlab/newforms.hpp"

#include <doctest.h>

using namespace qformlab;

TEST_SUITE("newforms") {
  TEST_CASE("specs") {
    for (int i = 1; i <= 5; ++i) {
      const auto s = newform_spec(i);
      CHECK(s.combo.size() == bundled_cusp_dimension(s.character));
      CHECK(s.combo.front() == NFE(1));
    }
    CHECK(newform_spec(1).field->degree() == 2);
    CHECK(newform_spec(2).field->degree() == 4);
    CHECK(newform_spec(3).field->degree() == 1);
    CHECK_THROWS(newform_spec(0));
    CHECK_THROWS(newform_spec(6));
  }

  TEST_CASE("f1 coefficients") {
    const auto f = build_newform(1, 50);
    const auto a = NFE::generator(newform_spec(1).field);
    CHECK(f.q_coefficient(1) == NFE(1));
    CHECK(f.q_coefficient(2) == NFE(0));
    CHECK(f.q_coefficient(3) == a);
    CHECK(f.q_coefficient(5) == NFE(2) - NFE(2) * a);
    CHECK(f.q_coefficient(7) == NFE(-6));
    CHECK(f.q_coefficient(9) == NFE(2) * a - NFE(9));
    CHECK(f.q_coefficient(15) == f.q_coefficient(3) * f.q_coefficient(5));
    CHECK(f.q_coefficient(49) == NFE(-13));
    // alpha^2 = 2 alpha - 9 is what makes a(9) = a(3)^2.
    CHECK(a * a == NFE(2) * a - NFE(9));
    for (std::int64_t n = 0; n < 10; ++n) CHECK(f.q_coefficient(n) == f1_reference_expansion().q_coefficient(n));
  }

  TEST_CASE("rational newforms have rational coefficients") {
    for (int i : {3, 4}) {
      const auto f = build_newform(i, 40);
      for (std::int64_t n = 0; n < 40; ++n) CHECK(f.q_coefficient(n).is_rational());
    }
  }

  TEST_CASE("all five combinations are normalized eigenforms") {
    for (int i = 1; i <= 5; ++i) {
      const auto res = verify_newform(i);
      CHECK(res.report.ok());
      CHECK(res.report.relations_checked > 50);
      CHECK(res.solve_back_ok);
      CHECK_FALSE(res.fallback);
    }
  }

  TEST_CASE("a non-normalized series is rejected") {
    const auto f = build_newform(1, 30);
    const auto g = f * QSeries<NFE>::monomial(NFE(2), 0);
    CHECK_THROWS_AS(check_eigenform(g, DirichletChar(-3), 30), std::domain_error);
  }

  TEST_CASE("a perturbed combination fails the Hecke relations") {
    auto spec = newform_spec(4);
    spec.combo[1] = spec.combo[1] + NFE(1);
    const auto rep = check_eigenform(build_newform(spec, 60), spec.character, 60);
    CHECK_FALSE(rep.ok());
    CHECK(rep.first_failure);
    CHECK(rep.in_cusp_space);
  }

  TEST_CASE("linear re-derivation reproduces the reference combinations") {
    for (int i = 1; i <= 5; ++i) {
      const auto spec = newform_spec(i);
      const auto r = rederive_newform(spec, 60);
      REQUIRE(r.combo);
      CHECK(r.differing_positions.empty());
    }
  }
}
