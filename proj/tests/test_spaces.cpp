#include "qformlab/newforms.hpp"
#include "qformlab/quadforms.hpp"
#include "qformlab/spaces.hpp"

#include <doctest.h>

#include <set>

using namespace qformlab;

TEST_SUITE("spaces") {
  TEST_CASE("basis shapes") {
    const auto b3 = build_basis(DirichletChar(-3));
    CHECK(b3.eisenstein_part.size() == 8);
    CHECK(b3.cusp_part.size() == 4);
    CHECK(b3.sturm_bound == 12);
    const auto b8 = build_basis(DirichletChar(-8));
    CHECK(b8.eisenstein_part.size() == 4);
    CHECK(b8.cusp_part.size() == 6);
    const auto b24 = build_basis(DirichletChar(-24));
    CHECK(b24.eisenstein_part.size() == 4);
    CHECK(b24.cusp_part.size() == 6);
    CHECK(build_basis(DirichletChar(-4)).size() == 12);
    CHECK_THROWS(build_basis(DirichletChar(8)));
    CHECK(b24.eisenstein_part[2].to_string() == "E3[-3,8,1]");
  }

  TEST_CASE("basis dump order") {
    const auto names = basis_names(build_basis(DirichletChar(-4)));
    REQUIRE(names.size() == 12);
    CHECK(names[0] == "E3[-4,1,1]");
    CHECK(names[3] == "E3[-4,1,6]");
    CHECK(names[4] == "E3[1,-4,1]");
    CHECK(names[11] == "eta24[0,1,0,1,1,0,-1,4]");
  }

  TEST_CASE("all four bases verify") {
    for (const auto& chi : supported_characters()) {
      const auto rep = verify_basis(build_basis(chi), 60);
      CHECK(rep.ok());
      CHECK(rep.rank == bundled_dimension(chi));
      CHECK(rep.rank == rep.size);
      CHECK(rep.distinct_valuations);
      CHECK(build_basis(chi).cusp_part.size() == bundled_cusp_dimension(chi));
    }
    CHECK_THROWS(verify_basis(build_basis(DirichletChar(-3)), 12));
  }

  TEST_CASE("duplicated element is reported as rank deficient") {
    auto b = build_basis(DirichletChar(-3));
    b.eisenstein_part.push_back(b.eisenstein_part.front());
    auto rep = verify_basis(b, 30);
    CHECK_FALSE(rep.ok());
    CHECK(rep.rank < rep.size);

    auto c = build_basis(DirichletChar(-8));
    c.cusp_part.push_back(c.cusp_part.back());
    rep = verify_basis(c, 30);
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.distinct_valuations);
  }

  TEST_CASE("solve_in_basis examples") {
    const auto b4 = build_basis(DirichletChar(-4));
    const auto x = solve_in_basis(genfun(ExponentVector(6, 0, 0, 0), 61), b4, 61);
    std::vector<Rational> expected(12, Rational(0));
    expected[0] = Rational(-4);
    expected[4] = Rational(16);
    CHECK(x == expected);

    const auto zero = solve_in_basis(QSeries<Rational>(kGrade * 61), b4, 61);
    CHECK(zero == std::vector<Rational>(12, Rational(0)));

    // A weight-3 form for another character is not in the span.
    CHECK_THROWS_AS(solve_in_basis(genfun(ExponentVector(5, 0, 1, 0), 61), b4, 61), std::runtime_error);
    CHECK_THROWS(solve_in_basis(genfun(ExponentVector(6, 0, 0, 0), 10), b4, 61));
  }

  TEST_CASE("newform expansion solves back over the quadratic field") {
    const auto f = f1_reference_expansion();
    const auto span = cached_basis(DirichletChar(-3), 10)->cusp;
    const auto x = solve_in_span(f, span, 10, 10);
    REQUIRE(x);
    const auto a = NFE::generator(newform_spec(1).field);
    CHECK((*x)[0] == NFE(1));
    CHECK((*x)[1] == NFE(0));
    CHECK((*x)[2] == a + NFE(3));
    CHECK((*x)[3] == NFE(4));
  }

  TEST_CASE("Sturm soundness: 13 coefficients determine every table identity through q^60") {
    for (const auto& l : all_exponent_vectors()) {
      const auto chi = classify(l);
      const auto expanded = cached_basis(chi, 61);
      const auto f = genfun(l, 61);
      const auto x = solve_in_span(f, expanded->all(), 13, 13);
      REQUIRE(x);
      const auto g = linear_combination(*x, expanded->all());
      for (std::int64_t n = 0; n <= 60; ++n) CHECK(g.q_coefficient(n) == f.q_coefficient(n));
    }
  }
}
