#include "qformlab/quadforms.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace qformlab;

namespace {

std::vector<Rational> rs(std::initializer_list<Rational> xs) { return xs; }

}  // namespace

TEST_SUITE("quadforms") {
  TEST_CASE("exponent vectors") {
    const auto all = all_exponent_vectors();
    REQUIRE(all.size() == 84);
    CHECK(all.front() == ExponentVector(6, 0, 0, 0));
    CHECK(all.back() == ExponentVector(0, 0, 0, 6));
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i] < all[i - 1]);
    CHECK_THROWS(ExponentVector(1, 1, 1, 1));
    CHECK_THROWS(ExponentVector(7, -1, 0, 0));
    CHECK(ExponentVector(0, 3, 1, 2).to_string() == "0,3,1,2");
  }

  TEST_CASE("quad form construction") {
    const auto f = QuadForm::from_coefficients({1, 1, 1, 1, 3, 3});
    CHECK(f.exponent_vector() == ExponentVector(4, 0, 2, 0));
    CHECK(f.variables() == std::vector<std::int64_t>{3, 3, 1, 1, 1, 1});
    CHECK_FALSE(QuadForm::from_coefficients({1, 1, 5}).exponent_vector());
    CHECK_THROWS(QuadForm::from_coefficients({1, 0, 1}));
  }

  TEST_CASE("classification cases") {
    CHECK(classify({6, 0, 0, 0}) == DirichletChar(-4));
    CHECK(classify({5, 0, 1, 0}) == DirichletChar(-3));
    CHECK(classify({5, 1, 0, 0}) == DirichletChar(-8));
    CHECK(classify({5, 0, 0, 1}) == DirichletChar(-24));
    int counts[4] = {0, 0, 0, 0};
    for (const auto& l : all_exponent_vectors()) {
      const auto d = classify(l).discriminant();
      counts[d == -3 ? 0 : d == -4 ? 1 : d == -8 ? 2 : 3]++;
    }
    CHECK(counts[0] + counts[1] + counts[2] + counts[3] == 84);
    for (int c : counts) CHECK(c > 0);
  }

  TEST_CASE("generating function eta quotient") {
    const auto e = genfun_eta_quotient({6, 0, 0, 0});
    CHECK(e.to_string() == "eta24[-12,30,0,-12,0,0,0,0]");
    // The generating function carries the classified character.
    for (const auto& l : all_exponent_vectors()) {
      CHECK(character_of(genfun_eta_quotient(l)) == classify(l));
      CHECK(genfun_eta_quotient(l).weight() == Rational(3));
    }
  }

  TEST_CASE("brute force examples") {
    const auto six = QuadForm::from_coefficients({1, 1, 1, 1, 1, 1});
    CHECK(rep_count_bruteforce(six, 0) == 1);
    CHECK(rep_count_bruteforce(six, 1) == 12);
    CHECK(rep_count_bruteforce(six, 2) == 60);
    CHECK(rep_count_bruteforce(six, 5) == 312);
    CHECK(rep_count_bruteforce(QuadForm::from_coefficients({1, 1, 1, 1, 3, 3}), 10) == 496);
    CHECK(rep_count_bruteforce(six, -1) == 0);
  }

  TEST_CASE("derive_formula examples") {
    const auto a = derive_formula({5, 0, 1, 0});
    CHECK(a.character == DirichletChar(-3));
    REQUIRE(a.eisenstein_coeffs.size() == 8);
    CHECK(std::vector<Rational>(a.eisenstein_coeffs.begin(), a.eisenstein_coeffs.begin() + 4) ==
          rs({Rational(1), Rational(-2), Rational(-8), Rational(0)}));
    CHECK(std::vector<Rational>(a.eisenstein_coeffs.begin() + 4, a.eisenstein_coeffs.end()) ==
          rs({Rational(9), Rational(18), Rational(-72), Rational(0)}));

    const auto b = derive_formula({5, 0, 0, 1});
    CHECK(b.character == DirichletChar(-24));
    CHECK(b.eisenstein_coeffs ==
          rs({Rational(-1, 23), Rational(144, 23), Rational(16, 23), Rational(-9, 23)}));
    CHECK(b.cusp_coeffs == rs({Rational(80, 23), Rational(480, 23), Rational(1600, 23), Rational(0),
                               Rational(320, 23), Rational(0)}));
  }

  TEST_CASE("formula evaluation") {
    const auto row = derive_formula({6, 0, 0, 0});
    CHECK(rep_count_formula(row, 0) == Rational(1));
    CHECK(rep_count_formula(row, 1) == Rational(12));
    CHECK(rep_count_formula(row, 2) == Rational(60));
    CHECK(rep_count_formula(row, 5) == Rational(312));
    CHECK(rep_count_formula(row, -1) == Rational(0));
  }

  TEST_CASE("derived tables reproduce the bundled tables") {
    std::vector<FormulaRow> derived;
    for (const auto& l : all_exponent_vectors()) derived.push_back(derive_formula(l));
    const auto cmp = compare_tables(derived, bundled_tables());
    CHECK(cmp.rows_compared == 84);
    CHECK(cmp.missing_rows.empty());
    CHECK(cmp.discrepancies.empty());
    auto fixture = bundled_tables();
    std::sort(fixture.begin(), fixture.end(), [](const FormulaRow& a, const FormulaRow& b) { return a.l > b.l; });
    CHECK(derived == fixture);
  }

  TEST_CASE("comparison reports a corrupted cell") {
    auto fixture = bundled_tables();
    fixture[3].eisenstein_coeffs[0] += Rational(1);
    const auto cmp = compare_tables(bundled_tables(), fixture);
    REQUIRE(cmp.discrepancies.size() == 1);
    CHECK(cmp.discrepancies[0].l == fixture[3].l);
    CHECK_FALSE(cmp.ok());
    fixture.pop_back();
    CHECK(compare_tables(bundled_tables(), fixture).missing_rows.size() == 1);
  }

  TEST_CASE("formula, brute force and generating function agree for n <= 50") {
    for (const auto& row : bundled_tables()) {
      const auto form = QuadForm::from_exponents(row.l);
      const auto g = genfun(row.l, 51);
      for (std::int64_t n = 0; n <= 50; ++n) {
        const auto f = rep_count_formula(row, n);
        CHECK(f == Rational(rep_count_bruteforce(form, n)));
        CHECK(f == g.q_coefficient(n));
      }
    }
  }

  TEST_CASE("formula values are nonnegative integers") {
    std::mt19937_64 rng(20261019);
    std::uniform_int_distribution<std::int64_t> pick(0, 400);
    for (const auto& row : bundled_tables()) {
      for (int k = 0; k < 5; ++k) {
        const auto v = rep_count_formula(row, pick(rng));
        CHECK(v.is_integer());
        CHECK(v >= Rational(0));
      }
    }
  }

  TEST_CASE("coefficient names") {
    CHECK(coefficient_names(DirichletChar(-4)).size() == 12);
    CHECK(coefficient_names(DirichletChar(-8)).size() == 10);
    CHECK(coefficient_names(DirichletChar(-4)).front() == "a1");
  }

  TEST_CASE("table parser rejects malformed input") {
    CHECK_THROWS(parse_tables("6,0,0,0,1\n"));
    CHECK_THROWS(parse_tables("[chi -4]\nl1,l2,l3,l6,a1\n6,0,0,0,1,2\n"));
    CHECK_THROWS(parse_tables("[chi -4]\nl1,l2,l3,l6,x1\n6,0,0,0,1\n"));
    CHECK(parse_tables("# only a comment\n").empty());
  }
}
