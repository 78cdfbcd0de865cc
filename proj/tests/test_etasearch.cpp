#include "qformlab/etasearch.hpp"
#include "qformlab/qseries.hpp"
#include "qformlab/spaces.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace qformlab;

TEST_SUITE("etasearch") {
  TEST_CASE("cusp order geometry") {
    const auto& g = level24_geometry();
    CHECK(g.divisors == std::vector<std::int64_t>{1, 2, 3, 4, 6, 8, 12, 24});
    const auto n = g.divisors.size();
    for (std::size_t j = 0; j < n; ++j) {
      Rational col(0);
      for (std::size_t i = 0; i < n; ++i) {
        col += g.order_matrix(i, j);
        CHECK(g.order_matrix(i, j) > Rational(0));
      }
      CHECK(col == Rational(2));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational acc(0);
        for (std::size_t k = 0; k < n; ++k) acc += g.order_matrix(i, k) * g.inverse(k, j);
        CHECK(acc == Rational(i == j ? 1 : 0));
      }
    }
    const std::vector<Rational> expected{Rational(1),    Rational(1, 2), Rational(1),    Rational(1, 2),
                                         Rational(1, 2), Rational(1),    Rational(1, 2), Rational(1)};
    CHECK(g.grid_step == expected);
  }

  TEST_CASE("census counts and soundness") {
    const std::vector<std::pair<int, std::size_t>> expected{{-3, 6332}, {-4, 6288}, {-8, 2424}, {-24, 2424}};
    std::size_t total = 0;
    for (const auto& [d, count] : expected) {
      const auto res = enumerate_space(DirichletChar(d), false);
      CHECK(res.members.size() == count);
      CHECK(res.soundness_ok);
      CHECK(std::is_sorted(res.members.begin(), res.members.end()));
      total += res.members.size();
      for (const auto& f : build_basis(DirichletChar(d)).cusp_part)
        CHECK(std::binary_search(res.members.begin(), res.members.end(), f));
    }
    CHECK(holomorphic_weight3_eta_quotients().size() == 17468);
    CHECK(total == 17468);
    CHECK_THROWS(enumerate_space(DirichletChar(5), false));
  }

  TEST_CASE("every member is holomorphic of weight 3 with nonnegative expansion valuation") {
    for (const auto& f : holomorphic_weight3_eta_quotients()) {
      const auto rep = ligozat_check(f);
      CHECK(rep.is_holomorphic);
      CHECK(rep.weight == Rational(3));
      CHECK(f.valuation24() >= 0);
      CHECK(f.valuation24() % 24 == 0);
    }
  }

  TEST_CASE("box search agrees with the simplex walk on random sub-boxes") {
    const auto [lo, hi] = exponent_box();
    const auto& all = holomorphic_weight3_eta_quotients();
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<std::int64_t> a(lo.size()), b(lo.size());
      for (std::size_t i = 0; i < lo.size(); ++i) {
        std::uniform_int_distribution<std::int64_t> pick(lo[i], hi[i]);
        auto x = pick(rng), y = pick(rng);
        a[i] = std::min(x, y);
        b[i] = std::max(x, y);
        // Widen so that sub-boxes usually contain members.
        a[i] = std::max(lo[i], a[i] - 3);
        b[i] = std::min(hi[i], b[i] + 3);
      }
      std::vector<EtaQuotient> expected;
      for (const auto& f : all) {
        bool inside = true;
        for (std::size_t i = 0; i < a.size(); ++i) {
          const auto r = f.exponents()[i];
          if (r < a[i] || r > b[i]) inside = false;
        }
        if (inside) expected.push_back(f);
      }
      CHECK(enumerate_box(a, b) == expected);
    }
  }

  TEST_CASE("Eisenstein expressibility examples") {
    const auto e3 = eisenstein_expressible(EtaQuotient(3, {-3, 9}), DirichletChar(-3));
    REQUIRE(e3);
    CHECK(std::count_if(e3->begin(), e3->end(), [](const Rational& c) { return !c.is_zero(); }) >= 1);

    const auto e8 = eisenstein_expressible(EtaQuotient(8, {-2, -5, 23, -10}), DirichletChar(-8));
    REQUIRE(e8);
    CHECK(*e8 == std::vector<Rational>{Rational(-2, 3), Rational(0), Rational(8, 3), Rational(0)});

    for (const auto& chi : supported_characters())
      for (const auto& s : build_basis(chi).cusp_part) CHECK_FALSE(eisenstein_expressible(s, chi));
  }

  TEST_CASE("expressible counts") {
    CHECK(enumerate_space(DirichletChar(-24)).eisenstein_expressible.empty());
    const auto r8 = enumerate_space(DirichletChar(-8));
    CHECK(r8.eisenstein_expressible.size() == 4);
    for (const auto& m : r8.eisenstein_expressible) {
      const auto f = eta_quotient_expansion(m.eta, kGrade * 61);
      const auto e = cached_basis(DirichletChar(-8), 61)->eisenstein;
      CHECK(linear_combination(m.coefficients, e).truncate(kGrade * 61) == f);
    }
  }

  TEST_CASE("divisor-sum identities") {
    const auto& ids = remark_identities();
    CHECK(ids.size() == 9);
    const auto rep = verify_remark_identities(61);
    CHECK(rep.ok());
    for (const auto& c : rep.checks) {
      INFO(c.name);
      CHECK(c.ok);
    }
    const auto f = eta_quotient_expansion(EtaQuotient(6, {4, 1, -4, 5}), kGrade * 5);
    CHECK(f.q_coefficient(1) == Rational(1));
    CHECK(f.q_coefficient(2) == Rational(-4));
    CHECK(ids[2].rhs_coefficient(2) == Rational(-4));
  }
}
