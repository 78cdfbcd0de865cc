#include "qformlab/etaq.hpp"
#include "qformlab/quadforms.hpp"

#include <doctest.h>

#include <random>

using namespace qformlab;

TEST_SUITE("etaq") {
  const EtaQuotient kFirst(24, {0, 3, 0, -4, -5, 2, 16, -6});

  TEST_CASE("parsing and formatting") {
    CHECK(EtaQuotient::parse("eta24[0,3,0,-4,-5,2,16,-6]") == kFirst);
    CHECK(kFirst.to_string() == "eta24[0,3,0,-4,-5,2,16,-6]");
    CHECK_THROWS(EtaQuotient::parse("eta24[0,1,0,1,1,0-1,4]"));
    CHECK_THROWS(EtaQuotient::parse("eta24[1,2,3]"));
    CHECK_THROWS(EtaQuotient::parse("eta4[0,0,0]"));
    CHECK_THROWS(EtaQuotient::parse("phi4[1,2,3]"));
    CHECK(EtaQuotient(3, {-3, 9}).lifted(24) == EtaQuotient(24, {-3, 0, 9, 0, 0, 0, 0, 0}));
  }

  TEST_CASE("cusp order examples") {
    CHECK(cusp_order(kFirst, Cusp(1, 12)) == Rational(5));
    CHECK(cusp_order(kFirst, Cusp(1, 2)) == Rational(1));
    const auto phi6 = genfun_eta_quotient(ExponentVector(6, 0, 0, 0));
    CHECK(cusp_order(phi6, Cusp(1, 2)) == Rational(9));
    CHECK_THROWS(Cusp(2, 4));
  }

  TEST_CASE("character examples") {
    CHECK(character_of(genfun_eta_quotient(ExponentVector(6, 0, 0, 0))) == DirichletChar(-4));
    CHECK(character_of(genfun_eta_quotient(ExponentVector(5, 0, 1, 0))) == DirichletChar(-3));
    CHECK(character_of(genfun_eta_quotient(ExponentVector(5, 0, 0, 1))) == DirichletChar(-24));
    CHECK_THROWS(character_of(EtaQuotient(1, {1})));
  }

  TEST_CASE("ligozat examples") {
    const auto r1 = ligozat_check(kFirst);
    CHECK(r1.weight == Rational(3));
    CHECK(r1.is_holomorphic);
    CHECK(r1.is_cusp);
    CHECK(r1.character_discriminant == -3);

    const auto r2 = ligozat_check(genfun_eta_quotient(ExponentVector(6, 0, 0, 0)));
    CHECK(r2.weight == Rational(3));
    CHECK(r2.is_holomorphic);
    CHECK_FALSE(r2.is_cusp);
    CHECK(r2.character_discriminant == -4);
    for (int c : {1, 3, 8, 24}) CHECK(r2.cusp_orders.at(Cusp(1, c)) == Rational(0));

    const auto r3 = ligozat_check(EtaQuotient(24, {1, 0, 0, 0, 0, 0, 0, 0}));
    CHECK_FALSE(r3.l1_ok);
    CHECK_FALSE(r3.is_holomorphic);
  }

  TEST_CASE("order at 1/N is the valuation at infinity") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> r(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<std::int64_t> e(8);
      for (auto& x : e) x = r(rng);
      if (std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; })) continue;
      const EtaQuotient f(24, e);
      const std::int64_t t = std::max<std::int64_t>(f.valuation24(), 0) + 200;
      const auto s = eta_quotient_expansion(f, t);
      CHECK(Rational(24) * cusp_order(f, Cusp(1, 24)) == Rational(s.valuation()));
    }
  }

  TEST_CASE("cusp orders of weight-3 level-24 quotients sum to 12") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> r(-6, 6);
    int tested = 0;
    while (tested < 100) {
      std::vector<std::int64_t> e(8);
      std::int64_t sum = 0;
      for (std::size_t i = 0; i < 7; ++i) sum += (e[i] = r(rng));
      e[7] = 6 - sum;
      const EtaQuotient f(24, e);
      Rational total(0);
      for (const auto& [c, v] : ligozat_check(f).cusp_orders) total += v;
      CHECK(total == Rational(12));
      ++tested;
    }
  }

  TEST_CASE("character is stable under weight-0 factors with square s") {
    // Weight 0 with s = 1/16 (square) and s = 3 (not a square).
    const EtaQuotient unit(24, {2, 0, 0, -2, 0, 0, 0, 0});
    const EtaQuotient unit2(24, {-1, 0, 1, 0, 0, 0, 0, 0});
    for (const auto& l : all_exponent_vectors()) {
      const auto f = genfun_eta_quotient(l);
      CHECK(character_of(f * unit) == character_of(f));
      CHECK(character_of(f * unit2) != character_of(f));
    }
  }

  TEST_CASE("all 84 theta products are holomorphic weight 3 with the classified character") {
    std::size_t count = 0;
    for (const auto& l : all_exponent_vectors()) {
      const auto rep = ligozat_check(genfun_eta_quotient(l));
      CHECK(rep.weight == Rational(3));
      CHECK(rep.is_holomorphic);
      CHECK(rep.character_discriminant == classify(l).discriminant());
      CHECK(rep.cusp_orders.at(Cusp(1, 2)) == Rational(3 * l.l1 + l.l3, 2));
      CHECK(rep.cusp_orders.at(Cusp(1, 12)) == Rational(l.l2 + 3 * l.l6, 2));
      ++count;
    }
    CHECK(count == 84);
  }
}
