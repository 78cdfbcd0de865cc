#include "qformlab/characters.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace qformlab;

TEST_SUITE("characters") {
  TEST_CASE("kronecker examples") {
    CHECK(kronecker(-4, 5) == 1);
    CHECK(kronecker(-24, 13) == -1);
    for (int t : {1, -3, -4, 8, -8, 12, 24, -24, 5, 7}) CHECK(kronecker(t, 1) == 1);
    CHECK(kronecker(1, 0) == 1);
    CHECK(kronecker(-1, 0) == 1);
    CHECK(kronecker(-3, 0) == 0);
    CHECK(kronecker(-4, -1) == -1);
    CHECK(kronecker(8, -1) == 1);
  }

  TEST_CASE("char_eval examples") {
    CHECK(char_eval(DirichletChar(-3), 7) == 1);
    for (int n : {1, 2, 9, 24, -5}) CHECK(char_eval(DirichletChar(1), n) == 1);
    CHECK(char_eval(DirichletChar(-4), 2) == 0);
    CHECK(DirichletChar(-4)(2) == 0);
  }

  TEST_CASE("character table") {
    const int table[8][8] = {
        {1, 1, 1, 1, 1, 1, 1, 1},      {1, 1, 1, 1, -1, -1, -1, -1}, {1, 1, -1, -1, 1, 1, -1, -1},
        {1, 1, -1, -1, -1, -1, 1, 1},  {1, -1, 1, -1, -1, 1, -1, 1}, {1, -1, 1, -1, 1, -1, 1, -1},
        {1, -1, -1, 1, -1, 1, 1, -1},  {1, -1, -1, 1, 1, -1, -1, 1},
    };
    const int conductors[8] = {1, 24, 4, 24, 8, 3, 8, 12};
    const auto& chars = table_characters();
    const auto& units = table_units();
    for (std::size_t i = 0; i < 8; ++i) {
      CHECK(chars[i].conductor() == conductors[i]);
      for (std::size_t j = 0; j < 8; ++j) CHECK(char_eval(chars[i], units[j]) == table[i][j]);
    }
  }

  TEST_CASE("unsupported discriminants are rejected") {
    CHECK_THROWS(DirichletChar(5));
    CHECK_THROWS(DirichletChar::parse("abc"));
    CHECK(DirichletChar::parse("-24") == DirichletChar(-24));
  }

  TEST_CASE("kronecker is completely multiplicative in n") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> dist(-10000, 10000);
    for (int t : {-3, -4, 8, -8, 12, 24, -24}) {
      for (int trial = 0; trial < 300; ++trial) {
        const auto m = dist(rng), n = dist(rng);
        CHECK(kronecker(t, m * n) == kronecker(t, m) * kronecker(t, n));
      }
    }
  }

  TEST_CASE("periodicity modulo the conductor") {
    for (const auto& chi : table_characters()) {
      // n = 0 is excluded: the trivial character is taken to vanish there.
      for (std::int64_t n = -50; n < 200; ++n) {
        const auto m = n + 24 * chi.conductor();
        if (n != 0 && m != 0) CHECK(char_eval(chi, n) == char_eval(chi, m));
      }
    }
  }

  TEST_CASE("generalized Bernoulli numbers") {
    CHECK(gen_bernoulli3(DirichletChar(-3)) == Rational(2, 3));
    CHECK(gen_bernoulli3(DirichletChar(-4)) == Rational(3, 2));
    CHECK(gen_bernoulli3(DirichletChar(-8)) == Rational(9));
    CHECK(gen_bernoulli3(DirichletChar(-24)) == Rational(138));
  }

  TEST_CASE("twisted divisor sums") {
    const DirichletChar one(1), m4(-4);
    CHECK(sigma_twisted(2, one, one, 1) == 1);
    CHECK(sigma_twisted(2, m4, one, 2) == 1);
    CHECK(sigma_twisted(2, one, m4, 5) == 26);
    CHECK(sigma_twisted(2, one, m4, 0) == 0);
    CHECK(sigma_twisted(2, one, m4, -3) == 0);
    CHECK(sigma_twisted(2, one, m4, Rational(5, 2)) == 0);
    CHECK(sigma_twisted(2, one, m4, Rational(10, 2)) == 26);
  }

  TEST_CASE("twisted divisor sums are multiplicative") {
    const std::vector<DirichletChar> chars{DirichletChar(1), DirichletChar(-3), DirichletChar(-4), DirichletChar(8),
                                           DirichletChar(-24)};
    for (const auto& chi : chars) {
      for (const auto& psi : chars) {
        for (std::int64_t m = 1; m <= 100; m += 7) {
          for (std::int64_t n = 1; n <= 100; n += 5) {
            if (std::gcd(m, n) != 1) continue;
            CHECK(sigma_twisted(2, chi, psi, m * n) == sigma_twisted(2, chi, psi, m) * sigma_twisted(2, chi, psi, n));
          }
        }
      }
    }
  }

  TEST_CASE("untwisted sums are ordinary power sums") {
    for (int k : {0, 1, 2, 3}) {
      for (std::int64_t n = 1; n <= 60; ++n) {
        BigInt s = 0;
        for (std::int64_t d = 1; d <= n; ++d) {
          if (n % d) continue;
          BigInt p;
          mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
          s += p;
        }
        CHECK(sigma_twisted(k, DirichletChar(1), DirichletChar(1), n) == s);
      }
    }
  }
}
