#pragma once

#include "qformlab/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace qformlab {

/// Real Dirichlet character n -> (t/n) given by a Kronecker discriminant t.
///
/// Only the characters of conductor dividing 24 are supported:
/// t in {1, -3, -4, 8, -8, 12, 24, -24}.
class DirichletChar {
public:
  explicit DirichletChar(int discriminant);

  /// Accepts the CLI spelling "1", "-3", "-4", "8", "-8", "12", "24", "-24".
  static DirichletChar parse(std::string_view text);

  int discriminant() const { return discriminant_; }
  int conductor() const { return conductor_; }
  /// chi(-1).
  int parity() const;

  int operator()(std::int64_t n) const;

  std::string name() const { return std::to_string(discriminant_); }

  friend bool operator==(const DirichletChar&, const DirichletChar&) = default;

private:
  int discriminant_;
  int conductor_;
};

/// The eight characters in the row order of the mod-24 character table.
const std::array<DirichletChar, 8>& table_characters();
/// Column headings of the character table: units modulo 24.
const std::array<int, 8>& table_units();

/// Kronecker symbol (t/n) for arbitrary integers, with (t/0) = [t = +-1] and
/// (t/-1) = sign(t).
int kronecker(std::int64_t t, std::int64_t n);

/// kronecker(chi.discriminant(), n); zero whenever gcd(n, conductor) > 1.
int char_eval(const DirichletChar& chi, std::int64_t n);

/// Generalized Bernoulli number B_{3,chi} = 6 [x^3] sum_{a=1}^{L} chi(a) x e^{ax} / (e^{Lx} - 1).
Rational gen_bernoulli3(const DirichletChar& chi);

/// sum_{d | n} chi(d) psi(n/d) d^k for n >= 1; zero for n <= 0.
BigInt sigma_twisted(int k, const DirichletChar& chi, const DirichletChar& psi, std::int64_t n);

/// Same sum at a rational argument; zero when the argument is not a positive integer.
BigInt sigma_twisted(int k, const DirichletChar& chi, const DirichletChar& psi, const Rational& n);

}  // namespace qformlab
