#pragma once

#include "qformlab/characters.hpp"
#include "qformlab/qseries.hpp"
#include "qformlab/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qformlab {

/// Positive divisors of n in ascending order.
std::vector<std::int64_t> divisors(std::int64_t n);

/// prod_{delta | N} eta(delta z)^{r_delta}, one exponent per divisor of the level.
class EtaQuotient {
public:
  /// `exponents` lists r_delta for the divisors of `level` in ascending order.
  EtaQuotient(std::int64_t level, std::vector<std::int64_t> exponents);

  /// Builds from sparse (delta, r) pairs; missing divisors get exponent 0.
  static EtaQuotient from_pairs(std::int64_t level, const std::map<std::int64_t, std::int64_t>& pairs);

  /// Parses "etaN[r1,...,rd]".
  static EtaQuotient parse(std::string_view text);

  std::int64_t level() const { return level_; }
  const std::vector<std::int64_t>& divisors() const { return divisors_; }
  const std::vector<std::int64_t>& exponents() const { return exponents_; }
  std::int64_t exponent(std::int64_t delta) const;

  /// Half the exponent sum.
  Rational weight() const;
  /// sum delta * r_delta, i.e. the grade-24 valuation at infinity.
  std::int64_t valuation24() const;

  /// The same product viewed at a level that is a multiple of this one.
  EtaQuotient lifted(std::int64_t new_level) const;

  EtaQuotient operator*(const EtaQuotient& o) const;

  std::string to_string() const;

  friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;
  friend auto operator<=>(const EtaQuotient& a, const EtaQuotient& b) {
    if (a.level_ != b.level_) return a.level_ <=> b.level_;
    return a.exponents_ <=> b.exponents_;
  }

private:
  std::int64_t level_;
  std::vector<std::int64_t> divisors_;
  std::vector<std::int64_t> exponents_;
};

/// Reduced fraction a/c with c > 0.
struct Cusp {
  std::int64_t a = 1;
  std::int64_t c = 1;

  Cusp(std::int64_t numerator, std::int64_t denominator);
  std::string to_string() const;
  friend auto operator<=>(const Cusp&, const Cusp&) = default;
};

struct ModularityReport {
  Rational weight;
  bool l1_ok = false;
  bool l2_ok = false;
  bool l4_ok = false;
  bool is_holomorphic = false;
  bool is_cusp = false;
  std::optional<int> character_discriminant;
  std::map<Cusp, Rational> cusp_orders;
};

/// Order of vanishing at a/c:
/// N / (24 gcd(c^2, N)) * sum_delta gcd(delta, c)^2 r_delta / delta.
Rational cusp_order(const EtaQuotient& f, const Cusp& cusp);

/// Nebentypus of an integer-weight eta quotient of level dividing 24.
DirichletChar character_of(const EtaQuotient& f);

/// Conditions L1-L4, cusp orders at 1/c for every c | N, and the character when defined.
ModularityReport ligozat_check(const EtaQuotient& f);

/// The product prod eta(delta z)^{r_delta} as a q-series, truncated at grade-24 exponent `truncation`.
QSeries<Rational> eta_quotient_expansion(const EtaQuotient& f, std::int64_t truncation);

/// Integer coefficients of q^0 .. q^(count-1) of f / q^{valuation/24} (the
/// product prod_delta prod_n (1 - q^{delta n})^{r_delta}), via the logarithmic
/// derivative recurrence. Independent of the series engine.
std::vector<BigInt> eta_product_coefficients(const EtaQuotient& f, std::int64_t count);

}  // namespace qformlab
