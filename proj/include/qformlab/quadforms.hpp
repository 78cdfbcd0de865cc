#pragma once

#include "qformlab/characters.hpp"
#include "qformlab/etaq.hpp"
#include "qformlab/qseries.hpp"
#include "qformlab/rational.hpp"
#include "qformlab/spaces.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qformlab {

/// Multiplicities (l1, l2, l3, l6) of the coefficients 1, 2, 3, 6 in a senary diagonal form.
struct ExponentVector {
  int l1 = 0, l2 = 0, l3 = 0, l6 = 0;

  ExponentVector() = default;
  ExponentVector(int a, int b, int c, int d);

  std::array<int, 4> as_array() const { return {l1, l2, l3, l6}; }
  std::string to_string() const;

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
};

/// All 84 vectors with l1 + l2 + l3 + l6 = 6, in descending lexicographic order.
std::vector<ExponentVector> all_exponent_vectors();

/// sum_i a_i (x_{i,1}^2 + ... + x_{i,r_i}^2), stored as (a_i, r_i) pairs.
class QuadForm {
public:
  explicit QuadForm(std::vector<std::pair<std::int64_t, int>> terms);
  /// One coefficient per variable, e.g. {1,1,1,1,3,3}.
  static QuadForm from_coefficients(const std::vector<std::int64_t>& coeffs);
  static QuadForm from_exponents(const ExponentVector& l);

  const std::vector<std::pair<std::int64_t, int>>& terms() const { return terms_; }
  /// Per-variable coefficients, largest first.
  std::vector<std::int64_t> variables() const;
  /// The exponent vector when every coefficient lies in {1,2,3,6} and there are six variables.
  std::optional<ExponentVector> exponent_vector() const;

private:
  std::vector<std::pair<std::int64_t, int>> terms_;
};

/// Parity case split: which M_3(Gamma_0(24), chi) contains prod phi^{l_d}(dz).
DirichletChar classify(const ExponentVector& l);

/// prod_{d | 6} phi(dz)^{l_d} as a level-24 eta quotient.
EtaQuotient genfun_eta_quotient(const ExponentVector& l);

/// Expansion of prod phi^{l_d}(dz), known through q^(q_precision-1).
QSeries<Rational> genfun(const ExponentVector& l, std::int64_t q_precision);

/// Number of integer vectors with form(x) = n, by bounded recursive enumeration.
BigInt rep_count_bruteforce(const QuadForm& form, std::int64_t n);

struct FormulaRow {
  ExponentVector l;
  DirichletChar character{-4};
  std::vector<Rational> eisenstein_coeffs;
  std::vector<Rational> cusp_coeffs;

  friend bool operator==(const FormulaRow&, const FormulaRow&) = default;
};

/// Working precision used for derivation: Sturm rows plus re-verification through q^60.
inline constexpr std::int64_t kDerivePrecision = 61;

FormulaRow derive_formula(const ExponentVector& l, std::int64_t q_precision = kDerivePrecision);

/// Evaluates the row's formula at n >= 0 (at n = 0 only the Eisenstein constants contribute).
Rational rep_count_formula(const FormulaRow& row, std::int64_t n);

/// Coefficient names for the character's table, e.g. a1..a6, b1..b6, c1..c4.
std::vector<std::string> coefficient_names(const DirichletChar& chi);

/// Parses the tables text format ("[chi D]" blocks, header line, "p/q" cells).
std::vector<FormulaRow> parse_tables(std::string_view text);

/// The tables compiled into the library.
const std::vector<FormulaRow>& bundled_tables();

struct CellDiscrepancy {
  ExponentVector l;
  std::string column;
  Rational expected;  // fixture
  Rational derived;
};

struct TableComparison {
  std::size_t rows_compared = 0;
  std::vector<ExponentVector> missing_rows;  // no fixture row or character mismatch
  std::vector<CellDiscrepancy> discrepancies;
  bool ok() const { return missing_rows.empty() && discrepancies.empty(); }
};

TableComparison compare_tables(const std::vector<FormulaRow>& derived, const std::vector<FormulaRow>& fixture);

}  // namespace qformlab
