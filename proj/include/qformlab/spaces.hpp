#pragma once

#include "qformlab/characters.hpp"
#include "qformlab/eisenstein.hpp"
#include "qformlab/etaq.hpp"
#include "qformlab/matrix.hpp"
#include "qformlab/qseries.hpp"

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qformlab {

/// Coefficient index up to which two forms in M_3(Gamma_0(24), chi) must agree to be equal:
/// floor(3 * 48 / 12), 48 being the index of Gamma_0(24) in SL_2(Z).
inline constexpr std::int64_t kSturmBound = 12;

/// Ordered basis of M_3(Gamma_0(24), chi): Eisenstein series first, then eta quotients.
struct SpaceBasis {
  DirichletChar character{-3};
  std::vector<EisensteinSpec> eisenstein_part;
  std::vector<EtaQuotient> cusp_part;
  std::int64_t sturm_bound = kSturmBound;

  std::size_t size() const { return eisenstein_part.size() + cusp_part.size(); }
};

/// The four characters with a bundled basis, in the order -3, -4, -8, -24.
const std::vector<DirichletChar>& supported_characters();

/// dim M_3(Gamma_0(24), chi) and dim S_3(Gamma_0(24), chi).
std::size_t bundled_dimension(const DirichletChar& chi);
std::size_t bundled_cusp_dimension(const DirichletChar& chi);

SpaceBasis build_basis(const DirichletChar& chi);

/// Basis element names, one per line, Eisenstein part first.
std::vector<std::string> basis_names(const SpaceBasis& basis);

/// q-expansions of every basis element through q^(q_precision-1).
struct ExpandedBasis {
  SpaceBasis basis;
  std::int64_t q_precision = 0;
  std::vector<QSeries<Rational>> eisenstein;
  std::vector<QSeries<Rational>> cusp;

  std::vector<QSeries<Rational>> all() const;
};

ExpandedBasis expand_basis(const SpaceBasis& basis, std::int64_t q_precision);

/// Shared, lazily built expansion of the bundled basis for chi, at least q_precision deep.
std::shared_ptr<const ExpandedBasis> cached_basis(const DirichletChar& chi, std::int64_t q_precision);

struct CuspElementCheck {
  std::string name;
  ModularityReport report;
  bool ok = false;
};

struct BasisReport {
  std::vector<CuspElementCheck> cusp_checks;
  std::size_t size = 0;
  std::size_t rank = 0;
  std::size_t expected_dimension = 0;
  bool distinct_valuations = false;
  bool ok() const;
};

BasisReport verify_basis(const SpaceBasis& basis, std::int64_t q_precision);

/// Coefficient matrix with rows q^0 .. q^(rows-1) and one column per series.
template <ExactScalar S>
ExactMatrix<S> coefficient_matrix(const std::vector<QSeries<Rational>>& span, std::int64_t rows) {
  ExactMatrix<S> m(static_cast<std::size_t>(rows), span.size());
  for (std::size_t j = 0; j < span.size(); ++j) {
    for (std::int64_t n = 0; n < rows; ++n) m(static_cast<std::size_t>(n), j) = S(span[j].q_coefficient(n));
  }
  return m;
}

/// Finds x with sum_j x_j span_j = f by elimination on q^0 .. q^(solve_rows-1), then
/// re-verifies every coefficient through q^(verify_rows-1). Returns nullopt when f is
/// not in the span at that precision or the solve rows do not pin x down uniquely.
template <ExactScalar S>
std::optional<std::vector<S>> solve_in_span(const QSeries<S>& f, const std::vector<QSeries<Rational>>& span,
                                            std::int64_t solve_rows, std::int64_t verify_rows) {
  std::vector<S> rhs;
  rhs.reserve(static_cast<std::size_t>(solve_rows));
  for (std::int64_t n = 0; n < solve_rows; ++n) rhs.push_back(f.q_coefficient(n));
  const auto sol = solve_linear(coefficient_matrix<S>(span, solve_rows), rhs);
  if (!sol.ok()) return std::nullopt;
  const auto& x = *sol.solution;
  for (std::int64_t n = solve_rows; n < verify_rows; ++n) {
    S acc(0);
    for (std::size_t j = 0; j < span.size(); ++j) {
      if (!x[j].is_zero()) acc = acc + x[j] * S(span[j].q_coefficient(n));
    }
    if (!(acc == f.q_coefficient(n))) return std::nullopt;
  }
  return x;
}

/// Coordinates of f in the full basis (Eisenstein part first), solved on the first
/// sturm_bound + 1 coefficients and checked on all of q^0 .. q^(q_precision-1).
/// Throws std::runtime_error when f is not in the span.
template <ExactScalar S>
std::vector<S> solve_in_basis(const QSeries<S>& f, const SpaceBasis& basis, std::int64_t q_precision) {
  if (q_precision <= basis.sturm_bound) throw std::invalid_argument("solve_in_basis: precision below the Sturm bound");
  if (f.truncation() < kGrade * q_precision) throw std::invalid_argument("solve_in_basis: series known to too few terms");
  const auto expanded = cached_basis(basis.character, q_precision);
  std::vector<QSeries<Rational>> span;
  if (basis.eisenstein_part == expanded->basis.eisenstein_part && basis.cusp_part == expanded->basis.cusp_part) {
    span = expanded->all();
  } else {
    span = expand_basis(basis, q_precision).all();
  }
  auto x = solve_in_span(f, span, basis.sturm_bound + 1, q_precision);
  if (!x) throw std::runtime_error("not in space span at this precision");
  return *x;
}

}  // namespace qformlab
