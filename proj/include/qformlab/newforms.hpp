#pragma once

#include "qformlab/characters.hpp"
#include "qformlab/number_field.hpp"
#include "qformlab/qseries.hpp"
#include "qformlab/spaces.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qformlab {

using NFE = NumberFieldElement;

/// A cusp-basis combination with coefficients in Q(alpha).
struct NewformSpec {
  int index = 0;
  FieldPtr field;
  DirichletChar character{-3};
  std::vector<NFE> combo;  // against the ordered cusp basis of `character`
};

/// Default precision for eigenform checks (integer q-coefficients).
inline constexpr std::int64_t kNewformPrecision = 120;

/// The five reference combinations f_1..f_5.
NewformSpec newform_spec(int index);

/// sum_j combo_j S_j, known through q^(q_precision-1).
QSeries<NFE> build_newform(const NewformSpec& spec, std::int64_t q_precision);
QSeries<NFE> build_newform(int index, std::int64_t q_precision);

struct EigenformReport {
  bool multiplicative = true;
  bool prime_squares = true;
  bool in_cusp_space = false;
  std::size_t relations_checked = 0;
  std::optional<std::string> first_failure;

  bool ok() const { return multiplicative && prime_squares && in_cusp_space; }
};

/// Checks a(mn) = a(m)a(n) for coprime m, n with mn < q_precision, a(p^2) = a(p)^2 - chi(p) p^2
/// for primes p not dividing 24 with p^2 < q_precision, and membership in the cusp space.
/// Throws std::domain_error("not normalized") when a(1) != 1.
EigenformReport check_eigenform(const QSeries<NFE>& f, const DirichletChar& chi, std::int64_t q_precision);

/// Coordinates of f in the cusp basis of chi (solved on Sturm rows, verified to q_precision);
/// nullopt when f is not a cusp form in that span.
std::optional<std::vector<NFE>> solve_cusp_coordinates(const QSeries<NFE>& f, const DirichletChar& chi,
                                                       std::int64_t q_precision);

/// Re-derives a normalized eigenform combination over spec.field from linear constraints:
/// a(1) = 1 and a(pn) + chi(p) p^2 a(n/p) = lambda_p a(n) for small primes p, with lambda_p
/// read from the reference combination's a(p).
struct RederivedNewform {
  std::optional<std::vector<NFE>> combo;
  std::vector<std::size_t> differing_positions;  // against spec.combo
};
RederivedNewform rederive_newform(const NewformSpec& spec, std::int64_t q_precision);

/// q + a q^3 + (-2a + 2) q^5 - 6 q^7 + (2a - 9) q^9 over Q(alpha_1), known through q^9.
QSeries<NFE> f1_reference_expansion();

struct NewformResult {
  NewformSpec spec;
  EigenformReport report;
  std::optional<RederivedNewform> fallback;  // only when the reference combination fails
  bool solve_back_ok = false;                // solved coordinates equal the reference combo
};

NewformResult verify_newform(int index, std::int64_t q_precision = kNewformPrecision);

}  // namespace qformlab
