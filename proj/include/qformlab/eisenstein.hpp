#pragma once

#include "qformlab/characters.hpp"
#include "qformlab/qseries.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace qformlab {

/// E_{3,chi,psi}(t z).
struct EisensteinSpec {
  DirichletChar chi;
  DirichletChar psi;
  std::int64_t scale = 1;

  EisensteinSpec(DirichletChar chi_, DirichletChar psi_, std::int64_t t = 1);

  /// Parses "E3[chi,psi,t]".
  static EisensteinSpec parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const EisensteinSpec&, const EisensteinSpec&) = default;
};

/// Constant term of E_{3,chi,psi}: -B_{3,chi}/6 when psi is trivial, else 0.
Rational eisenstein3_constant(const DirichletChar& chi, const DirichletChar& psi);

/// c0 + sum_{n>=1} sigma_(2,chi,psi)(n) q^{t n}, known for q^0 .. q^(q_precision-1).
QSeries<Rational> eisenstein3(const EisensteinSpec& spec, std::int64_t q_precision);

}  // namespace qformlab
