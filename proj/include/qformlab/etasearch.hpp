#pragma once

#include "qformlab/characters.hpp"
#include "qformlab/etaq.hpp"
#include "qformlab/matrix.hpp"
#include "qformlab/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qformlab {

/// Cusp-order geometry of level 24: v = A r with rows c | 24 and columns delta | 24.
struct CuspOrderGeometry {
  std::vector<std::int64_t> divisors;       // cusp denominators and eta arguments alike
  ExactMatrix<Rational> order_matrix;        // A
  ExactMatrix<Rational> inverse;             // A^{-1}
  std::vector<Rational> grid_step;           // v_c lies in grid_step_c * Z whenever r meets L1 and L2
};

/// Builds A, asserts every column sums to 2 and that A is invertible, and derives the grid.
const CuspOrderGeometry& level24_geometry();

struct ExpressibleMember {
  EtaQuotient eta;
  std::vector<Rational> coefficients;  // against the Eisenstein part of the basis
};

struct CensusResult {
  DirichletChar character{-3};
  std::vector<EtaQuotient> members;  // sorted by exponent vector
  std::vector<ExpressibleMember> eisenstein_expressible;
  bool soundness_ok = false;  // every member re-passed ligozat_check
};

/// All weight-3 holomorphic eta quotients of level 24 with the given character (simplex walk).
CensusResult enumerate_space(const DirichletChar& chi, bool with_expressible = true);

/// Members of every character at once, sorted; the walk is shared by enumerate_space.
const std::vector<EtaQuotient>& holomorphic_weight3_eta_quotients();

/// Independent enumeration by interval-pruned search over r, restricted to the box
/// lo <= r <= hi (inclusive, one entry per divisor of 24).
std::vector<EtaQuotient> enumerate_box(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi);

/// Bounds on r_delta over the whole simplex {v >= 0, sum v = 12}.
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> exponent_box();

/// Coordinates of f against the Eisenstein part of the basis for chi, solved on the Sturm rows and
/// checked through q^(q_precision-1); nullopt when f is not a combination of Eisenstein series.
std::optional<std::vector<Rational>> eisenstein_expressible(const EtaQuotient& f, const DirichletChar& chi,
                                                            std::int64_t q_precision = 61);

/// One term coef * sigma_(2,chi,psi)(n / scale).
struct SigmaTerm {
  Rational coefficient;
  DirichletChar chi;
  DirichletChar psi;
  std::int64_t scale = 1;
};

struct RemarkIdentity {
  EtaQuotient lhs;
  Rational constant;
  std::vector<SigmaTerm> terms;

  Rational rhs_coefficient(std::int64_t n) const;
  std::string rhs_string() const;
};

/// The nine displayed eta-quotient / divisor-sum identities.
const std::vector<RemarkIdentity>& remark_identities();

struct IdentityCheck {
  std::string name;
  bool ok = false;
  std::optional<std::int64_t> first_failure;
};

struct RemarkReport {
  std::vector<IdentityCheck> checks;
  bool ok() const;
};

RemarkReport verify_remark_identities(std::int64_t q_precision = 61);

}  // namespace qformlab
