#include "qformlab/newforms.hpp"

#include "qformlab/matrix.hpp"

#include <numeric>
#include <stdexcept>

namespace qformlab {

namespace {

const FieldPtr& field_for(int index) {
  static const FieldPtr q1 = make_field({Rational(9), Rational(-2), Rational(1)});
  static const FieldPtr q2 = make_field({Rational(16), Rational(-8), Rational(6), Rational(-2), Rational(1)});
  static const FieldPtr q3 = make_field({Rational(16), Rational(0), Rational(6), Rational(0), Rational(1)});
  static const FieldPtr rationals = make_field({Rational(0), Rational(1)});
  switch (index) {
    case 1: return q1;
    case 2: return q2;
    case 5: return q3;
    default: return rationals;
  }
}

// Each entry lists the coefficients of 1, a, a^2, a^3 multiplying S_j.
using Combo = std::vector<std::vector<Rational>>;

Rational r(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

Combo reference_combo(int index) {
  switch (index) {
    case 1: return {{r(1)}, {r(0)}, {r(3), r(1)}, {r(4)}};
    case 2:
      return {{r(1)},
              {r(2), r(1)},
              {r(0), r(3, 2), r(-1, 2), r(1, 4)},
              {r(2), r(5), r(0), r(1, 2)},
              {r(-2), r(-1), r(0), r(-1, 2)},
              {r(-4), r(3), r(-1), r(1, 2)}};
    case 3: return {{r(1)}, {r(-1)}, {r(3)}, {r(7)}, {r(8)}, {r(-4)}};
    case 4: return {{r(1)}, {r(3)}, {r(5)}, {r(1)}, {r(0)}, {r(-4)}};
    case 5:
      return {{r(1)},
              {r(1), r(1)},
              {r(1), r(3, 2), r(-1), r(-1, 4)},
              {r(-3), r(-1, 2), r(0), r(-1, 4)},
              {r(-6), r(3), r(-1), r(1, 2)},
              {r(6), r(0), r(1)}};
    default: throw std::invalid_argument("newform index must be 1..5");
  }
}

DirichletChar character_for(int index) {
  switch (index) {
    case 1: return DirichletChar(-3);
    case 2: return DirichletChar(-8);
    default: return DirichletChar(-24);
  }
}

std::vector<std::int64_t> primes_below(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p < n; ++p) {
    bool prime = true;
    for (std::int64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) { prime = false; break; }
    }
    if (prime) out.push_back(p);
  }
  return out;
}

}  // namespace

NewformSpec newform_spec(int index) {
  NewformSpec spec;
  spec.index = index;
  spec.field = field_for(index);
  spec.character = character_for(index);
  for (auto& poly : reference_combo(index)) {
    poly.resize(static_cast<std::size_t>(std::max(spec.field->degree(), static_cast<int>(poly.size()))), Rational(0));
    spec.combo.push_back(evaluate_poly(poly, NFE::generator(spec.field)));
  }
  return spec;
}

QSeries<NFE> build_newform(const NewformSpec& spec, std::int64_t q_precision) {
  const auto expanded = cached_basis(spec.character, q_precision);
  if (expanded->cusp.size() != spec.combo.size()) throw std::invalid_argument("combo does not match the cusp basis");
  std::vector<QSeries<NFE>> parts;
  for (const auto& s : expanded->cusp) parts.push_back(s.truncate(kGrade * q_precision).convert<NFE>());
  return linear_combination(spec.combo, parts);
}

QSeries<NFE> build_newform(int index, std::int64_t q_precision) {
  return build_newform(newform_spec(index), q_precision);
}

EigenformReport check_eigenform(const QSeries<NFE>& f, const DirichletChar& chi, std::int64_t q_precision) {
  if (!(f.q_coefficient(1) == NFE(1))) throw std::domain_error("not normalized");
  EigenformReport rep;
  std::vector<NFE> a(static_cast<std::size_t>(q_precision));
  for (std::int64_t n = 0; n < q_precision; ++n) a[static_cast<std::size_t>(n)] = f.q_coefficient(n);
  auto note = [&](const std::string& what) {
    if (!rep.first_failure) rep.first_failure = what;
  };
  for (std::int64_t m = 2; m * m < q_precision; ++m) {
    for (std::int64_t n = m + 1; m * n < q_precision; ++n) {
      if (std::gcd(m, n) != 1) continue;
      ++rep.relations_checked;
      const auto lhs = a[static_cast<std::size_t>(m * n)];
      const auto rhs = a[static_cast<std::size_t>(m)] * a[static_cast<std::size_t>(n)];
      if (!(lhs == rhs)) {
        rep.multiplicative = false;
        note("a(" + std::to_string(m * n) + ") = " + lhs.to_poly_string() + " but a(" + std::to_string(m) + ")a(" +
             std::to_string(n) + ") = " + rhs.to_poly_string());
      }
    }
  }
  for (const auto p : primes_below(q_precision)) {
    if (24 % p == 0 || p * p >= q_precision) continue;
    ++rep.relations_checked;
    const auto ap = a[static_cast<std::size_t>(p)];
    const auto lhs = a[static_cast<std::size_t>(p * p)];
    const auto rhs = ap * ap - NFE(Rational(chi(p) * p * p));
    if (!(lhs == rhs)) {
      rep.prime_squares = false;
      note("a(" + std::to_string(p * p) + ") = " + lhs.to_poly_string() + " but a(p)^2 - chi(p)p^2 = " +
           rhs.to_poly_string());
    }
  }
  rep.in_cusp_space = solve_cusp_coordinates(f, chi, q_precision).has_value();
  if (!rep.in_cusp_space) note("not in the cusp space spanned by the bundled basis");
  return rep;
}

std::optional<std::vector<NFE>> solve_cusp_coordinates(const QSeries<NFE>& f, const DirichletChar& chi,
                                                       std::int64_t q_precision) {
  const auto expanded = cached_basis(chi, q_precision);
  return solve_in_span(f, expanded->cusp, expanded->basis.sturm_bound + 1, q_precision);
}

RederivedNewform rederive_newform(const NewformSpec& spec, std::int64_t q_precision) {
  const auto expanded = cached_basis(spec.character, q_precision);
  const auto& span = expanded->cusp;
  const auto reference = build_newform(spec, q_precision);
  auto s = [&](std::size_t j, std::int64_t n) -> NFE {
    if (n <= 0) return NFE(0);
    return NFE(span[j].q_coefficient(n));
  };
  std::vector<std::vector<NFE>> rows;
  std::vector<NFE> rhs;
  std::vector<NFE> first;
  for (std::size_t j = 0; j < span.size(); ++j) first.push_back(s(j, 1));
  rows.push_back(first);
  rhs.emplace_back(1);
  for (const auto p : primes_below(14)) {
    const NFE lambda = reference.q_coefficient(p);
    // p | 24 acts as U_p: no p^2 term even where chi(p) != 0.
    const NFE twist(Rational(24 % p == 0 ? 0 : spec.character(p) * p * p));
    for (std::int64_t n = 1; p * n < q_precision; ++n) {
      std::vector<NFE> row;
      for (std::size_t j = 0; j < span.size(); ++j) {
        NFE v = s(j, p * n) - lambda * s(j, n);
        if (n % p == 0) v = v + twist * s(j, n / p);
        row.push_back(v);
      }
      rows.push_back(std::move(row));
      rhs.emplace_back(0);
    }
  }
  ExactMatrix<NFE> m(rows.size(), span.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < span.size(); ++j) m(i, j) = rows[i][j];
  RederivedNewform out;
  const auto sol = solve_linear(m, rhs);
  if (!sol.ok()) return out;
  out.combo = *sol.solution;
  for (std::size_t j = 0; j < spec.combo.size(); ++j) {
    if (!((*out.combo)[j] == spec.combo[j])) out.differing_positions.push_back(j);
  }
  return out;
}

QSeries<NFE> f1_reference_expansion() {
  const auto& k = field_for(1);
  const NFE a = NFE::generator(k);
  std::vector<NFE> c(10, NFE(0));
  c[1] = NFE(1);
  c[3] = a;
  c[5] = NFE(-2) * a + NFE(2);
  c[7] = NFE(-6);
  c[9] = NFE(2) * a - NFE(9);
  return QSeries<NFE>::from_q_coefficients(std::move(c), 10);
}

NewformResult verify_newform(int index, std::int64_t q_precision) {
  NewformResult res;
  res.spec = newform_spec(index);
  const auto f = build_newform(res.spec, q_precision);
  res.report = check_eigenform(f, res.spec.character, q_precision);
  const auto coords = solve_cusp_coordinates(f, res.spec.character, q_precision);
  res.solve_back_ok = coords && *coords == res.spec.combo;
  if (!res.report.ok()) res.fallback = rederive_newform(res.spec, q_precision);
  return res;
}

}  // namespace qformlab
