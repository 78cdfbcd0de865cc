#include "qformlab/quadforms.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qformlab {

namespace detail {
extern const std::string_view kBundledTables;
}

ExponentVector::ExponentVector(int a, int b, int c, int d) : l1(a), l2(b), l3(c), l6(d) {
  if (a < 0 || b < 0 || c < 0 || d < 0 || a + b + c + d != 6) {
    throw std::invalid_argument("exponent vector must be non-negative with sum 6");
  }
}

std::string ExponentVector::to_string() const {
  return std::to_string(l1) + "," + std::to_string(l2) + "," + std::to_string(l3) + "," + std::to_string(l6);
}

std::vector<ExponentVector> all_exponent_vectors() {
  std::vector<ExponentVector> out;
  for (int a = 6; a >= 0; --a)
    for (int b = 6 - a; b >= 0; --b)
      for (int c = 6 - a - b; c >= 0; --c) out.emplace_back(a, b, c, 6 - a - b - c);
  return out;
}

QuadForm::QuadForm(std::vector<std::pair<std::int64_t, int>> terms) : terms_(std::move(terms)) {
  int total = 0;
  for (const auto& [a, r] : terms_) {
    if (a <= 0) throw std::invalid_argument("form coefficients must be positive");
    if (r < 0) throw std::invalid_argument("multiplicities must be non-negative");
    total += r;
  }
  if (total < 1) throw std::invalid_argument("form needs at least one variable");
}

QuadForm QuadForm::from_coefficients(const std::vector<std::int64_t>& coeffs) {
  std::map<std::int64_t, int> counts;
  for (auto a : coeffs) ++counts[a];
  return QuadForm(std::vector<std::pair<std::int64_t, int>>(counts.begin(), counts.end()));
}

QuadForm QuadForm::from_exponents(const ExponentVector& l) {
  return QuadForm({{1, l.l1}, {2, l.l2}, {3, l.l3}, {6, l.l6}});
}

std::vector<std::int64_t> QuadForm::variables() const {
  std::vector<std::int64_t> v;
  for (const auto& [a, r] : terms_) v.insert(v.end(), static_cast<std::size_t>(r), a);
  std::sort(v.rbegin(), v.rend());
  return v;
}

std::optional<ExponentVector> QuadForm::exponent_vector() const {
  std::array<int, 4> l{};
  for (const auto& [a, r] : terms_) {
    switch (a) {
      case 1: l[0] += r; break;
      case 2: l[1] += r; break;
      case 3: l[2] += r; break;
      case 6: l[3] += r; break;
      default: if (r > 0) return std::nullopt;
    }
  }
  if (l[0] + l[1] + l[2] + l[3] != 6) return std::nullopt;
  return ExponentVector(l[0], l[1], l[2], l[3]);
}

DirichletChar classify(const ExponentVector& l) {
  const bool even13 = (l.l1 + l.l3) % 2 == 0;
  const bool even36 = (l.l3 + l.l6) % 2 == 0;
  if (even13 && even36) return DirichletChar(-4);
  if (even13) return DirichletChar(-3);
  if (even36) return DirichletChar(-8);
  return DirichletChar(-24);
}

EtaQuotient genfun_eta_quotient(const ExponentVector& l) {
  // phi(dz) = eta(2dz)^5 / (eta(dz)^2 eta(4dz)^2).
  std::map<std::int64_t, std::int64_t> r;
  for (auto [d, m] : {std::pair<std::int64_t, int>{1, l.l1}, {2, l.l2}, {3, l.l3}, {6, l.l6}}) {
    r[d] -= 2 * m;
    r[2 * d] += 5 * m;
    r[4 * d] -= 2 * m;
  }
  return EtaQuotient::from_pairs(24, r);
}

QSeries<Rational> genfun(const ExponentVector& l, std::int64_t q_precision) {
  return eta_quotient_expansion(genfun_eta_quotient(l), kGrade * q_precision);
}

namespace {

std::int64_t isqrt(std::int64_t n) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

BigInt count_from(const std::vector<std::int64_t>& vars, std::size_t i, std::int64_t rem) {
  const std::int64_t a = vars[i];
  if (i + 1 == vars.size()) {
    if (rem == 0) return 1;
    if (rem % a) return 0;
    const std::int64_t s = isqrt(rem / a);
    return s * s == rem / a ? 2 : 0;
  }
  BigInt total = 0;
  for (std::int64_t x = 0; a * x * x <= rem; ++x) {
    const BigInt sub = count_from(vars, i + 1, rem - a * x * x);
    total += x == 0 ? sub : BigInt(2 * sub);
  }
  return total;
}

}  // namespace

BigInt rep_count_bruteforce(const QuadForm& form, std::int64_t n) {
  if (n < 0) return 0;
  const auto vars = form.variables();
  return count_from(vars, 0, n);
}

FormulaRow derive_formula(const ExponentVector& l, std::int64_t q_precision) {
  FormulaRow row;
  row.l = l;
  row.character = classify(l);
  const SpaceBasis basis = build_basis(row.character);
  const auto x = solve_in_basis(genfun(l, q_precision), basis, q_precision);
  const auto ne = basis.eisenstein_part.size();
  row.eisenstein_coeffs.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(ne));
  row.cusp_coeffs.assign(x.begin() + static_cast<std::ptrdiff_t>(ne), x.end());
  return row;
}

Rational rep_count_formula(const FormulaRow& row, std::int64_t n) {
  if (n < 0) return Rational(0);
  const SpaceBasis basis = build_basis(row.character);
  if (row.eisenstein_coeffs.size() != basis.eisenstein_part.size() ||
      row.cusp_coeffs.size() != basis.cusp_part.size()) {
    throw std::invalid_argument("formula row does not match the basis shape");
  }
  Rational total(0);
  for (std::size_t i = 0; i < basis.eisenstein_part.size(); ++i) {
    const auto& c = row.eisenstein_coeffs[i];
    if (c.is_zero()) continue;
    const auto& e = basis.eisenstein_part[i];
    if (n == 0) {
      total += c * eisenstein3_constant(e.chi, e.psi);
    } else if (n % e.scale == 0) {
      total += c * Rational(sigma_twisted(2, e.chi, e.psi, n / e.scale));
    }
  }
  if (n > 0) {
    const auto expanded = cached_basis(row.character, n + 1);
    for (std::size_t j = 0; j < row.cusp_coeffs.size(); ++j) {
      if (!row.cusp_coeffs[j].is_zero()) total += row.cusp_coeffs[j] * expanded->cusp[j].q_coefficient(n);
    }
  }
  return total;
}

std::vector<std::string> coefficient_names(const DirichletChar& chi) {
  auto family = [](char letter, std::initializer_list<int> idx) {
    std::vector<std::string> v;
    for (int i : idx) v.push_back(std::string(1, letter) + std::to_string(i));
    return v;
  };
  auto join = [](std::initializer_list<std::vector<std::string>> parts) {
    std::vector<std::string> v;
    for (const auto& p : parts) v.insert(v.end(), p.begin(), p.end());
    return v;
  };
  switch (chi.discriminant()) {
    case -4: return join({family('a', {1, 2, 3, 6}), family('b', {1, 2, 3, 6}), family('c', {1, 2, 3, 4})});
    case -3: return join({family('d', {1, 2, 4, 8}), family('e', {1, 2, 4, 8}), family('f', {1, 2, 3, 4})});
    case -8: return join({family('g', {1, 3}), family('h', {1, 3}), family('k', {1, 2, 3, 4, 5, 6})});
    case -24: return join({family('m', {1, 2, 3, 4}), family('n', {1, 2, 3, 4, 5, 6})});
    default: throw std::invalid_argument("no table for character " + chi.name());
  }
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    cell.erase(std::remove_if(cell.begin(), cell.end(), [](unsigned char ch) { return std::isspace(ch); }),
               cell.end());
    out.push_back(cell);
  }
  return out;
}

}  // namespace

std::vector<FormulaRow> parse_tables(std::string_view text) {
  std::vector<FormulaRow> rows;
  std::optional<DirichletChar> chi;
  std::vector<std::string> header;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("tables line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.front() == '[') {
      if (line.rfind("[chi ", 0) != 0 || line.back() != ']') fail("bad block header");
      chi = DirichletChar::parse(line.substr(5, line.size() - 6));
      header.clear();
      continue;
    }
    if (!chi) fail("row outside a block");
    if (header.empty()) {
      header = split_csv(line);
      std::vector<std::string> expected{"l1", "l2", "l3", "l6"};
      const auto names = coefficient_names(*chi);
      expected.insert(expected.end(), names.begin(), names.end());
      if (header != expected) fail("unexpected header for character " + chi->name());
      continue;
    }
    const auto cells = split_csv(line);
    if (cells.size() != header.size()) fail("wrong number of cells");
    FormulaRow row;
    row.character = *chi;
    try {
      row.l = ExponentVector(std::stoi(cells[0]), std::stoi(cells[1]), std::stoi(cells[2]), std::stoi(cells[3]));
    } catch (const std::exception& e) {
      fail(e.what());
    }
    const auto basis = build_basis(*chi);
    for (std::size_t i = 4; i < cells.size(); ++i) {
      auto& dst = i - 4 < basis.eisenstein_part.size() ? row.eisenstein_coeffs : row.cusp_coeffs;
      dst.push_back(Rational::parse(cells[i]));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

const std::vector<FormulaRow>& bundled_tables() {
  static const std::vector<FormulaRow> rows = parse_tables(detail::kBundledTables);
  return rows;
}

TableComparison compare_tables(const std::vector<FormulaRow>& derived, const std::vector<FormulaRow>& fixture) {
  TableComparison cmp;
  for (const auto& d : derived) {
    const auto it = std::find_if(fixture.begin(), fixture.end(), [&](const FormulaRow& f) { return f.l == d.l; });
    if (it == fixture.end() || it->character != d.character ||
        it->eisenstein_coeffs.size() != d.eisenstein_coeffs.size() || it->cusp_coeffs.size() != d.cusp_coeffs.size()) {
      cmp.missing_rows.push_back(d.l);
      continue;
    }
    ++cmp.rows_compared;
    const auto names = coefficient_names(d.character);
    std::vector<Rational> want = it->eisenstein_coeffs, got = d.eisenstein_coeffs;
    want.insert(want.end(), it->cusp_coeffs.begin(), it->cusp_coeffs.end());
    got.insert(got.end(), d.cusp_coeffs.begin(), d.cusp_coeffs.end());
    for (std::size_t i = 0; i < want.size(); ++i) {
      if (want[i] != got[i]) cmp.discrepancies.push_back({d.l, names[i], want[i], got[i]});
    }
  }
  return cmp;
}

}  // namespace qformlab
