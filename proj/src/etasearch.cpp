#include "qformlab/etasearch.hpp"

#include "qformlab/spaces.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qformlab {

namespace {

constexpr std::int64_t kLevel = 24;
constexpr std::int64_t kWeightSum = 6;    // sum r_delta at weight 3
constexpr std::int64_t kOrderTotal = 12;  // sum of the eight cusp orders at weight 3

Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  BigInt num, den;
  const BigInt x = a.numerator() * b.denominator();
  const BigInt y = b.numerator() * a.denominator();
  mpz_gcd(num.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  den = a.denominator() * b.denominator();
  return Rational(num, den);
}

BigInt big_lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Generators of {r in Z^8 : L1 and L2 hold}: integer kernel of [w1 24 0; w2 0 24] by
// unimodular column reduction, projected to the first eight coordinates.
std::vector<std::vector<BigInt>> congruence_lattice(const std::vector<std::int64_t>& divs) {
  const std::size_t d = divs.size();
  const std::size_t n = d + 2;
  std::vector<std::vector<BigInt>> m(2, std::vector<BigInt>(n, 0));
  for (std::size_t j = 0; j < d; ++j) {
    m[0][j] = divs[j];
    m[1][j] = kLevel / divs[j];
  }
  m[0][d] = kLevel;
  m[1][d + 1] = kLevel;
  std::vector<std::vector<BigInt>> u(n, std::vector<BigInt>(n, 0));  // columns of U
  for (std::size_t j = 0; j < n; ++j) u[j][j] = 1;
  auto combine = [&](std::size_t i, std::size_t j, const BigInt& x, const BigInt& y, const BigInt& z,
                     const BigInt& w) {
    // col_i <- x col_i + y col_j, col_j <- z col_i + w col_j (determinant 1).
    for (auto& row : m) {
      const BigInt a = row[i], b = row[j];
      row[i] = x * a + y * b;
      row[j] = z * a + w * b;
    }
    const auto ci = u[i], cj = u[j];
    for (std::size_t k = 0; k < n; ++k) {
      u[i][k] = x * ci[k] + y * cj[k];
      u[j][k] = z * ci[k] + w * cj[k];
    }
  };
  for (std::size_t row = 0; row < 2; ++row) {
    for (std::size_t j = row + 1; j < n; ++j) {
      const BigInt a = m[row][row], b = m[row][j];
      if (b == 0) continue;
      BigInt g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      combine(row, j, x, y, BigInt(-b / g), BigInt(a / g));
    }
  }
  std::vector<std::vector<BigInt>> gens;
  for (std::size_t j = 2; j < n; ++j) {
    if (m[0][j] != 0 || m[1][j] != 0) throw std::logic_error("column reduction did not clear the kernel block");
    gens.emplace_back(u[j].begin(), u[j].begin() + static_cast<std::ptrdiff_t>(d));
  }
  return gens;
}

CuspOrderGeometry build_geometry() {
  CuspOrderGeometry g;
  g.divisors = divisors(kLevel);
  const std::size_t d = g.divisors.size();
  g.order_matrix = ExactMatrix<Rational>(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<std::int64_t> unit(d, 0);
    unit[j] = 1;
    const EtaQuotient e(kLevel, unit);
    Rational column_sum(0);
    for (std::size_t i = 0; i < d; ++i) {
      g.order_matrix(i, j) = cusp_order(e, Cusp(1, g.divisors[i]));
      column_sum += g.order_matrix(i, j);
    }
    if (column_sum != Rational(2)) throw std::logic_error("cusp-order column sum is not 2");
  }
  if (rank(g.order_matrix) != d) throw std::logic_error("cusp-order matrix is singular");
  g.inverse = ExactMatrix<Rational>(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Rational> e(d, Rational(0));
    e[j] = Rational(1);
    const auto sol = solve_linear(g.order_matrix, e);
    for (std::size_t i = 0; i < d; ++i) g.inverse(i, j) = (*sol.solution)[i];
  }
  const auto gens = congruence_lattice(g.divisors);
  g.grid_step.assign(d, Rational(0));
  for (const auto& r : gens) {
    std::vector<Rational> rr;
    for (const auto& x : r) rr.emplace_back(x);
    const auto v = g.order_matrix.multiply(rr);
    for (std::size_t i = 0; i < d; ++i) g.grid_step[i] = rational_gcd(g.grid_step[i], v[i]);
  }
  return g;
}

bool l1_l2(const std::vector<std::int64_t>& divs, const std::vector<std::int64_t>& r) {
  std::int64_t l1 = 0, l2 = 0;
  for (std::size_t i = 0; i < divs.size(); ++i) {
    l1 += divs[i] * r[i];
    l2 += (kLevel / divs[i]) * r[i];
  }
  return l1 % kLevel == 0 && l2 % kLevel == 0;
}

std::vector<EtaQuotient> simplex_walk() {
  const auto& g = level24_geometry();
  const std::size_t d = g.divisors.size();
  // Common scale L so that u_c = L v_c are integers on steps s_c = L * grid_step_c.
  BigInt scale = 1;
  for (const auto& s : g.grid_step) scale = big_lcm(scale, s.denominator());
  std::vector<std::int64_t> step(d);
  for (std::size_t c = 0; c < d; ++c) step[c] = to_int64(g.grid_step[c] * Rational(scale));
  const std::int64_t total = to_int64(Rational(kOrderTotal) * Rational(scale));
  // r = A^{-1} u / L = B u / E with B integral.
  BigInt e = 1;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t c = 0; c < d; ++c) e = big_lcm(e, (g.inverse(i, c) / Rational(scale)).denominator());
  std::vector<std::int64_t> b(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t c = 0; c < d; ++c) b[i * d + c] = to_int64(g.inverse(i, c) / Rational(scale) * Rational(e));
  const std::int64_t denom = to_int64(Rational(e));

  std::vector<EtaQuotient> out;
  std::vector<std::int64_t> u(d, 0);
  std::vector<std::int64_t> acc(d, 0), r(d, 0);
  auto leaf = [&] {
    for (std::size_t i = 0; i < d; ++i) {
      if (acc[i] % denom != 0) return;
      r[i] = acc[i] / denom;
    }
    if (std::accumulate(r.begin(), r.end(), std::int64_t{0}) != kWeightSum) return;
    if (!l1_l2(g.divisors, r)) return;
    out.emplace_back(kLevel, r);
  };
  auto walk = [&](auto&& self, std::size_t c, std::int64_t remaining) -> void {
    if (c + 1 == d) {
      if (remaining % step[c] != 0) return;
      u[c] = remaining;
      for (std::size_t i = 0; i < d; ++i) acc[i] += b[i * d + c] * remaining;
      leaf();
      for (std::size_t i = 0; i < d; ++i) acc[i] -= b[i * d + c] * remaining;
      return;
    }
    for (std::int64_t x = 0; x <= remaining; x += step[c]) {
      u[c] = x;
      for (std::size_t i = 0; i < d; ++i) acc[i] += b[i * d + c] * x;
      self(self, c + 1, remaining - x);
      for (std::size_t i = 0; i < d; ++i) acc[i] -= b[i * d + c] * x;
    }
  };
  walk(walk, 0, total);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

const CuspOrderGeometry& level24_geometry() {
  static const CuspOrderGeometry g = build_geometry();
  return g;
}

const std::vector<EtaQuotient>& holomorphic_weight3_eta_quotients() {
  static const std::vector<EtaQuotient> all = simplex_walk();
  return all;
}

CensusResult enumerate_space(const DirichletChar& chi, bool with_expressible) {
  CensusResult res;
  res.character = chi;
  res.soundness_ok = true;
  for (const auto& f : holomorphic_weight3_eta_quotients()) {
    if (character_of(f) != chi) continue;
    const auto rep = ligozat_check(f);
    if (!rep.is_holomorphic || rep.weight != Rational(3) || rep.character_discriminant != chi.discriminant()) {
      res.soundness_ok = false;
    }
    res.members.push_back(f);
  }
  if (with_expressible) {
    for (const auto& f : res.members) {
      if (auto x = eisenstein_expressible(f, chi)) res.eisenstein_expressible.push_back({f, std::move(*x)});
    }
  }
  return res;
}

std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> exponent_box() {
  const auto& g = level24_geometry();
  const std::size_t d = g.divisors.size();
  std::vector<std::int64_t> lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    Rational mn = g.inverse(i, 0), mx = g.inverse(i, 0);
    for (std::size_t c = 1; c < d; ++c) {
      mn = std::min(mn, g.inverse(i, c));
      mx = std::max(mx, g.inverse(i, c));
    }
    // Linear in v over the simplex, so extremes sit at the vertices 12 e_c.
    const Rational a = mn * Rational(kOrderTotal), b = mx * Rational(kOrderTotal);
    BigInt f, c;
    mpz_cdiv_q(f.get_mpz_t(), a.numerator().get_mpz_t(), a.denominator().get_mpz_t());
    mpz_fdiv_q(c.get_mpz_t(), b.numerator().get_mpz_t(), b.denominator().get_mpz_t());
    lo[i] = f.get_si();
    hi[i] = c.get_si();
  }
  return {lo, hi};
}

std::vector<EtaQuotient> enumerate_box(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi) {
  const auto& g = level24_geometry();
  const std::size_t d = g.divisors.size();
  if (lo.size() != d || hi.size() != d) throw std::invalid_argument("enumerate_box: one bound per divisor of 24");
  // Integer copy of A scaled by the common denominator; every entry is positive.
  BigInt den = 1;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) den = big_lcm(den, g.order_matrix(i, j).denominator());
  std::vector<std::int64_t> a(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) a[i * d + j] = to_int64(g.order_matrix(i, j) * Rational(den));
  // Best case contribution of the unassigned tail to each cusp order, and tail sums of the box.
  std::vector<std::int64_t> tail_best((d + 1) * d, 0), tail_lo(d + 1, 0), tail_hi(d + 1, 0);
  for (std::size_t j = d; j-- > 0;) {
    tail_lo[j] = tail_lo[j + 1] + lo[j];
    tail_hi[j] = tail_hi[j + 1] + hi[j];
    for (std::size_t i = 0; i < d; ++i) tail_best[j * d + i] = tail_best[(j + 1) * d + i] + a[i * d + j] * hi[j];
  }
  std::vector<EtaQuotient> out;
  std::vector<std::int64_t> r(d, 0), v(d, 0);
  auto search = [&](auto&& self, std::size_t j, std::int64_t sum) -> void {
    const std::int64_t need = kWeightSum - sum;
    if (need < tail_lo[j] || need > tail_hi[j]) return;
    for (std::size_t i = 0; i < d; ++i) {
      if (v[i] + tail_best[j * d + i] < 0) return;
    }
    if (j == d) {
      if (l1_l2(g.divisors, r)) out.emplace_back(kLevel, r);
      return;
    }
    for (std::int64_t x = lo[j]; x <= hi[j]; ++x) {
      r[j] = x;
      for (std::size_t i = 0; i < d; ++i) v[i] += a[i * d + j] * x;
      self(self, j + 1, sum + x);
      for (std::size_t i = 0; i < d; ++i) v[i] -= a[i * d + j] * x;
    }
    r[j] = 0;
  };
  search(search, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Rational>> eisenstein_expressible(const EtaQuotient& f, const DirichletChar& chi,
                                                            std::int64_t q_precision) {
  const EtaQuotient g = f.level() == kLevel ? f : f.lifted(kLevel);
  const std::int64_t val = g.valuation24();
  if (val % kGrade != 0 || val < 0) return std::nullopt;
  const std::int64_t shift = val / kGrade;
  std::vector<Rational> coeffs(static_cast<std::size_t>(q_precision), Rational(0));
  if (shift < q_precision) {
    const auto prod = eta_product_coefficients(g, q_precision - shift);
    for (std::size_t i = 0; i < prod.size(); ++i) coeffs[static_cast<std::size_t>(shift) + i] = Rational(prod[i]);
  }
  const auto series = QSeries<Rational>::from_q_coefficients(std::move(coeffs), q_precision);
  const auto expanded = cached_basis(chi, q_precision);
  return solve_in_span(series, expanded->eisenstein, expanded->basis.sturm_bound + 1, q_precision);
}

Rational RemarkIdentity::rhs_coefficient(std::int64_t n) const {
  if (n == 0) return constant;
  Rational total(0);
  for (const auto& t : terms) {
    if (n % t.scale == 0) total += t.coefficient * Rational(sigma_twisted(2, t.chi, t.psi, n / t.scale));
  }
  return total;
}

std::string RemarkIdentity::rhs_string() const {
  std::ostringstream os;
  bool first = true;
  if (!constant.is_zero()) {
    os << constant.to_string();
    first = false;
  }
  for (const auto& t : terms) {
    const bool neg = t.coefficient.sign() < 0;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    const Rational c = t.coefficient.abs();
    if (c != Rational(1)) os << c.to_string() << "*";
    os << "sigma2[" << t.chi.name() << "," << t.psi.name() << "](n";
    if (t.scale != 1) os << "/" << t.scale;
    os << ")";
  }
  return os.str();
}

const std::vector<RemarkIdentity>& remark_identities() {
  static const std::vector<RemarkIdentity> ids = [] {
    const DirichletChar one(1), m3(-3), m4(-4), m8(-8);
    auto term = [](Rational c, DirichletChar chi, DirichletChar psi, std::int64_t t = 1) {
      return SigmaTerm{std::move(c), chi, psi, t};
    };
    std::vector<RemarkIdentity> v;
    v.push_back({EtaQuotient(3, {-3, 9}), Rational(0), {term(Rational(1), one, m3)}});
    v.push_back({EtaQuotient(6, {-4, 5, 4, 1}), Rational(0), {term(Rational(1), one, m3), term(Rational(1), one, m3, 2)}});
    v.push_back({EtaQuotient(6, {4, 1, -4, 5}), Rational(0), {term(Rational(1), m3, one), term(Rational(-1), m3, one, 2)}});
    v.push_back({EtaQuotient(4, {-4, 6, 4}), Rational(0), {term(Rational(1), one, m4)}});
    v.push_back({EtaQuotient(8, {-4, 2, 16, -8}), Rational(1), {term(Rational(4), one, m4), term(Rational(-4), m4, one, 2)}});
    v.push_back({EtaQuotient(4, {-12, 30, -12}), Rational(1), {term(Rational(16), one, m4), term(Rational(-4), m4, one)}});
    v.push_back({EtaQuotient(4, {4, -6, 8}), Rational(0), {term(Rational(1), one, m4), term(Rational(-8), one, m4, 2)}});
    v.push_back({EtaQuotient(4, {-4, 18, -8}), Rational(1), {term(Rational(4), m4, one), term(Rational(-8), m4, one, 2)}});
    v.push_back({EtaQuotient(8, {-2, -5, 23, -10}), Rational(1),
                 {term(Rational(8, 3), one, m8), term(Rational(-2, 3), m8, one)}});
    return v;
  }();
  return ids;
}

bool RemarkReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.ok; });
}

RemarkReport verify_remark_identities(std::int64_t q_precision) {
  RemarkReport rep;
  for (const auto& id : remark_identities()) {
    IdentityCheck check;
    check.name = id.lhs.to_string() + " = " + id.rhs_string();
    const auto lhs = eta_quotient_expansion(id.lhs, kGrade * q_precision);
    for (std::int64_t n = 0; n < q_precision; ++n) {
      if (lhs.q_coefficient(n) != id.rhs_coefficient(n)) {
        check.first_failure = n;
        break;
      }
    }
    check.ok = !check.first_failure;
    rep.checks.push_back(std::move(check));
  }
  return rep;
}

}  // namespace qformlab
