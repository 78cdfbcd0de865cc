#include "qformlab/etaq.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qformlab {

namespace {

std::int64_t squarefree_part(BigInt n) {
  if (n < 0) n = -n;
  BigInt result = 1;
  for (long p = 2; n > 1; ++p) {
    if (BigInt(p) * p > n) {
      result *= n;
      break;
    }
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
      n /= p;
      ++e;
    }
    if (e % 2) result *= p;
  }
  if (!result.fits_slong_p()) throw std::domain_error("squarefree part too large");
  return result.get_si();
}

BigInt ipow(std::int64_t base, std::int64_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

EtaQuotient::EtaQuotient(std::int64_t level, std::vector<std::int64_t> exponents)
    : level_(level), divisors_(qformlab::divisors(level)), exponents_(std::move(exponents)) {
  if (exponents_.size() != divisors_.size()) {
    throw std::invalid_argument("eta quotient of level " + std::to_string(level) + " needs " +
                                std::to_string(divisors_.size()) + " exponents, got " +
                                std::to_string(exponents_.size()));
  }
  if (std::all_of(exponents_.begin(), exponents_.end(), [](std::int64_t r) { return r == 0; })) {
    throw std::invalid_argument("eta quotient needs a nonzero exponent");
  }
}

EtaQuotient EtaQuotient::from_pairs(std::int64_t level, const std::map<std::int64_t, std::int64_t>& pairs) {
  const auto divs = qformlab::divisors(level);
  std::vector<std::int64_t> exps(divs.size(), 0);
  for (const auto& [delta, r] : pairs) {
    const auto it = std::find(divs.begin(), divs.end(), delta);
    if (it == divs.end()) throw std::invalid_argument(std::to_string(delta) + " does not divide the level");
    exps[static_cast<std::size_t>(it - divs.begin())] += r;
  }
  return EtaQuotient(level, std::move(exps));
}

EtaQuotient EtaQuotient::parse(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("malformed eta quotient: " + std::string(text)); };
  if (text.substr(0, 3) != "eta") fail();
  const auto open = text.find('[');
  const auto close = text.rfind(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open || close + 1 != text.size()) {
    fail();
  }
  const std::string level_text(text.substr(3, open - 3));
  if (level_text.empty() || level_text.find_first_not_of("0123456789") != std::string::npos) fail();
  const std::int64_t level = std::stoll(level_text);
  if (level <= 0) fail();
  std::vector<std::int64_t> exps;
  std::string_view body = text.substr(open + 1, close - open - 1);
  std::size_t start = 0;
  while (true) {
    const auto comma = body.find(',', start);
    std::string item(body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    std::size_t used = 0;
    try {
      exps.push_back(std::stoll(item, &used));
    } catch (const std::exception&) {
      fail();
    }
    if (used != item.size()) fail();
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return EtaQuotient(level, std::move(exps));
}

std::int64_t EtaQuotient::exponent(std::int64_t delta) const {
  for (std::size_t i = 0; i < divisors_.size(); ++i) {
    if (divisors_[i] == delta) return exponents_[i];
  }
  return 0;
}

Rational EtaQuotient::weight() const {
  return Rational(std::accumulate(exponents_.begin(), exponents_.end(), std::int64_t{0}), 2);
}

std::int64_t EtaQuotient::valuation24() const {
  std::int64_t v = 0;
  for (std::size_t i = 0; i < divisors_.size(); ++i) v += divisors_[i] * exponents_[i];
  return v;
}

EtaQuotient EtaQuotient::lifted(std::int64_t new_level) const {
  if (new_level % level_ != 0) throw std::invalid_argument("new level must be a multiple of the old one");
  std::map<std::int64_t, std::int64_t> pairs;
  for (std::size_t i = 0; i < divisors_.size(); ++i) pairs[divisors_[i]] = exponents_[i];
  return from_pairs(new_level, pairs);
}

EtaQuotient EtaQuotient::operator*(const EtaQuotient& o) const {
  const std::int64_t lvl = std::lcm(level_, o.level_);
  std::map<std::int64_t, std::int64_t> pairs;
  for (std::size_t i = 0; i < divisors_.size(); ++i) pairs[divisors_[i]] += exponents_[i];
  for (std::size_t i = 0; i < o.divisors_.size(); ++i) pairs[o.divisors_[i]] += o.exponents_[i];
  return from_pairs(lvl, pairs);
}

std::string EtaQuotient::to_string() const {
  std::ostringstream os;
  os << "eta" << level_ << '[';
  for (std::size_t i = 0; i < exponents_.size(); ++i) os << (i ? "," : "") << exponents_[i];
  os << ']';
  return os.str();
}

Cusp::Cusp(std::int64_t numerator, std::int64_t denominator) : a(numerator), c(denominator) {
  if (c <= 0) throw std::invalid_argument("cusp denominator must be positive");
  if (std::gcd(a, c) != 1) throw std::invalid_argument("cusp must be a reduced fraction");
}

std::string Cusp::to_string() const { return std::to_string(a) + "/" + std::to_string(c); }

Rational cusp_order(const EtaQuotient& f, const Cusp& cusp) {
  const std::int64_t n = f.level();
  const std::int64_t c = cusp.c;
  Rational sum(0);
  for (std::size_t i = 0; i < f.divisors().size(); ++i) {
    const std::int64_t delta = f.divisors()[i];
    const std::int64_t g = std::gcd(delta, c);
    sum += Rational(g * g * f.exponents()[i], delta);
  }
  const std::int64_t g2 = std::gcd(c * c, n);
  return Rational(n, 24 * g2) * sum;
}

DirichletChar character_of(const EtaQuotient& f) {
  const Rational k = f.weight();
  if (!k.is_integer()) throw std::domain_error("character_of: weight " + k.to_string() + " is not an integer");
  if (24 % f.level() != 0) throw std::domain_error("character_of: level must divide 24");
  BigInt num = 1, den = 1;
  for (std::size_t i = 0; i < f.divisors().size(); ++i) {
    const std::int64_t r = f.exponents()[i];
    if (r > 0) num *= ipow(f.divisors()[i], r);
    if (r < 0) den *= ipow(f.divisors()[i], -r);
  }
  const std::int64_t sp = squarefree_part(num * den);
  const bool odd = to_int64(k) % 2 != 0;
  switch (sp) {
    case 1: return DirichletChar(odd ? -4 : 1);
    case 2: return DirichletChar(odd ? -8 : 8);
    case 3: return DirichletChar(odd ? -3 : 12);
    case 6: return DirichletChar(odd ? -24 : 24);
    default: throw std::domain_error("character_of: unexpected squarefree part " + std::to_string(sp));
  }
}

ModularityReport ligozat_check(const EtaQuotient& f) {
  ModularityReport rep;
  rep.weight = f.weight();
  std::int64_t l1 = 0, l2 = 0;
  for (std::size_t i = 0; i < f.divisors().size(); ++i) {
    l1 += f.divisors()[i] * f.exponents()[i];
    l2 += (f.level() / f.divisors()[i]) * f.exponents()[i];
  }
  rep.l1_ok = l1 % 24 == 0;
  rep.l2_ok = l2 % 24 == 0;
  rep.l4_ok = rep.weight.is_integer() && rep.weight.sign() > 0;
  bool nonneg = true, positive = true;
  for (const std::int64_t c : f.divisors()) {
    const Rational v = cusp_order(f, Cusp(1, c));
    if (v.sign() < 0) nonneg = false;
    if (v.sign() <= 0) positive = false;
    rep.cusp_orders.emplace(Cusp(1, c), v);
  }
  rep.is_holomorphic = rep.l1_ok && rep.l2_ok && rep.l4_ok && nonneg;
  rep.is_cusp = rep.is_holomorphic && positive;
  if (rep.weight.is_integer() && 24 % f.level() == 0) rep.character_discriminant = character_of(f).discriminant();
  return rep;
}

QSeries<Rational> eta_quotient_expansion(const EtaQuotient& f, std::int64_t truncation) {
  const std::int64_t val = f.valuation24();
  const std::int64_t rel = truncation - val;
  if (rel <= 0) throw std::invalid_argument("eta_quotient_expansion: truncation must exceed the valuation");
  QSeries<Rational> acc = QSeries<Rational>::monomial(Rational(1), 0);
  for (std::size_t i = 0; i < f.divisors().size(); ++i) {
    const std::int64_t r = f.exponents()[i];
    if (r == 0) continue;
    const std::int64_t delta = f.divisors()[i];
    acc = series_mul(acc, series_pow(eta_expansion(delta, delta + rel), r));
  }
  return acc.truncate(truncation);
}

std::vector<BigInt> eta_product_coefficients(const EtaQuotient& f, std::int64_t count) {
  if (count <= 0) return {};
  const auto n = static_cast<std::size_t>(count);
  // q F'/F = sum_k g_k q^k with g_k = -sum_{delta | k} r_delta * delta * sigma(k / delta).
  std::vector<BigInt> sigma(n, 0);
  for (std::size_t d = 1; d < n; ++d) {
    for (std::size_t m = d; m < n; m += d) sigma[m] += static_cast<unsigned long>(d);
  }
  std::vector<BigInt> g(n, 0);
  for (std::size_t i = 0; i < f.divisors().size(); ++i) {
    const std::int64_t r = f.exponents()[i];
    if (r == 0) continue;
    const auto delta = static_cast<std::size_t>(f.divisors()[i]);
    for (std::size_t k = delta; k < n; k += delta) {
      g[k] -= BigInt(static_cast<long>(r * static_cast<std::int64_t>(delta))) * sigma[k / delta];
    }
  }
  std::vector<BigInt> coeffs(n, 0);
  coeffs[0] = 1;
  for (std::size_t m = 1; m < n; ++m) {
    BigInt acc = 0;
    for (std::size_t k = 1; k <= m; ++k) {
      if (g[k] != 0) acc += g[k] * coeffs[m - k];
    }
    coeffs[m] = acc / static_cast<unsigned long>(m);
  }
  return coeffs;
}

}  // namespace qformlab
