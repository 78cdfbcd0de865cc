#include "qformlab/characters.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace qformlab {

namespace {

int conductor_of(int t) {
  switch (t) {
    case 1: return 1;
    case -3: return 3;
    case -4: return 4;
    case 8: case -8: return 8;
    case 12: return 12;
    case 24: case -24: return 24;
    default: throw std::invalid_argument("unsupported character discriminant " + std::to_string(t));
  }
}

// Jacobi symbol (a/n) for odd n > 0.
int jacobi(std::int64_t a, std::int64_t n) {
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

}  // namespace

DirichletChar::DirichletChar(int discriminant)
    : discriminant_(discriminant), conductor_(conductor_of(discriminant)) {}

DirichletChar DirichletChar::parse(std::string_view text) {
  std::size_t pos = 0;
  int t = 0;
  try {
    t = std::stoi(std::string(text), &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad character name: " + std::string(text));
  }
  if (pos != text.size()) throw std::invalid_argument("bad character name: " + std::string(text));
  return DirichletChar(t);
}

int DirichletChar::parity() const { return kronecker(discriminant_, -1); }

int DirichletChar::operator()(std::int64_t n) const { return char_eval(*this, n); }

const std::array<DirichletChar, 8>& table_characters() {
  static const std::array<DirichletChar, 8> chars{DirichletChar(1),  DirichletChar(-24), DirichletChar(-4),
                                                  DirichletChar(24), DirichletChar(8),   DirichletChar(-3),
                                                  DirichletChar(-8), DirichletChar(12)};
  return chars;
}

const std::array<int, 8>& table_units() {
  static const std::array<int, 8> units{1, 5, 7, 11, 13, 17, 19, 23};
  return units;
}

int kronecker(std::int64_t t, std::int64_t n) {
  if (n == 0) return (t == 1 || t == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (t < 0) result = -result;
  }
  // Factor out powers of two: (t/2) is 0 for even t, else +1 or -1 by t mod 8.
  int twos = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++twos;
  }
  if (twos > 0) {
    if (t % 2 == 0) return 0;
    std::int64_t r = t % 8;
    if (r < 0) r += 8;
    if ((r == 3 || r == 5) && (twos % 2 == 1)) result = -result;
  }
  if (n == 1) return result;
  return result * jacobi(t, n);
}

int char_eval(const DirichletChar& chi, std::int64_t n) {
  if (std::gcd(n, static_cast<std::int64_t>(chi.conductor())) > 1) return 0;
  if (chi.conductor() == 1) return n == 0 ? 0 : 1;
  return kronecker(chi.discriminant(), n);
}

Rational gen_bernoulli3(const DirichletChar& chi) {
  // Power series in x through x^3. numerator = sum_a chi(a) e^{ax};
  // denominator = (e^{Lx} - 1)/x, a unit, so the quotient is a plain series division.
  constexpr int kTerms = 4;
  const std::int64_t L = chi.conductor();
  std::vector<Rational> num(kTerms, Rational(0)), den(kTerms, Rational(0));
  std::int64_t factorial = 1;
  for (int i = 0; i < kTerms; ++i) {
    if (i > 0) factorial *= i;
    for (std::int64_t a = 1; a <= L; ++a) {
      const int c = chi(a);
      if (c == 0) continue;
      BigInt power = 1;
      for (int e = 0; e < i; ++e) power *= static_cast<long>(a);
      num[i] += Rational(BigInt(c) * power, BigInt(static_cast<long>(factorial)));
    }
    BigInt lpow = 1;
    for (int e = 0; e <= i; ++e) lpow *= static_cast<long>(L);
    den[i] = Rational(lpow, BigInt(static_cast<long>(factorial * (i + 1))));
  }
  std::vector<Rational> quot(kTerms, Rational(0));
  for (int i = 0; i < kTerms; ++i) {
    Rational acc = num[i];
    for (int j = 1; j <= i; ++j) acc -= den[j] * quot[i - j];
    quot[i] = acc / den[0];
  }
  return Rational(6) * quot[3];
}

BigInt sigma_twisted(int k, const DirichletChar& chi, const DirichletChar& psi, std::int64_t n) {
  if (n <= 0) return 0;
  BigInt total = 0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    const std::int64_t e = n / d;
    auto term = [&](std::int64_t small, std::int64_t large) {
      const int c = chi(small) * psi(large);
      if (c == 0) return;
      BigInt p = 1;
      for (int i = 0; i < k; ++i) p *= static_cast<long>(small);
      total += c * p;
    };
    term(d, e);
    if (e != d) term(e, d);
  }
  return total;
}

BigInt sigma_twisted(int k, const DirichletChar& chi, const DirichletChar& psi, const Rational& n) {
  if (!n.is_integer() || n.sign() <= 0) return 0;
  return sigma_twisted(k, chi, psi, to_int64(n));
}

}  // namespace qformlab
