#include "qformlab/qseries.hpp"

namespace qformlab {

QSeries<Rational> eta_expansion(std::int64_t delta, std::int64_t truncation) {
  if (delta <= 0) throw std::invalid_argument("eta_expansion: delta must be positive");
  if (truncation <= delta) throw std::invalid_argument("eta_expansion: truncation must exceed delta");
  // Euler: prod (1 - x^n) = sum_m (-1)^m x^{m(3m-1)/2}, x = q^delta, plus the q^{delta/24} prefactor.
  const std::int64_t step = kGrade * delta;
  const auto len = static_cast<std::size_t>((truncation - delta - 1) / step + 1);
  std::vector<Rational> coeffs(len, Rational(0));
  for (std::int64_t m = 0;; ++m) {
    bool placed = false;
    for (const std::int64_t k : {m, -m - 1}) {
      const std::int64_t pent = k * (3 * k - 1) / 2;
      if (static_cast<std::size_t>(pent) < len) {
        coeffs[static_cast<std::size_t>(pent)] = Rational((k % 2 == 0) ? 1 : -1);
        placed = true;
      }
    }
    if (!placed) break;
  }
  return QSeries<Rational>(delta, step, std::move(coeffs), truncation);
}

}  // namespace qformlab
