#include "qformlab/eisenstein.hpp"

#include <stdexcept>

namespace qformlab {

EisensteinSpec::EisensteinSpec(DirichletChar chi_, DirichletChar psi_, std::int64_t t)
    : chi(chi_), psi(psi_), scale(t) {
  if (scale <= 0) throw std::invalid_argument("Eisenstein scale must be positive");
  if (chi.parity() * psi.parity() != -1) {
    throw std::invalid_argument("weight 3 needs chi(-1) psi(-1) = -1: " + to_string());
  }
}

EisensteinSpec EisensteinSpec::parse(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("malformed Eisenstein series name: " + std::string(text)); };
  if (text.substr(0, 3) != "E3[" || text.empty() || text.back() != ']') fail();
  const std::string_view body = text.substr(3, text.size() - 4);
  const auto c1 = body.find(',');
  if (c1 == std::string_view::npos) fail();
  const auto c2 = body.find(',', c1 + 1);
  const auto chi = DirichletChar::parse(body.substr(0, c1));
  const auto psi = DirichletChar::parse(body.substr(c1 + 1, c2 == std::string_view::npos ? std::string_view::npos : c2 - c1 - 1));
  std::int64_t t = 1;
  if (c2 != std::string_view::npos) {
    const std::string scale(body.substr(c2 + 1));
    std::size_t used = 0;
    try {
      t = std::stoll(scale, &used);
    } catch (const std::exception&) {
      fail();
    }
    if (used != scale.size()) fail();
  }
  return EisensteinSpec(chi, psi, t);
}

std::string EisensteinSpec::to_string() const {
  return "E3[" + chi.name() + "," + psi.name() + "," + std::to_string(scale) + "]";
}

Rational eisenstein3_constant(const DirichletChar& chi, const DirichletChar& psi) {
  if (psi.conductor() > 1) return Rational(0);
  return -gen_bernoulli3(chi) / Rational(6);
}

QSeries<Rational> eisenstein3(const EisensteinSpec& spec, std::int64_t q_precision) {
  if (q_precision <= 0) throw std::invalid_argument("eisenstein3: precision must be positive");
  std::vector<Rational> coeffs(static_cast<std::size_t>(q_precision), Rational(0));
  coeffs[0] = eisenstein3_constant(spec.chi, spec.psi);
  for (std::int64_t n = 1; n * spec.scale < q_precision; ++n) {
    coeffs[static_cast<std::size_t>(n * spec.scale)] = Rational(sigma_twisted(2, spec.chi, spec.psi, n));
  }
  return QSeries<Rational>::from_q_coefficients(std::move(coeffs), q_precision);
}

}  // namespace qformlab
