#include "qformlab/number_field.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qformlab {

namespace {

using Poly = std::vector<Rational>;

void strip(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Returns (quotient, remainder) of a / b; b must be nonzero after stripping.
std::pair<Poly, Poly> divmod(Poly a, Poly b) {
  strip(a);
  strip(b);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1, Rational(0));
  const Rational lead_inv = b.back().inverse();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    const Rational c = a[i] * lead_inv;
    const std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    if (i == 0) break;
  }
  strip(a);
  strip(q);
  return {q, a};
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  strip(r);
  return r;
}

Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  strip(a);
  return a;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->defining_poly() == b->defining_poly();
}

}  // namespace

NumberField::NumberField(std::vector<Rational> defining_poly, std::string generator_name)
    : poly_(std::move(defining_poly)), name_(std::move(generator_name)) {
  strip(poly_);
  if (poly_.size() < 2) throw std::invalid_argument("defining polynomial must have degree >= 1");
  if (poly_.back() != Rational(1)) throw std::invalid_argument("defining polynomial must be monic");
}

std::vector<Rational> NumberField::reduce(std::vector<Rational> coeffs) const {
  const auto d = static_cast<std::size_t>(degree());
  // x^i for i >= d is rewritten using x^d = -(m_0 + ... + m_{d-1} x^{d-1}).
  for (std::size_t i = coeffs.size(); i-- > d;) {
    const Rational c = coeffs[i];
    if (c.is_zero()) continue;
    coeffs[i] = Rational(0);
    for (std::size_t j = 0; j < d; ++j) coeffs[i - d + j] -= c * poly_[j];
  }
  coeffs.resize(d, Rational(0));
  return coeffs;
}

FieldPtr make_field(std::vector<Rational> defining_poly, std::string generator_name) {
  return std::make_shared<const NumberField>(std::move(defining_poly), std::move(generator_name));
}

NumberFieldElement::NumberFieldElement(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (field_) {
    coeffs_ = field_->reduce(std::move(coeffs_));
  } else {
    strip(coeffs_);
    if (coeffs_.size() > 1) throw std::invalid_argument("field-less element must be a constant");
    if (coeffs_.empty()) coeffs_.push_back(Rational(0));
  }
}

NumberFieldElement NumberFieldElement::generator(const FieldPtr& field) {
  return NumberFieldElement(field, {Rational(0), Rational(1)});
}

NumberFieldElement NumberFieldElement::parse(const FieldPtr& field, std::string_view text) {
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    coeffs.push_back(Rational::parse(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (field && coeffs.size() > static_cast<std::size_t>(field->degree())) {
    throw std::invalid_argument("too many coefficients for field degree");
  }
  return NumberFieldElement(field, std::move(coeffs));
}

Rational NumberFieldElement::coeff(int i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

bool NumberFieldElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool NumberFieldElement::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

void NumberFieldElement::adopt_field(const NumberFieldElement& o) {
  if (!o.field_) return;
  if (!field_) {
    field_ = o.field_;
    coeffs_.resize(static_cast<std::size_t>(field_->degree()), Rational(0));
    return;
  }
  if (!same_field(field_, o.field_)) throw std::invalid_argument("number field mismatch");
}

NumberFieldElement& NumberFieldElement::operator+=(const NumberFieldElement& o) {
  adopt_field(o);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

NumberFieldElement& NumberFieldElement::operator-=(const NumberFieldElement& o) {
  adopt_field(o);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

NumberFieldElement& NumberFieldElement::operator*=(const NumberFieldElement& o) {
  adopt_field(o);
  if (o.is_rational()) {
    const Rational c = o.coeffs_[0];
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  Poly prod(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = field_->reduce(std::move(prod));
  return *this;
}

NumberFieldElement NumberFieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (is_rational()) {
    auto r = *this;
    for (auto& c : r.coeffs_) c = Rational(0);
    r.coeffs_[0] = coeffs_[0].inverse();
    return r;
  }
  // Extended Euclid: find s with s*a + t*m = g, g a nonzero constant.
  Poly r0 = field_->defining_poly(), r1 = coeffs_;
  Poly s0{}, s1{Rational(1)};
  strip(r1);
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    Poly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw std::domain_error("element is a zero divisor; defining polynomial is reducible");
  const Rational g_inv = r1[0].inverse();
  for (auto& c : s1) c *= g_inv;
  return NumberFieldElement(field_, std::move(s1));
}

NumberFieldElement& NumberFieldElement::operator/=(const NumberFieldElement& o) {
  adopt_field(o);
  return *this *= o.inverse();
}

NumberFieldElement NumberFieldElement::operator-() const {
  auto r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) {
  if (a.field_ && b.field_ && !same_field(a.field_, b.field_)) return false;
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeff(static_cast<int>(i)) != b.coeff(static_cast<int>(i))) return false;
  }
  return true;
}

std::string NumberFieldElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].to_string();
  }
  return out;
}

std::string NumberFieldElement::to_poly_string() const {
  const std::string name = field_ ? field_->generator_name() : "a";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != Rational(1)) os << mag << '*';
    os << name;
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const NumberFieldElement& e) { return os << e.to_poly_string(); }

NumberFieldElement nf_mul(const NumberFieldElement& a, const NumberFieldElement& b) {
  if (a.field() && b.field() && !same_field(a.field(), b.field())) {
    throw std::invalid_argument("nf_mul: elements belong to different fields");
  }
  return a * b;
}

NumberFieldElement evaluate_poly(const std::vector<Rational>& poly, const NumberFieldElement& x) {
  NumberFieldElement acc(0);
  for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + NumberFieldElement(poly[i]);
  return acc;
}

}  // namespace qformlab
