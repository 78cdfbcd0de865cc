#pragma once

#include "qformlab/rational.hpp"

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace qformlab {

/// Q[x]/(m(x)) for a monic defining polynomial m of degree >= 1.
///
/// Irreducibility is not checked. Coefficients are stored constant term first,
/// and the leading 1 is included.
class NumberField {
public:
  NumberField(std::vector<Rational> defining_poly, std::string generator_name = "a");

  int degree() const { return static_cast<int>(poly_.size()) - 1; }
  const std::vector<Rational>& defining_poly() const { return poly_; }
  const std::string& generator_name() const { return name_; }

  /// Reduces an arbitrary coefficient vector (constant first) modulo m(x).
  std::vector<Rational> reduce(std::vector<Rational> coeffs) const;

private:
  std::vector<Rational> poly_;
  std::string name_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_field(std::vector<Rational> defining_poly, std::string generator_name = "a");

/// Element of a NumberField, stored as its reduced residue.
///
/// An element with a null field is a rational constant; it combines with an
/// element of any field and adopts that field. Two elements from different
/// (non-null) fields cannot be mixed.
class NumberFieldElement {
public:
  NumberFieldElement() : coeffs_{Rational(0)} {}
  NumberFieldElement(std::int64_t c) : coeffs_{Rational(c)} {}  // NOLINT(implicit)
  NumberFieldElement(Rational c) : coeffs_{std::move(c)} {}     // NOLINT(implicit)
  NumberFieldElement(FieldPtr field, std::vector<Rational> coeffs);

  /// The generator x mod m(x).
  static NumberFieldElement generator(const FieldPtr& field);

  /// Parses comma-separated rational coefficients (constant first).
  static NumberFieldElement parse(const FieldPtr& field, std::string_view text);

  const FieldPtr& field() const { return field_; }
  /// Coefficients, constant first. Length is the field degree (1 for a bare constant).
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;

  bool is_zero() const;
  bool is_rational() const;

  NumberFieldElement inverse() const;

  /// Comma-separated coefficients, constant term first.
  std::string to_string() const;
  /// Human-readable polynomial in the generator, e.g. "2*a - 9".
  std::string to_poly_string() const;

  NumberFieldElement& operator+=(const NumberFieldElement& o);
  NumberFieldElement& operator-=(const NumberFieldElement& o);
  NumberFieldElement& operator*=(const NumberFieldElement& o);
  NumberFieldElement& operator/=(const NumberFieldElement& o);

  friend NumberFieldElement operator+(NumberFieldElement a, const NumberFieldElement& b) { return a += b; }
  friend NumberFieldElement operator-(NumberFieldElement a, const NumberFieldElement& b) { return a -= b; }
  friend NumberFieldElement operator*(NumberFieldElement a, const NumberFieldElement& b) { return a *= b; }
  friend NumberFieldElement operator/(NumberFieldElement a, const NumberFieldElement& b) { return a /= b; }
  NumberFieldElement operator-() const;

  friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b);

private:
  void adopt_field(const NumberFieldElement& o);

  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const NumberFieldElement& e);

NumberFieldElement nf_mul(const NumberFieldElement& a, const NumberFieldElement& b);

/// Evaluates the polynomial with the given coefficients (constant first) at x.
NumberFieldElement evaluate_poly(const std::vector<Rational>& poly, const NumberFieldElement& x);

}  // namespace qformlab
