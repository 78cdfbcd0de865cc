#pragma once

#include "qformlab/matrix.hpp"
#include "qformlab/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qformlab {

/// Exponents are in units of q^(1/24).
inline constexpr std::int64_t kGrade = 24;
/// Truncation of a series that is known exactly (a polynomial).
inline constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max() / 4;

inline std::int64_t add_truncation(std::int64_t a, std::int64_t b) {
  if (a >= kExact || b >= kExact) return kExact;
  return std::min(a + b, kExact);
}

/// Truncated formal power series in q^(1/24).
///
/// Stored coefficients sit at exponents valuation + stride * i. Coefficients at
/// exponents off that lattice are zero; coefficients at exponents >= truncation
/// are unknown and never reported. The representation is canonical: the leading
/// stored coefficient is nonzero (the zero series has no coefficients and
/// valuation == truncation), and stride is the gcd of the offsets of the
/// nonzero coefficients (0 for a single term).
template <ExactScalar S>
class QSeries {
public:
  /// The zero series known up to the given truncation.
  explicit QSeries(std::int64_t truncation = kExact) : valuation_(truncation), truncation_(truncation) {}

  QSeries(std::int64_t valuation, std::int64_t stride, std::vector<S> coeffs, std::int64_t truncation)
      : valuation_(valuation), stride_(stride), truncation_(truncation), coeffs_(std::move(coeffs)) {
    if (stride_ < 0) throw std::invalid_argument("negative stride");
    if (stride_ == 0 && coeffs_.size() > 1) throw std::invalid_argument("stride 0 admits a single term");
    normalize();
  }

  /// c * q^(exponent/24), known exactly.
  static QSeries monomial(const S& c, std::int64_t exponent, std::int64_t truncation = kExact) {
    return QSeries(exponent, 0, {c}, truncation);
  }

  /// Dense series in integer powers of q: coeffs[i] is the coefficient of q^i;
  /// truncation is 24 * q_precision.
  static QSeries from_q_coefficients(std::vector<S> coeffs, std::int64_t q_precision) {
    if (static_cast<std::int64_t>(coeffs.size()) > q_precision) coeffs.resize(static_cast<std::size_t>(q_precision));
    return QSeries(0, kGrade, std::move(coeffs), kGrade * q_precision);
  }

  std::int64_t valuation() const { return valuation_; }
  std::int64_t truncation() const { return truncation_; }
  std::int64_t stride() const { return stride_; }
  bool is_exact() const { return truncation_ >= kExact; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<S>& stored() const { return coeffs_; }

  /// Coefficient of q^(e/24); throws if e is at or beyond the truncation.
  S coefficient(std::int64_t e) const {
    if (e >= truncation_) throw std::out_of_range("coefficient beyond truncation");
    if (coeffs_.empty() || e < valuation_) return S(0);
    const std::int64_t off = e - valuation_;
    if (stride_ == 0) return off == 0 ? coeffs_[0] : S(0);
    if (off % stride_ != 0) return S(0);
    const auto i = static_cast<std::size_t>(off / stride_);
    return i < coeffs_.size() ? coeffs_[i] : S(0);
  }

  /// Coefficient of q^n (integer power).
  S q_coefficient(std::int64_t n) const { return coefficient(kGrade * n); }

  /// Coefficients of q^0 .. q^(count-1).
  std::vector<S> q_coefficients(std::int64_t count) const {
    std::vector<S> out;
    out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));
    for (std::int64_t n = 0; n < count; ++n) out.push_back(q_coefficient(n));
    return out;
  }

  /// True when the valuation and every nonzero coefficient sit at integer powers of q.
  bool is_integral() const {
    if (coeffs_.empty()) return true;
    return valuation_ % kGrade == 0 && stride_ % kGrade == 0;
  }

  /// Copy with truncation lowered to min(current, t).
  QSeries truncate(std::int64_t t) const {
    if (t >= truncation_) return *this;
    QSeries r = *this;
    r.truncation_ = t;
    r.normalize();
    return r;
  }

  QSeries operator-() const {
    QSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  QSeries scaled(const S& c) const {
    if (c.is_zero()) return QSeries(truncation_);
    QSeries r = *this;
    for (auto& x : r.coeffs_) x = x * c;
    return r;
  }

  /// Substitutes q -> q^t.
  QSeries rescaled(std::int64_t t) const {
    if (t <= 0) throw std::invalid_argument("rescale factor must be positive");
    QSeries r = *this;
    r.valuation_ *= t;
    r.stride_ *= t;
    r.truncation_ = is_exact() ? kExact : truncation_ * t;
    return r;
  }

  /// Re-expresses the coefficients over another scalar type.
  template <ExactScalar T>
  QSeries<T> convert() const {
    std::vector<T> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(T(c));
    if (coeffs_.empty()) return QSeries<T>(truncation_);
    return QSeries<T>(valuation_, stride_, std::move(out), truncation_);
  }

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.valuation_ == b.valuation_ && a.stride_ == b.stride_ && a.truncation_ == b.truncation_ &&
           a.coeffs_ == b.coeffs_;
  }

  /// True when both series agree on every exponent below min(truncations, limit).
  friend bool agree(const QSeries& a, const QSeries& b, std::int64_t limit = kExact) {
    const QSeries d = series_add(a, -b).truncate(limit);
    return d.is_zero();
  }

  template <ExactScalar T>
  friend QSeries<T> series_add(const QSeries<T>& f, const QSeries<T>& g);
  template <ExactScalar T>
  friend QSeries<T> series_mul(const QSeries<T>& f, const QSeries<T>& g);

private:
  void normalize() {
    // Drop coefficients at or past the truncation.
    if (!coeffs_.empty()) {
      if (valuation_ >= truncation_) {
        coeffs_.clear();
      } else if (stride_ > 0) {
        const auto keep = static_cast<std::size_t>((truncation_ - valuation_ - 1) / stride_ + 1);
        if (coeffs_.size() > keep) coeffs_.resize(keep);
      }
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      valuation_ = truncation_;
      stride_ = 0;
      return;
    }
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      valuation_ += static_cast<std::int64_t>(lead) * stride_;
    }
    std::int64_t g = 0;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      if (!coeffs_[i].is_zero()) g = std::gcd(g, static_cast<std::int64_t>(i));
    }
    if (g == 0) {
      coeffs_.resize(1);
      stride_ = 0;
    } else if (g > 1) {
      std::vector<S> packed;
      packed.reserve(coeffs_.size() / static_cast<std::size_t>(g) + 1);
      for (std::size_t i = 0; i < coeffs_.size(); i += static_cast<std::size_t>(g)) packed.push_back(coeffs_[i]);
      coeffs_ = std::move(packed);
      stride_ *= g;
    }
  }

  std::int64_t valuation_ = 0;
  std::int64_t stride_ = 0;
  std::int64_t truncation_ = kExact;
  std::vector<S> coeffs_;
};

/// Coefficient-wise sum; truncation is the smaller of the two.
template <ExactScalar S>
QSeries<S> series_add(const QSeries<S>& f, const QSeries<S>& g) {
  const std::int64_t trunc = std::min(f.truncation_, g.truncation_);
  if (f.is_zero()) return g.truncate(trunc);
  if (g.is_zero()) return f.truncate(trunc);
  const std::int64_t val = std::min(f.valuation_, g.valuation_);
  if (val >= trunc) return QSeries<S>(trunc);
  std::int64_t stride = std::gcd(f.stride_, g.stride_);
  stride = std::gcd(stride, f.valuation_ - g.valuation_);
  if (stride == 0) {
    // Both single terms at the same exponent.
    return QSeries<S>(val, 0, {f.coeffs_[0] + g.coeffs_[0]}, trunc);
  }
  const auto len = static_cast<std::size_t>((trunc - val - 1) / stride + 1);
  std::vector<S> out;
  auto place = [&](const QSeries<S>& h) {
    for (std::size_t i = 0; i < h.coeffs_.size(); ++i) {
      const std::int64_t e = h.valuation_ + static_cast<std::int64_t>(i) * h.stride_;
      if (e >= trunc) break;
      const auto pos = static_cast<std::size_t>((e - val) / stride);
      if (pos >= out.size()) out.resize(std::min(len, pos + 1), S(0));
      out[pos] = out[pos] + h.coeffs_[i];
      if (h.stride_ == 0) break;
    }
  };
  place(f);
  place(g);
  return QSeries<S>(val, stride, std::move(out), trunc);
}

template <ExactScalar S>
QSeries<S> series_sub(const QSeries<S>& f, const QSeries<S>& g) {
  return series_add(f, -g);
}

/// Cauchy product; truncation min(T_f + v_g, T_g + v_f).
template <ExactScalar S>
QSeries<S> series_mul(const QSeries<S>& f, const QSeries<S>& g) {
  const std::int64_t tf = add_truncation(f.truncation_, g.valuation_);
  const std::int64_t tg = add_truncation(g.truncation_, f.valuation_);
  const std::int64_t trunc = std::min(tf, tg);
  if (f.is_zero() || g.is_zero()) return QSeries<S>(trunc);
  const std::int64_t val = f.valuation_ + g.valuation_;
  if (val >= trunc) return QSeries<S>(trunc);
  const std::int64_t stride = std::gcd(f.stride_, g.stride_);
  if (stride == 0) return QSeries<S>(val, 0, {f.coeffs_[0] * g.coeffs_[0]}, trunc);
  const auto len = static_cast<std::size_t>((trunc - val - 1) / stride + 1);
  std::vector<S> out(std::min<std::size_t>(len, (f.coeffs_.size() - 1) * static_cast<std::size_t>(f.stride_ / stride) +
                                                   (g.coeffs_.size() - 1) * static_cast<std::size_t>(g.stride_ / stride) + 1),
                     S(0));
  const std::int64_t sf = f.stride_ / stride;
  const std::int64_t sg = g.stride_ / stride;
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (f.coeffs_[i].is_zero()) continue;
    const std::int64_t base = static_cast<std::int64_t>(i) * sf;
    if (static_cast<std::size_t>(base) >= out.size()) break;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
      const auto pos = static_cast<std::size_t>(base + static_cast<std::int64_t>(j) * sg);
      if (pos >= out.size()) break;
      if (g.coeffs_[j].is_zero()) continue;
      out[pos] = out[pos] + f.coeffs_[i] * g.coeffs_[j];
    }
  }
  return QSeries<S>(val, stride, std::move(out), trunc);
}

/// Multiplicative inverse; the series must be nonzero and not exact.
template <ExactScalar S>
QSeries<S> series_inverse(const QSeries<S>& f) {
  if (f.is_zero()) throw std::domain_error("inverse of the zero series");
  const auto& c = f.stored();
  if (c.front().is_zero()) throw std::domain_error("leading coefficient is not invertible");
  const std::int64_t rel = f.truncation() - f.valuation();
  if (f.is_exact() && c.size() == 1) {
    return QSeries<S>::monomial(S(1) / c.front(), -f.valuation());
  }
  if (f.is_exact()) throw std::domain_error("inverse of an exact series needs a truncation");
  const std::int64_t stride = f.stride() == 0 ? rel : f.stride();
  const auto n = static_cast<std::size_t>((rel - 1) / stride + 1);
  const S lead_inv = S(1) / c.front();
  std::vector<S> inv(n, S(0));
  inv[0] = lead_inv;
  for (std::size_t k = 1; k < n; ++k) {
    S acc(0);
    const std::size_t upto = std::min(k, c.size() - 1);
    for (std::size_t j = 1; j <= upto; ++j) {
      if (!c[j].is_zero()) acc = acc + c[j] * inv[k - j];
    }
    inv[k] = -(acc * lead_inv);
  }
  return QSeries<S>(-f.valuation(), stride, std::move(inv), -f.valuation() + rel);
}

/// f^e for any integer e; negative powers go through series_inverse.
template <ExactScalar S>
QSeries<S> series_pow(const QSeries<S>& f, std::int64_t e) {
  if (e == 0) {
    const std::int64_t rel = f.is_exact() ? kExact : f.truncation() - f.valuation();
    return QSeries<S>::monomial(S(1), 0, rel);
  }
  QSeries<S> base = e < 0 ? series_inverse(f) : f;
  std::uint64_t n = static_cast<std::uint64_t>(e < 0 ? -e : e);
  QSeries<S> result = QSeries<S>::monomial(S(1), 0);
  bool first = true;
  while (n > 0) {
    if (n & 1U) {
      result = first ? base : series_mul(result, base);
      first = false;
    }
    n >>= 1U;
    if (n > 0) base = series_mul(base, base);
  }
  return result;
}

template <ExactScalar S>
QSeries<S> operator+(const QSeries<S>& a, const QSeries<S>& b) { return series_add(a, b); }
template <ExactScalar S>
QSeries<S> operator-(const QSeries<S>& a, const QSeries<S>& b) { return series_add(a, -b); }
template <ExactScalar S>
QSeries<S> operator*(const QSeries<S>& a, const QSeries<S>& b) { return series_mul(a, b); }

/// Linear combination sum_i coeffs[i] * parts[i] over a common scalar type.
template <ExactScalar S, ExactScalar T>
QSeries<S> linear_combination(const std::vector<S>& coeffs, const std::vector<QSeries<T>>& parts) {
  if (coeffs.size() != parts.size()) throw std::invalid_argument("linear_combination: size mismatch");
  std::int64_t trunc = kExact;
  for (const auto& p : parts) trunc = std::min(trunc, p.truncation());
  QSeries<S> acc(trunc);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    acc = series_add(acc, parts[i].template convert<S>().scaled(coeffs[i]));
  }
  return acc;
}

/// "exponent coefficient" lines; in q-expansion mode exponents are integer powers of q.
template <ExactScalar S>
void write_series(std::ostream& os, const QSeries<S>& f, bool q_mode) {
  if (q_mode && !f.is_integral()) throw std::invalid_argument("series has fractional exponents");
  if (f.is_zero()) return;
  const auto& c = f.stored();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    const std::int64_t e = f.valuation() + static_cast<std::int64_t>(i) * f.stride();
    os << (q_mode ? e / kGrade : e) << ' ' << c[i] << '\n';
  }
}

/// q^(delta/24) * prod_{n>=1} (1 - q^(delta n)), truncated at grade-24 exponent `truncation`.
QSeries<Rational> eta_expansion(std::int64_t delta, std::int64_t truncation);

}  // namespace qformlab
