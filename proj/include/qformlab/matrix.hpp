#pragma once

#include "qformlab/number_field.hpp"
#include "qformlab/rational.hpp"

#include <concepts>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qformlab {

/// Exact scalar field usable by the series engine and the linear algebra.
template <class S>
concept ExactScalar = requires(S a, const S& b) {
  S(0);
  S(1);
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { b.is_zero() } -> std::convertible_to<bool>;
  { b == b } -> std::convertible_to<bool>;
};

static_assert(ExactScalar<Rational>);
static_assert(ExactScalar<NumberFieldElement>);

/// Dense row-major matrix over an exact scalar field.
template <ExactScalar S>
class ExactMatrix {
public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<S> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix entry count mismatch");
  }

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<S> multiply(const std::vector<S>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<S> y(rows_, S(0));
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (!(*this)(r, c).is_zero()) y[r] = y[r] + (*this)(r, c) * x[c];
      }
    }
    return y;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

enum class SolveDiagnosis { unique, inconsistent, underdetermined };

template <ExactScalar S>
struct SolveResult {
  SolveDiagnosis diagnosis = SolveDiagnosis::inconsistent;
  std::optional<std::vector<S>> solution;

  bool ok() const { return diagnosis == SolveDiagnosis::unique; }
};

namespace detail {

// In-place Gauss-Jordan elimination with first-nonzero pivoting. Returns pivot columns.
template <ExactScalar S>
std::vector<std::size_t> reduce_rows(ExactMatrix<S>& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.swap_rows(p, row);
    const S inv = S(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const S factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) = m(r, c) - factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <ExactScalar S>
std::size_t rank(ExactMatrix<S> a) {
  return detail::reduce_rows(a, a.cols()).size();
}

/// Solves A x = y exactly. A unique solution is returned only when the system
/// is consistent and A has full column rank.
template <ExactScalar S>
SolveResult<S> solve_linear(const ExactMatrix<S>& a, const std::vector<S>& y) {
  if (y.size() != a.rows()) throw std::invalid_argument("solve_linear: right-hand side length mismatch");
  ExactMatrix<S> aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = y[r];
  }
  const auto pivots = detail::reduce_rows(aug, a.cols());
  SolveResult<S> result;
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
    if (!aug(r, a.cols()).is_zero()) {
      result.diagnosis = SolveDiagnosis::inconsistent;
      return result;
    }
  }
  if (pivots.size() < a.cols()) {
    result.diagnosis = SolveDiagnosis::underdetermined;
    return result;
  }
  std::vector<S> x(a.cols(), S(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  result.diagnosis = SolveDiagnosis::unique;
  result.solution = std::move(x);
  return result;
}

}  // namespace qformlab
