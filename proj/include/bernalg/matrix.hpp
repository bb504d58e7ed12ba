#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bernalg/scalar.hpp"

namespace bernalg {

template <Field F>
using Vec = std::vector<F>;

// ---------------------------------------------------------------------------
// Coordinate vectors

template <Field F>
Vec<F> unit_vector(std::size_t n, std::size_t k) {
  Vec<F> v(n);
  v.at(k) = F(1);
  return v;
}

template <Field F>
bool is_zero_vector(std::span<const F> v) {
  for (const F& x : v)
    if (!is_zero(x)) return false;
  return true;
}

template <Field F>
bool is_zero_vector(const Vec<F>& v) {
  return is_zero_vector(std::span<const F>(v));
}

template <Field F>
Vec<F> add(const Vec<F>& a, const Vec<F>& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vec<F> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <Field F>
Vec<F> subtract(const Vec<F>& a, const Vec<F>& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vec<F> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <Field F>
Vec<F> scaled(const Vec<F>& a, const F& c) {
  Vec<F> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

/// y += c * x
template <Field F>
void axpy(Vec<F>& y, const F& c, std::span<const F> x) {
  if (is_zero(c)) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!is_zero(x[i])) y[i] += c * x[i];
}

// ---------------------------------------------------------------------------

/// Dense row-major matrix over an exact field.
template <Field F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  Matrix(std::initializer_list<std::initializer_list<F>> rows) : rows_(rows.size()) {
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged matrix literal");
      entries_.insert(entries_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  static Matrix from_rows(const std::vector<Vec<F>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionError("row length does not match column count");
      std::copy(rows[i].begin(), rows[i].end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(i * cols));
    }
    return m;
  }

  static Matrix from_columns(const std::vector<Vec<F>>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw DimensionError("column length does not match row count");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<F>& entries() const { return entries_; }

  F& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const F> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
  std::span<F> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }

  Vec<F> row_vector(std::size_t i) const {
    auto r = row(i);
    return Vec<F>(r.begin(), r.end());
  }

  Vec<F> column_vector(std::size_t j) const {
    Vec<F> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  bool is_zero() const {
    for (const F& x : entries_)
      if (!bernalg::is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Matrix-vector product m * x.
  Vec<F> apply(std::span<const F> x) const {
    if (x.size() != cols_) throw DimensionError("matrix-vector size mismatch");
    Vec<F> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!bernalg::is_zero(x[j])) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product size mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (bernalg::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference size mismatch");
    Matrix c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) c.entries_[k] = a.entries_[k] - b.entries_[k];
    return c;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> entries_;
};

template <Field F>
struct RrefResult {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination to the unique reduced row-echelon form. The
/// shape is kept; zero rows end up at the bottom.
template <Field F>
RrefResult<F> rref_with_pivots(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t pick = lead;
    while (pick < m.rows() && is_zero(m(pick, col))) ++pick;
    if (pick == m.rows()) continue;
    if (pick != lead)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pick, j), m(lead, j));
    const F inv = F(1) / m(lead, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(lead, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead || is_zero(m(i, col))) continue;
      const F factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!is_zero(m(lead, j))) m(i, j) -= factor * m(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

template <Field F>
Matrix<F> rref(Matrix<F> m) {
  return rref_with_pivots(std::move(m)).reduced;
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
  return rref_with_pivots(m).pivots.size();
}

/// Inverse of a square matrix, or nullopt when singular.
template <Field F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F(1);
  }
  auto [r, pivots] = rref_with_pivots(std::move(aug));
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

}  // namespace bernalg
