#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bernalg/matrix.hpp"

namespace bernalg {

/// Linear subspace of K^n stored by its reduced row-echelon basis. The RREF
/// basis is unique, so two subspaces are equal exactly when their
/// representations are.
template <Field F>
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient) { return Subspace(ambient, Matrix<F>(0, ambient), {}); }

  static Subspace full(std::size_t ambient) {
    std::vector<std::size_t> pivots(ambient);
    for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
    return Subspace(ambient, Matrix<F>::identity(ambient), std::move(pivots));
  }

  /// Span of the given vectors.
  static Subspace span(const std::vector<Vec<F>>& vectors, std::size_t ambient) {
    return from_matrix(Matrix<F>::from_rows(vectors, ambient));
  }

  /// Row space of m.
  static Subspace from_matrix(Matrix<F> m) {
    const std::size_t ambient = m.cols();
    auto [reduced, pivots] = rref_with_pivots(std::move(m));
    Matrix<F> basis(pivots.size(), ambient);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      for (std::size_t j = 0; j < ambient; ++j) basis(i, j) = reduced(i, j);
    return Subspace(ambient, std::move(basis), std::move(pivots));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  const Matrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec<F> basis_vector(std::size_t i) const { return basis_.row_vector(i); }

  std::vector<Vec<F>> basis_vectors() const {
    std::vector<Vec<F>> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row_vector(i));
    return out;
  }

  bool contains(std::span<const F> v) const {
    check_ambient(v.size());
    Vec<F> r(v.begin(), v.end());
    for (std::size_t i = 0; i < dim(); ++i) {
      const F c = r[pivots_[i]];
      if (!bernalg::is_zero(c)) axpy(r, F(-c), basis_.row(i));
    }
    return is_zero_vector(r);
  }

  bool contains(const Vec<F>& v) const { return contains(std::span<const F>(v)); }

  /// Coordinates of v with respect to the RREF basis. Because the basis is
  /// reduced, these are just the entries of v at the pivot columns.
  Vec<F> coordinates(std::span<const F> v) const {
    if (!contains(v)) throw AlgebraError("vector does not lie in the subspace");
    Vec<F> c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  Vec<F> coordinates(const Vec<F>& v) const { return coordinates(std::span<const F>(v)); }

  Vec<F> from_coordinates(std::span<const F> c) const {
    if (c.size() != dim()) throw DimensionError("coordinate vector length mismatch");
    Vec<F> v(ambient_);
    for (std::size_t i = 0; i < dim(); ++i) axpy(v, c[i], basis_.row(i));
    return v;
  }

  friend bool operator==(const Subspace&, const Subspace&) = default;

  void check_ambient(std::size_t n) const {
    if (n != ambient_) throw DimensionError("ambient dimension mismatch");
  }

 private:
  Subspace(std::size_t ambient, Matrix<F> basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_ = 0;
  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

/// {x : m x = 0}
template <Field F>
Subspace<F> kernel(const Matrix<F>& m) {
  const std::size_t n = m.cols();
  auto [reduced, pivots] = rref_with_pivots(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Vec<F>> vectors;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(n);
    v[free] = F(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, free);
    vectors.push_back(std::move(v));
  }
  return Subspace<F>::span(vectors, n);
}

template <Field F>
Subspace<F> eigenspace(const Matrix<F>& m, const F& lambda) {
  if (m.rows() != m.cols()) throw DimensionError("eigenspace of a non-square matrix");
  Matrix<F> shifted = m;
  for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= lambda;
  return kernel(shifted);
}

template <Field F>
Subspace<F> subspace_sum(const Subspace<F>& a, const Subspace<F>& b) {
  a.check_ambient(b.ambient_dim());
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  auto vectors = a.basis_vectors();
  for (auto& v : b.basis_vectors()) vectors.push_back(std::move(v));
  return Subspace<F>::span(vectors, a.ambient_dim());
}

/// Intersection through the kernel of [A^T | -B^T]: pairs (x, y) with
/// x.A = y.B give the common vectors x.A.
template <Field F>
Subspace<F> subspace_intersect(const Subspace<F>& a, const Subspace<F>& b) {
  a.check_ambient(b.ambient_dim());
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace<F>::zero(n);
  Matrix<F> stacked(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) stacked(j, i) = a.basis()(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) stacked(j, a.dim() + i) = -b.basis()(i, j);
  const Subspace<F> relations = kernel(stacked);
  std::vector<Vec<F>> common;
  for (std::size_t r = 0; r < relations.dim(); ++r) {
    auto coeffs = relations.basis().row(r);
    common.push_back(a.from_coordinates(coeffs.first(a.dim())));
  }
  return Subspace<F>::span(common, n);
}

/// a <= b
template <Field F>
bool subspace_leq(const Subspace<F>& a, const Subspace<F>& b) {
  a.check_ambient(b.ambient_dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!b.contains(a.basis().row(i))) return false;
  return true;
}

/// Standard coordinate vectors completing s to a basis of the whole space,
/// chosen greedily in index order.
template <Field F>
std::vector<std::size_t> complement_indices(const Subspace<F>& s) {
  std::vector<std::size_t> chosen;
  Subspace<F> current = s;
  for (std::size_t k = 0; k < s.ambient_dim() && !current.is_full(); ++k) {
    const Vec<F> e = unit_vector<F>(s.ambient_dim(), k);
    if (current.contains(e)) continue;
    chosen.push_back(k);
    current = subspace_sum(current, Subspace<F>::span({e}, s.ambient_dim()));
  }
  return chosen;
}

}  // namespace bernalg
