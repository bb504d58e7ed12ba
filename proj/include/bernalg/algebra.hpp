#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "bernalg/subspace.hpp"

namespace bernalg {

/// Finite-dimensional commutative algebra given by structure constants.
///
/// Only the products b_i b_j with i <= j are stored; the other half follows
/// from commutativity. Pairs that were never set multiply to zero.
template <Field F>
class CommAlgebra {
 public:
  CommAlgebra() = default;
  CommAlgebra(std::string name, std::vector<std::string> basis_names)
      : name_(std::move(name)), basis_names_(std::move(basis_names)) {
    const std::size_t n = basis_names_.size();
    table_.assign(n * (n + 1) / 2, Vec<F>{});
  }

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::size_t dim() const { return basis_names_.size(); }
  const std::vector<std::string>& basis_names() const { return basis_names_; }

  std::optional<std::size_t> index_of(std::string_view id) const {
    auto it = std::find(basis_names_.begin(), basis_names_.end(), id);
    if (it == basis_names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - basis_names_.begin());
  }

  Vec<F> basis_vector(std::size_t i) const { return unit_vector<F>(dim(), i); }
  Vec<F> zero_element() const { return Vec<F>(dim()); }

  /// Sets b_i b_j (= b_j b_i). A zero vector clears the entry.
  void set_product(std::size_t i, std::size_t j, Vec<F> value) {
    if (i >= dim() || j >= dim()) throw DimensionError("basis index out of range");
    if (value.size() != dim()) throw DimensionError("product vector has wrong length");
    if (is_zero_vector(value)) value.clear();
    table_[slot(i, j)] = std::move(value);
  }

  /// b_i b_j, or an empty vector when the product is zero.
  const Vec<F>& stored_product(std::size_t i, std::size_t j) const { return table_[slot(i, j)]; }

  Vec<F> basis_product(std::size_t i, std::size_t j) const {
    const Vec<F>& p = stored_product(i, j);
    return p.empty() ? zero_element() : p;
  }

  Vec<F> multiply(std::span<const F> x, std::span<const F> y) const {
    if (x.size() != dim() || y.size() != dim()) throw DimensionError("element length does not match algebra dimension");
    Vec<F> out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (bernalg::is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (bernalg::is_zero(y[j])) continue;
        const Vec<F>& p = stored_product(i, j);
        if (p.empty()) continue;
        axpy(out, F(x[i] * y[j]), std::span<const F>(p));
      }
    }
    return out;
  }

  Vec<F> multiply(const Vec<F>& x, const Vec<F>& y) const {
    return multiply(std::span<const F>(x), std::span<const F>(y));
  }

  Vec<F> square(const Vec<F>& x) const { return multiply(x, x); }

  friend bool operator==(const CommAlgebra&, const CommAlgebra&) = default;

 private:
  std::size_t slot(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    // row-major upper triangle
    return i * dim() - i * (i + 1) / 2 + j;
  }

  std::string name_;
  std::vector<std::string> basis_names_;
  std::vector<Vec<F>> table_;
};

template <Field F>
Vec<F> multiply(const CommAlgebra<F>& a, const Vec<F>& x, const Vec<F>& y) {
  return a.multiply(x, y);
}

/// Matrix of L_x (column j holds x * b_j). With `restrict_to`, the operator
/// is expressed in the RREF basis of that subspace, which must be invariant
/// under multiplication by x.
template <Field F>
Matrix<F> left_mult_operator(const CommAlgebra<F>& a, const Vec<F>& x,
                             const std::type_identity_t<std::optional<Subspace<F>>>& restrict_to = std::nullopt) {
  if (x.size() != a.dim()) throw DimensionError("element length does not match algebra dimension");
  if (!restrict_to) {
    Matrix<F> m(a.dim(), a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vec<F> col = a.multiply(x, a.basis_vector(j));
      for (std::size_t i = 0; i < a.dim(); ++i) m(i, j) = col[i];
    }
    return m;
  }
  const Subspace<F>& s = *restrict_to;
  s.check_ambient(a.dim());
  Matrix<F> m(s.dim(), s.dim());
  for (std::size_t j = 0; j < s.dim(); ++j) {
    const Vec<F> image = a.multiply(x, s.basis_vector(j));
    if (!s.contains(image)) throw AlgebraError("restriction subspace is not invariant under the multiplication");
    const Vec<F> c = s.coordinates(image);
    for (std::size_t i = 0; i < s.dim(); ++i) m(i, j) = c[i];
  }
  return m;
}

/// Span of all products s1_i * s2_j of basis vectors.
template <Field F>
Subspace<F> subspace_product(const CommAlgebra<F>& a, const Subspace<F>& s1, const Subspace<F>& s2) {
  s1.check_ambient(a.dim());
  s2.check_ambient(a.dim());
  std::vector<Vec<F>> products;
  const bool same = (&s1 == &s2) || s1 == s2;
  for (std::size_t i = 0; i < s1.dim(); ++i) {
    const Vec<F> x = s1.basis_vector(i);
    for (std::size_t j = same ? i : 0; j < s2.dim(); ++j) {
      Vec<F> p = a.multiply(x, s2.basis_vector(j));
      if (!is_zero_vector(p)) products.push_back(std::move(p));
    }
  }
  return Subspace<F>::span(products, a.dim());
}

/// A * s
template <Field F>
Subspace<F> algebra_times(const CommAlgebra<F>& a, const Subspace<F>& s) {
  return subspace_product(a, Subspace<F>::full(a.dim()), s);
}

template <Field F>
bool is_ideal(const CommAlgebra<F>& a, const Subspace<F>& s) {
  return subspace_leq(algebra_times(a, s), s);
}

template <Field F>
bool is_subalgebra(const CommAlgebra<F>& a, const Subspace<F>& s) {
  return subspace_leq(subspace_product(a, s, s), s);
}

/// Smallest subalgebra containing gens.
template <Field F>
Subspace<F> generated_subalgebra(const CommAlgebra<F>& a, const std::vector<Vec<F>>& gens) {
  Subspace<F> current = Subspace<F>::span(gens, a.dim());
  while (true) {
    Subspace<F> next = subspace_sum(current, subspace_product(a, current, current));
    if (next == current) return current;
    current = std::move(next);
  }
}

/// Smallest subspace containing gens and closed under multiplication by
/// `within` (the whole algebra by default).
template <Field F>
Subspace<F> generated_ideal(const CommAlgebra<F>& a, const std::vector<Vec<F>>& gens,
                            const std::type_identity_t<std::optional<Subspace<F>>>& within = std::nullopt) {
  const Subspace<F> multipliers = within ? *within : Subspace<F>::full(a.dim());
  Subspace<F> current = Subspace<F>::span(gens, a.dim());
  while (true) {
    Subspace<F> next = subspace_sum(current, subspace_product(a, multipliers, current));
    if (next == current) return current;
    current = std::move(next);
  }
}

/// The subalgebra s as an algebra in its own right, on its RREF basis.
/// Basis vectors that are standard unit vectors keep their names; the rest
/// are called s1, s2, ...
template <Field F>
CommAlgebra<F> restrict_to_subalgebra(const CommAlgebra<F>& a, const Subspace<F>& s, std::string name) {
  s.check_ambient(a.dim());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Vec<F> v = s.basis_vector(i);
    const std::size_t p = s.pivots()[i];
    names.push_back(v == a.basis_vector(p) ? a.basis_names()[p] : "s" + std::to_string(i + 1));
  }
  CommAlgebra<F> sub(std::move(name), std::move(names));
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i; j < s.dim(); ++j) {
      const Vec<F> p = a.multiply(s.basis_vector(i), s.basis_vector(j));
      if (!s.contains(p)) throw AlgebraError("subspace is not closed under multiplication");
      sub.set_product(i, j, s.coordinates(p));
    }
  return sub;
}

}  // namespace bernalg
