#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "bernalg/algebra.hpp"

namespace bernalg {

enum class IdentityId {
  bernstein,           // (x^2)^2 = w(x)^2 x^2
  jordan,              // x(x^2 y) = x^2(xy)
  cube_weight,         // x^3 = w(x) x^2
  jacobi,              // (xy)z + (yz)x + (zx)y = 0
  cube_zero,           // x^3 = 0
  square_square_zero,  // (x^2)^2 = 0
};

inline constexpr IdentityId kAllIdentities[] = {
    IdentityId::bernstein, IdentityId::jordan,    IdentityId::cube_weight,
    IdentityId::jacobi,    IdentityId::cube_zero, IdentityId::square_square_zero,
};

struct IdentityVariable {
  std::string name;
  std::size_t degree;
};

struct IdentityShape {
  std::string_view name;
  std::string_view formula;
  std::vector<IdentityVariable> variables;
  bool needs_weight;
};

IdentityShape identity_shape(IdentityId id);
std::string_view to_string(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view text);

/// Counterexample to a claimed property: the offending assignment and the
/// nonzero defect it produces.
template <Field F>
struct Witness {
  std::string what;
  std::vector<std::pair<std::string, Vec<F>>> assignment;
  Vec<F> residual;
};

/// Outcome of a property check; a failure always carries its witness.
template <Field F>
struct Check {
  std::optional<Witness<F>> witness;

  bool holds() const { return !witness.has_value(); }
  explicit operator bool() const { return holds(); }

  static Check pass() { return {}; }
  static Check fail(Witness<F> w) { return {std::move(w)}; }
};

template <Field F>
F weight_of(std::span<const F> weight, const Vec<F>& x) {
  if (weight.size() != x.size()) throw DimensionError("weight length does not match algebra dimension");
  F acc{};
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_zero(x[i])) acc += weight[i] * x[i];
  return acc;
}

/// Value of lhs - rhs of the identity at the given arguments (one element
/// per variable, in the order of identity_shape(id).variables).
template <Field F>
Vec<F> identity_defect(const CommAlgebra<F>& a, IdentityId id, const std::vector<Vec<F>>& args,
                       std::type_identity_t<std::optional<std::span<const F>>> weight = std::nullopt) {
  const IdentityShape shape = identity_shape(id);
  if (args.size() != shape.variables.size()) throw std::invalid_argument("wrong number of identity arguments");
  if (shape.needs_weight && !weight) throw std::invalid_argument("identity needs a weight function");
  const Vec<F>& x = args[0];
  switch (id) {
    case IdentityId::bernstein: {
      const Vec<F> x2 = a.square(x);
      const F w = weight_of(*weight, x);
      return subtract(a.square(x2), scaled(x2, F(w * w)));
    }
    case IdentityId::jordan: {
      const Vec<F>& y = args[1];
      const Vec<F> x2 = a.square(x);
      return subtract(a.multiply(x, a.multiply(x2, y)), a.multiply(x2, a.multiply(x, y)));
    }
    case IdentityId::cube_weight: {
      const Vec<F> x2 = a.square(x);
      return subtract(a.multiply(x2, x), scaled(x2, weight_of(*weight, x)));
    }
    case IdentityId::jacobi: {
      const Vec<F>& y = args[1];
      const Vec<F>& z = args[2];
      Vec<F> r = a.multiply(a.multiply(x, y), z);
      r = add(r, a.multiply(a.multiply(y, z), x));
      return add(r, a.multiply(a.multiply(z, x), y));
    }
    case IdentityId::cube_zero:
      return a.multiply(a.square(x), x);
    case IdentityId::square_square_zero:
      return a.square(a.square(x));
  }
  throw std::logic_error("unknown identity");
}

namespace detail {

/// Sorted multisets of size k drawn from {0..n-1}, advanced in lexicographic
/// order. Returns false after the last one.
inline bool next_multiset(std::vector<std::size_t>& m, std::size_t n) {
  for (std::size_t pos = m.size(); pos-- > 0;) {
    if (m[pos] + 1 < n) {
      ++m[pos];
      for (std::size_t q = pos + 1; q < m.size(); ++q) m[q] = m[pos];
      return true;
    }
  }
  return false;
}

/// Calls fn(args, sign) for every way of replacing each variable by a
/// nonempty sub-sum of its copies, with the inclusion-exclusion sign
/// (-1)^(#omitted copies). Summing sign * f(args) gives the multilinear
/// component of f evaluated at the copies.
template <Field F, class Fn>
void for_each_polarization_term(const CommAlgebra<F>& a, const std::vector<std::vector<std::size_t>>& copies, Fn&& fn) {
  const std::size_t nvars = copies.size();
  std::vector<unsigned> masks(nvars, 1u);
  std::vector<Vec<F>> args(nvars);
  while (true) {
    int sign = 1;
    for (std::size_t v = 0; v < nvars; ++v) {
      args[v] = a.zero_element();
      const std::size_t d = copies[v].size();
      std::size_t used = 0;
      for (std::size_t k = 0; k < d; ++k)
        if (masks[v] & (1u << k)) {
          args[v][copies[v][k]] += F(1);
          ++used;
        }
      if ((d - used) % 2 == 1) sign = -sign;
    }
    if (!fn(args, sign)) return;
    std::size_t v = 0;
    for (; v < nvars; ++v) {
      if (masks[v] + 1 < (1u << copies[v].size())) {
        ++masks[v];
        break;
      }
      masks[v] = 1u;
    }
    if (v == nvars) return;
  }
}

}  // namespace detail

/// Decides whether the identity holds for every element of the algebra.
///
/// Each variable of degree d is replaced by d independent copies and the
/// multilinear component of the defect is evaluated (by inclusion-exclusion
/// over sub-sums) on every tuple of basis vectors. Over a field of
/// characteristic 0 or > 4 this vanishes on all basis tuples exactly when
/// the identity holds. Tuples are scanned in lexicographic order; the first
/// failing tuple is turned into a direct witness by evaluating the identity
/// at its sub-sums, one of which must be nonzero.
template <Field F>
Check<F> check_identity(const CommAlgebra<F>& a, IdentityId id,
                        std::type_identity_t<std::optional<std::span<const F>>> weight = std::nullopt) {
  const IdentityShape shape = identity_shape(id);
  if (shape.needs_weight && !weight) throw std::invalid_argument("identity needs a weight function");
  const std::size_t n = a.dim();
  if (n == 0) return Check<F>::pass();

  std::vector<std::vector<std::size_t>> copies;
  for (const auto& var : shape.variables) copies.emplace_back(var.degree, 0);

  while (true) {
    Vec<F> lin = a.zero_element();
    detail::for_each_polarization_term(a, copies, [&](const std::vector<Vec<F>>& args, int sign) {
      const Vec<F> value = identity_defect(a, id, args, weight);
      axpy(lin, F(sign), std::span<const F>(value));
      return true;
    });
    if (!is_zero_vector(lin)) {
      std::optional<Witness<F>> found;
      detail::for_each_polarization_term(a, copies, [&](const std::vector<Vec<F>>& args, int) {
        Vec<F> value = identity_defect(a, id, args, weight);
        if (is_zero_vector(value)) return true;
        Witness<F> w{std::string(shape.name), {}, std::move(value)};
        for (std::size_t v = 0; v < args.size(); ++v) w.assignment.emplace_back(shape.variables[v].name, args[v]);
        found = std::move(w);
        return false;
      });
      if (!found) throw std::logic_error("nonzero linearization without a nonzero sub-sum evaluation");
      return Check<F>::fail(std::move(*found));
    }
    // advance the last variable fastest
    std::size_t v = copies.size();
    while (v-- > 0) {
      if (detail::next_multiset(copies[v], n)) break;
      std::fill(copies[v].begin(), copies[v].end(), 0);
    }
    if (v == static_cast<std::size_t>(-1)) return Check<F>::pass();
  }
}

template <Field F>
Vec<F> random_element(std::size_t dim, std::mt19937_64& rng) {
  Vec<F> x(dim);
  for (auto& c : x) c = ScalarTraits<F>::random(rng);
  return x;
}

/// Independent sampling check: evaluates the identity directly at random
/// dense elements and reports the first nonzero defect.
template <Field F>
Check<F> random_identity_probe(const CommAlgebra<F>& a, IdentityId id, std::type_identity_t<std::optional<std::span<const F>>> weight,
                               std::size_t trials, std::mt19937_64& rng) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  const IdentityShape shape = identity_shape(id);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Vec<F>> args;
    for (std::size_t v = 0; v < shape.variables.size(); ++v) args.push_back(random_element<F>(a.dim(), rng));
    Vec<F> value = identity_defect(a, id, args, weight);
    if (is_zero_vector(value)) continue;
    Witness<F> w{std::string(shape.name), {}, std::move(value)};
    for (std::size_t v = 0; v < args.size(); ++v) w.assignment.emplace_back(shape.variables[v].name, args[v]);
    return Check<F>::fail(std::move(w));
  }
  return Check<F>::pass();
}

/// Re-evaluates a witness produced for `id`.
template <Field F>
Vec<F> evaluate_witness(const CommAlgebra<F>& a, IdentityId id, const Witness<F>& w,
                        std::type_identity_t<std::optional<std::span<const F>>> weight = std::nullopt) {
  std::vector<Vec<F>> args;
  for (const auto& [name, value] : w.assignment) args.push_back(value);
  return identity_defect(a, id, args, weight);
}

}  // namespace bernalg
