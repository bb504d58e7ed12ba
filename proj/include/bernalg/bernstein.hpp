#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "bernalg/identities.hpp"
#include "bernalg/powers.hpp"

namespace bernalg {

/// Commutative algebra together with a weight functional, given by its
/// values on the basis.
template <Field F>
struct BaricAlgebra {
  CommAlgebra<F> algebra;
  Vec<F> weight;

  std::span<const F> weight_span() const { return weight; }

  F omega(const Vec<F>& x) const { return weight_of(std::span<const F>(weight), x); }

  /// N = ker(omega)
  Subspace<F> barideal() const {
    if (weight.size() != algebra.dim()) throw DimensionError("weight length does not match algebra dimension");
    return kernel(Matrix<F>::from_rows({weight}, algebra.dim()));
  }
};

/// An algebra as read from a file or produced by a generator: the weight is
/// present exactly for baric inputs.
template <Field F>
struct Presentation {
  CommAlgebra<F> algebra;
  std::optional<Vec<F>> weight;

  bool has_weight() const { return weight.has_value(); }

  BaricAlgebra<F> baric() const {
    if (!weight) throw AlgebraError("algebra '" + algebra.name() + "' has no weight function");
    return {algebra, *weight};
  }

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Peirce decomposition A = Ke + U + V relative to an idempotent e.
template <Field F>
struct PeirceData {
  Vec<F> e;
  Subspace<F> U;
  Subspace<F> V;
  Subspace<F> N;
  Subspace<F> annU;  // {u in U : uU = 0}
};

/// omega must be nonzero and multiplicative; multiplicativity on basis
/// pairs suffices by bilinearity.
template <Field F>
Check<F> verify_weight(const BaricAlgebra<F>& b) {
  const auto& a = b.algebra;
  if (b.weight.size() != a.dim()) throw DimensionError("weight length does not match algebra dimension");
  if (is_zero_vector(b.weight)) return Check<F>::fail({"weight function is zero", {}, {}});
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) {
      const F lhs = b.omega(a.basis_product(i, j));
      const F rhs = b.weight[i] * b.weight[j];
      if (lhs != rhs) {
        return Check<F>::fail({"omega(xy) != omega(x) omega(y)",
                               {{"x", a.basis_vector(i)}, {"y", a.basis_vector(j)}},
                               {F(lhs - rhs)}});
      }
    }
  return Check<F>::pass();
}

/// e = x^2 for x = seed, or x = b_k / omega(b_k) with b_k the first basis
/// vector of nonzero weight.
template <Field F>
Vec<F> find_idempotent(const BaricAlgebra<F>& b, const std::type_identity_t<std::optional<Vec<F>>>& seed = std::nullopt) {
  const auto& a = b.algebra;
  Vec<F> x;
  if (seed) {
    if (seed->size() != a.dim()) throw DimensionError("seed length does not match algebra dimension");
    if (b.omega(*seed) != F(1)) throw AlgebraError("idempotent seed must have weight 1");
    x = *seed;
  } else {
    std::size_t k = 0;
    while (k < a.dim() && is_zero(b.weight[k])) ++k;
    if (k == a.dim()) throw AlgebraError("weight function is zero");
    x = scaled(a.basis_vector(k), F(F(1) / b.weight[k]));
  }
  Vec<F> e = a.square(x);
  if (a.square(e) != e || b.omega(e) != F(1))
    throw AlgebraError("x^2 is not an idempotent of weight 1; the algebra is not Bernstein");
  return e;
}

/// U and V are the 1/2- and 0-eigenspaces of L_e inside N.
template <Field F>
PeirceData<F> peirce(const BaricAlgebra<F>& b, const Vec<F>& e) {
  const auto& a = b.algebra;
  if (a.square(e) != e || b.omega(e) != F(1)) throw AlgebraError("peirce needs an idempotent of weight 1");
  PeirceData<F> p;
  p.e = e;
  p.N = b.barideal();
  const Matrix<F> le = left_mult_operator(a, e);
  p.U = subspace_intersect(p.N, eigenspace(le, F(F(1) / F(2))));
  p.V = subspace_intersect(p.N, eigenspace(le, F{}));
  if (p.U.dim() + p.V.dim() != p.N.dim())
    throw AlgebraError("N is not the direct sum of the 1/2- and 0-eigenspaces of L_e; the algebra is not Bernstein");

  // annU: coefficient vectors c with (sum_k c_k u_k) u_j = 0 for every j.
  const std::size_t du = p.U.dim();
  Matrix<F> system(du * a.dim(), du);
  for (std::size_t k = 0; k < du; ++k) {
    const Vec<F> uk = p.U.basis_vector(k);
    for (std::size_t j = 0; j < du; ++j) {
      const Vec<F> prod = a.multiply(uk, p.U.basis_vector(j));
      for (std::size_t r = 0; r < a.dim(); ++r) system(j * a.dim() + r, k) = prod[r];
    }
  }
  const Subspace<F> coeffs = kernel(system);
  std::vector<Vec<F>> ann;
  for (std::size_t i = 0; i < coeffs.dim(); ++i) ann.push_back(p.U.from_coordinates(coeffs.basis().row(i)));
  p.annU = Subspace<F>::span(ann, a.dim());
  return p;
}

namespace detail {

/// Witness for s1 s2 not contained in target: first basis product outside.
template <Field F>
std::optional<Witness<F>> inclusion_witness(const CommAlgebra<F>& a, const std::string& what, const Subspace<F>& s1,
                                            const Subspace<F>& s2, const Subspace<F>& target) {
  for (std::size_t i = 0; i < s1.dim(); ++i)
    for (std::size_t j = 0; j < s2.dim(); ++j) {
      Vec<F> prod = a.multiply(s1.basis_vector(i), s2.basis_vector(j));
      if (!target.contains(prod)) return Witness<F>{what, {{"x", s1.basis_vector(i)}, {"y", s2.basis_vector(j)}}, prod};
    }
  return std::nullopt;
}

}  // namespace detail

/// U^2 <= V, UV <= U, V^2 <= U, U V^2 = 0, annU (U + U^2) = 0, V^2 <= annU.
template <Field F>
Check<F> check_peirce_relations(const CommAlgebra<F>& a, const PeirceData<F>& p) {
  const std::size_t n = a.dim();
  const Subspace<F> zero = Subspace<F>::zero(n);
  const Subspace<F> v2 = subspace_product(a, p.V, p.V);
  const Subspace<F> u2 = subspace_product(a, p.U, p.U);
  const Subspace<F> u_plus_u2 = subspace_sum(p.U, u2);

  if (auto w = detail::inclusion_witness(a, "U^2 not contained in V", p.U, p.U, p.V)) return Check<F>::fail(*w);
  if (auto w = detail::inclusion_witness(a, "UV not contained in U", p.U, p.V, p.U)) return Check<F>::fail(*w);
  if (auto w = detail::inclusion_witness(a, "V^2 not contained in U", p.V, p.V, p.U)) return Check<F>::fail(*w);
  if (auto w = detail::inclusion_witness(a, "U V^2 != 0", p.U, v2, zero)) return Check<F>::fail(*w);
  if (auto w = detail::inclusion_witness(a, "annU (U + U^2) != 0", p.annU, u_plus_u2, zero)) return Check<F>::fail(*w);
  for (std::size_t i = 0; i < v2.dim(); ++i)
    if (!p.annU.contains(v2.basis().row(i)))
      return Check<F>::fail({"V^2 not contained in annU", {{"z", v2.basis_vector(i)}}, v2.basis_vector(i)});
  return Check<F>::pass();
}

/// Condition (d): V^2 = 0 and (uv)v = 0. The quadratic condition is checked
/// in its linearized form (uv)v' + (uv')v = 0 on basis vectors; a failure is
/// turned into a direct witness (uv)v != 0 at v, v' or v + v'.
template <Field F>
Check<F> check_jordan_structural(const CommAlgebra<F>& a, const PeirceData<F>& p) {
  if (auto w = detail::inclusion_witness(a, "V^2 != 0", p.V, p.V, Subspace<F>::zero(a.dim())))
    return Check<F>::fail(*w);
  auto uvv = [&](const Vec<F>& u, const Vec<F>& v) { return a.multiply(a.multiply(u, v), v); };
  for (std::size_t i = 0; i < p.U.dim(); ++i) {
    const Vec<F> u = p.U.basis_vector(i);
    for (std::size_t j = 0; j < p.V.dim(); ++j)
      for (std::size_t k = j; k < p.V.dim(); ++k) {
        const Vec<F> v1 = p.V.basis_vector(j);
        const Vec<F> v2 = p.V.basis_vector(k);
        const Vec<F> lin = add(a.multiply(a.multiply(u, v1), v2), a.multiply(a.multiply(u, v2), v1));
        if (is_zero_vector(lin)) continue;
        for (const Vec<F>& v : {v1, v2, add(v1, v2)}) {
          Vec<F> r = uvv(u, v);
          if (!is_zero_vector(r)) return Check<F>::fail({"(uv)v != 0", {{"u", u}, {"v", v}}, std::move(r)});
        }
        throw std::logic_error("nonzero linearized (uv)v without a direct witness");
      }
  }
  return Check<F>::pass();
}

/// Nuclear means U^2 = V (U^2 <= V always holds in a Bernstein algebra).
template <Field F>
Check<F> check_nuclear(const CommAlgebra<F>& a, const PeirceData<F>& p) {
  const Subspace<F> u2 = subspace_product(a, p.U, p.U);
  for (std::size_t i = 0; i < p.V.dim(); ++i)
    if (!u2.contains(p.V.basis().row(i)))
      return Check<F>::fail({"V not contained in U^2", {{"v", p.V.basis_vector(i)}}, p.V.basis_vector(i)});
  return Check<F>::pass();
}

template <Field F>
struct Classification {
  Check<F> baric;
  std::optional<Check<F>> bernstein;        // set when baric
  std::optional<Check<F>> barideal_nilpotent;
  std::optional<PeirceData<F>> peirce;      // set when Bernstein
  std::optional<Check<F>> peirce_relations;
  std::optional<Check<F>> jordan;           // condition (d), structural
  std::optional<Check<F>> jordan_identity;  // condition (a)
  std::optional<Check<F>> cube_weight;      // condition (c)
  std::optional<Check<F>> nuclear;

  bool is_baric() const { return baric.holds(); }
  bool is_bernstein() const { return bernstein && bernstein->holds() && peirce.has_value(); }
  bool is_jordan() const { return jordan && jordan->holds(); }
  bool is_nuclear() const { return nuclear && nuclear->holds(); }
};

template <Field F>
Classification<F> classify(const BaricAlgebra<F>& b, const std::type_identity_t<std::optional<Vec<F>>>& seed = std::nullopt) {
  const auto& a = b.algebra;
  Classification<F> c;
  c.baric = verify_weight(b);
  if (!c.baric) return c;

  const Subspace<F> n = b.barideal();
  const PowerChain<F> chain = power_chain(a, n, PowerKind::principal);
  if (chain.nil_index) {
    c.barideal_nilpotent = Check<F>::pass();
  } else {
    const Vec<F> stuck = chain.terms.back().basis_vector(0);
    c.barideal_nilpotent = Check<F>::fail({"principal powers of N stabilize at a nonzero ideal", {{"x", stuck}}, stuck});
  }

  c.bernstein = check_identity(a, IdentityId::bernstein, b.weight_span());
  if (!*c.bernstein) return c;
  c.peirce = peirce(b, find_idempotent(b, seed));
  c.peirce_relations = check_peirce_relations(a, *c.peirce);
  c.jordan = check_jordan_structural(a, *c.peirce);
  c.jordan_identity = check_identity(a, IdentityId::jordan, b.weight_span());
  c.cube_weight = check_identity(a, IdentityId::cube_weight, b.weight_span());
  c.nuclear = check_nuclear(a, *c.peirce);
  return c;
}

/// A / I for a baric ideal I. The quotient basis is the greedy complement of
/// I among the standard basis vectors, which keep their names.
template <Field F>
BaricAlgebra<F> quotient(const BaricAlgebra<F>& b, const Subspace<F>& ideal) {
  const auto& a = b.algebra;
  ideal.check_ambient(a.dim());
  if (!subspace_leq(ideal, b.barideal())) throw AlgebraError("ideal is not contained in ker(omega)");
  if (!is_ideal(a, ideal)) throw AlgebraError("subspace is not an ideal");

  const std::vector<std::size_t> comp = complement_indices(ideal);
  const std::size_t q = comp.size();
  // Coordinates in the basis [complement | ideal] via the inverse of the
  // change-of-basis matrix.
  std::vector<Vec<F>> columns;
  for (std::size_t k : comp) columns.push_back(a.basis_vector(k));
  for (auto& v : ideal.basis_vectors()) columns.push_back(std::move(v));
  const auto inv = inverse(Matrix<F>::from_columns(columns, a.dim()));
  if (!inv) throw std::logic_error("complement does not complete the ideal to a basis");

  std::vector<std::string> names;
  Vec<F> weight;
  for (std::size_t k : comp) {
    names.push_back(a.basis_names()[k]);
    weight.push_back(b.weight[k]);
  }
  CommAlgebra<F> out(a.name() + "_quot", std::move(names));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i; j < q; ++j) {
      const Vec<F> coords = inv->apply(a.basis_product(comp[i], comp[j]));
      out.set_product(i, j, Vec<F>(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(q)));
    }
  return {std::move(out), std::move(weight)};
}

/// The nuclear Bernstein subalgebra A^2 = Ke + U + U^2. Throws if it is
/// unexpectedly not nuclear or U + U^2 is not an ideal of A.
template <Field F>
BaricAlgebra<F> nuclear_core(const BaricAlgebra<F>& b, const PeirceData<F>& p) {
  const auto& a = b.algebra;
  const Subspace<F> u_plus_u2 = subspace_sum(p.U, subspace_product(a, p.U, p.U));
  if (!is_ideal(a, u_plus_u2)) throw AlgebraError("U + U^2 is not an ideal; the algebra is not Bernstein");
  const Subspace<F> core = subspace_sum(Subspace<F>::span({p.e}, a.dim()), u_plus_u2);
  BaricAlgebra<F> out;
  out.algebra = restrict_to_subalgebra(a, core, a.name() + "_core");
  for (std::size_t i = 0; i < core.dim(); ++i) out.weight.push_back(b.omega(core.basis_vector(i)));
  const Vec<F> e_core = core.coordinates(p.e);
  const PeirceData<F> pc = peirce(out, e_core);
  if (!check_nuclear(out.algebra, pc)) throw AlgebraError("Ke + U + U^2 is not nuclear; the algebra is not Bernstein");
  return out;
}

}  // namespace bernalg
