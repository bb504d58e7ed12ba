#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bernalg/bernstein.hpp"

namespace bernalg {

/// (v_1 * ... * v_k).u = v_1(...(v_k u)...) for letters v_i in V and u in annU.
template <Field F>
Vec<F> module_action(const CommAlgebra<F>& a, const PeirceData<F>& p, const std::vector<Vec<F>>& word, const Vec<F>& u) {
  if (!p.annU.contains(u)) throw AlgebraError("module element is not in annU");
  for (const auto& letter : word)
    if (!p.V.contains(letter)) throw AlgebraError("word letter is not in V");
  Vec<F> acc = u;
  for (auto it = word.rbegin(); it != word.rend(); ++it) acc = a.multiply(*it, acc);
  return acc;
}

struct SubmoduleIdealCheck {
  bool is_submodule = false;
  bool is_ideal_in_A = false;
};

/// For s inside annU, compares the K<V>-submodule property (V s <= s) with
/// being an ideal of A.
template <Field F>
SubmoduleIdealCheck submodule_ideal_check(const CommAlgebra<F>& a, const PeirceData<F>& p, const Subspace<F>& s) {
  if (!subspace_leq(s, p.annU)) throw AlgebraError("subspace is not contained in annU");
  return {subspace_leq(subspace_product(a, p.V, s), s), is_ideal(a, s)};
}

template <Field F>
struct FixedSubspaceResult {
  std::vector<Subspace<F>> chain;  // I_0 = N, I_{k+1} = V I_k
  Subspace<F> gfp;
  std::size_t steps = 0;
};

/// Greatest subspace I with V I = I, as the limit of the decreasing chain
/// I_0 = N, I_{k+1} = V I_k. Every such I lies in N (I = V I <= V A <= N),
/// so starting from N misses nothing.
template <Field F>
FixedSubspaceResult<F> greatest_fixed_subspace(const CommAlgebra<F>& a, const PeirceData<F>& p) {
  FixedSubspaceResult<F> r;
  r.chain.push_back(p.N);
  while (true) {
    Subspace<F> next = subspace_product(a, p.V, r.chain.back());
    if (next == r.chain.back()) break;
    if (r.chain.size() > a.dim() + 1) throw std::logic_error("V-chain failed to stabilize");
    r.chain.push_back(std::move(next));
  }
  r.gfp = r.chain.back();
  r.steps = r.chain.size() - 1;
  return r;
}

template <Field F>
struct MultClosure {
  std::vector<Matrix<F>> generators;    // L_v restricted to N, v in a basis of V
  std::vector<Matrix<F>> span_closure;  // basis of the associative algebra they generate
  bool nilpotent = false;
  std::optional<std::size_t> nil_index;  // first k with all length-k products zero
};

namespace detail {

template <Field F>
Vec<F> flatten(const Matrix<F>& m) {
  return Vec<F>(m.entries().begin(), m.entries().end());
}

template <Field F>
Matrix<F> unflatten(std::span<const F> v, std::size_t n) {
  Matrix<F> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

template <Field F>
std::vector<Matrix<F>> operator_basis(const Subspace<F>& s, std::size_t n) {
  std::vector<Matrix<F>> out;
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(unflatten(s.basis().row(i), n));
  return out;
}

}  // namespace detail

/// The associative algebra M_*^N(V) generated by the operators L_v on N.
///
/// W_k is the span of products of exactly k generators. A nilpotent
/// associative algebra of operators on a d-dimensional space has W_{d+1} = 0,
/// so nilpotency is decided by length d + 1.
template <Field F>
MultClosure<F> mult_closure_nilpotent(const CommAlgebra<F>& a, const PeirceData<F>& p) {
  const std::size_t d = p.N.dim();
  const std::size_t flat = d * d;
  MultClosure<F> mc;
  for (std::size_t i = 0; i < p.V.dim(); ++i)
    mc.generators.push_back(left_mult_operator(a, p.V.basis_vector(i), std::optional<Subspace<F>>(p.N)));

  auto products_with_generators = [&](const Subspace<F>& w) {
    std::vector<Vec<F>> out;
    for (const auto& g : mc.generators)
      for (const auto& m : detail::operator_basis(w, d)) out.push_back(detail::flatten(Matrix<F>(g * m)));
    return Subspace<F>::span(out, flat);
  };

  std::vector<Vec<F>> gens_flat;
  for (const auto& g : mc.generators) gens_flat.push_back(detail::flatten(g));
  Subspace<F> layer = Subspace<F>::span(gens_flat, flat);
  Subspace<F> closure = layer;
  for (std::size_t k = 1; k <= d + 1; ++k) {
    if (layer.is_zero()) {
      mc.nilpotent = true;
      mc.nil_index = k;
      break;
    }
    layer = products_with_generators(layer);
    closure = subspace_sum(closure, layer);
  }
  // The closure may still be growing when the algebra is not nilpotent.
  while (true) {
    Subspace<F> next = subspace_sum(closure, products_with_generators(closure));
    if (next == closure) break;
    closure = std::move(next);
  }
  mc.span_closure = detail::operator_basis(closure, d);
  return mc;
}

struct Lemma51Result {
  bool NI_eq_I = false;
  bool VI_eq_I = false;
  bool conclusion_holds = false;
};

/// NI = I <=> VI = I, and NI = I implies I <= annU with I an ideal of A.
template <Field F>
Lemma51Result lemma51_check(const CommAlgebra<F>& a, const PeirceData<F>& p, const Subspace<F>& s) {
  Lemma51Result r;
  r.NI_eq_I = subspace_product(a, p.N, s) == s;
  r.VI_eq_I = subspace_product(a, p.V, s) == s;
  const bool consequences = !r.NI_eq_I || (subspace_leq(s, p.annU) && is_ideal(a, s));
  r.conclusion_holds = (r.NI_eq_I == r.VI_eq_I) && consequences;
  return r;
}

struct Eq4Step {
  std::size_t i = 0;
  std::size_t dim_N_i = 0;         // dim N^i
  std::size_t dim_rhs = 0;         // dim (F^i + N^(i+1))
  bool holds = false;
};

template <Field F>
struct Thm43Certificate {
  Subspace<F> subalgebra;  // F, generated by the ideal generators
  std::size_t m = 0;  // F^m = 0
  std::vector<Eq4Step> eq4;
  std::size_t eq4_checked_up_to = 0;
  bool eq4_all_hold = false;
  bool n_equals_F_plus_Nm = false;
  bool N_nilpotent = false;  // N^m = 0

  bool closes() const { return eq4_all_hold && n_equals_F_plus_Nm && N_nilpotent; }
};

/// Constructive check of the decomposition N = F + N^m for an ideal N
/// generated (as an ideal of N itself) by `gens`, where F is the nilpotent
/// subalgebra they generate. Verifies N^i <= F^i + N^(i+1) for i = 1..m with
/// full powers, then N = F + N^m and N^m = 0.
template <Field F>
Thm43Certificate<F> thm43_decompose(const CommAlgebra<F>& a, const Subspace<F>& n, const std::vector<Vec<F>>& gens) {
  n.check_ambient(a.dim());
  if (!is_ideal(a, n)) throw AlgebraError("N is not an ideal of the algebra");
  for (const auto& g : gens)
    if (!n.contains(g)) throw AlgebraError("generator does not lie in N");
  if (generated_ideal(a, gens, std::optional<Subspace<F>>(n)) != n)
    throw AlgebraError("generators do not generate N as an ideal");

  Thm43Certificate<F> cert;
  cert.subalgebra = generated_subalgebra(a, gens);
  const PowerChain<F> fchain = power_chain(a, cert.subalgebra, PowerKind::full);
  if (!fchain.nil_index) throw AlgebraError("the generated subalgebra F is not nilpotent");
  cert.m = *fchain.nil_index;

  const std::vector<Subspace<F>> fp = full_powers(a, cert.subalgebra, cert.m);
  const std::vector<Subspace<F>> np = full_powers(a, n, cert.m + 1);
  cert.eq4_all_hold = true;
  for (std::size_t i = 1; i <= cert.m; ++i) {
    const Subspace<F> rhs = subspace_sum(fp[i - 1], np[i]);
    Eq4Step step{i, np[i - 1].dim(), rhs.dim(), subspace_leq(np[i - 1], rhs)};
    cert.eq4_all_hold = cert.eq4_all_hold && step.holds;
    cert.eq4.push_back(step);
    cert.eq4_checked_up_to = i;
  }
  cert.n_equals_F_plus_Nm = subspace_sum(cert.subalgebra, np[cert.m - 1]) == n;
  cert.N_nilpotent = np[cert.m - 1].is_zero();
  return cert;
}

}  // namespace bernalg
