#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bernalg/algebra.hpp"

namespace bernalg {

enum class PowerKind {
  full,       // S^i = sum_{r+s=i} S^r S^s
  principal,  // S^<i> = S^<i-1> S
  plenary,    // S^(1) = S^2, S^(i) = (S^(i-1))^2
};

std::string_view to_string(PowerKind kind);
std::optional<PowerKind> parse_power_kind(std::string_view text);

/// terms[k] is the power of index k + 1 (S^(k+1), S^<k+1> or S^((k+1))).
template <Field F>
struct PowerChain {
  PowerKind kind = PowerKind::full;
  std::vector<Subspace<F>> terms;
  bool stabilized = false;
  std::optional<std::size_t> nil_index;  // first index whose term is zero
};

/// Step bound that guarantees termination.
///
/// Principal and plenary terms depend only on their predecessor, so a
/// repeated term is a fixed point and d + 2 steps always suffice. Full powers
/// can plateau and then drop (squareshift(3) has S^3 = S^4 != 0 = S^5). A
/// plateau starting at index m that survives to index 2m is permanent, so the
/// first index of each plateau at most doubles and the chain settles by
/// index 2^(d+1).
inline std::size_t default_power_steps(PowerKind kind, std::size_t dim) {
  if (kind != PowerKind::full) return dim + 2;
  if (dim + 1 >= std::numeric_limits<std::size_t>::digits) return std::numeric_limits<std::size_t>::max();
  return (std::size_t{1} << (dim + 1)) + 1;
}

namespace detail {

/// Next full power from terms[0..i-2], i = terms.size() + 1.
template <Field F>
Subspace<F> next_full_power(const CommAlgebra<F>& a, const std::vector<Subspace<F>>& terms) {
  const std::size_t i = terms.size() + 1;
  Subspace<F> acc = Subspace<F>::zero(a.dim());
  for (std::size_t r = 1; r <= i / 2; ++r) {
    const Subspace<F>& left = terms[r - 1];
    const Subspace<F>& right = terms[i - r - 1];
    if (left.is_zero() || right.is_zero()) continue;
    acc = subspace_sum(acc, subspace_product(a, left, right));
  }
  return acc;
}

}  // namespace detail

/// The first `count` full powers S^1..S^count, without early stopping.
template <Field F>
std::vector<Subspace<F>> full_powers(const CommAlgebra<F>& a, const Subspace<F>& s, std::size_t count) {
  s.check_ambient(a.dim());
  std::vector<Subspace<F>> terms;
  if (count == 0) return terms;
  terms.push_back(s);
  while (terms.size() < count) {
    if (terms.back().is_zero()) {
      terms.push_back(Subspace<F>::zero(a.dim()));
      continue;
    }
    terms.push_back(detail::next_full_power(a, terms));
  }
  return terms;
}

/// Computes a power chain until it vanishes, provably stabilizes, or
/// `max_steps` terms have been produced (then stabilized = false).
template <Field F>
PowerChain<F> power_chain(const CommAlgebra<F>& a, const Subspace<F>& s, PowerKind kind,
                          std::optional<std::size_t> max_steps = std::nullopt) {
  s.check_ambient(a.dim());
  const std::size_t limit = max_steps.value_or(default_power_steps(kind, a.dim()));
  if (limit == 0) throw std::invalid_argument("max_steps must be at least 1");

  PowerChain<F> chain;
  chain.kind = kind;
  chain.terms.push_back(kind == PowerKind::plenary ? subspace_product(a, s, s) : s);
  std::size_t plateau_start = 1;  // first index of the current run of equal terms

  while (true) {
    const std::size_t index = chain.terms.size();
    if (chain.terms.back().is_zero()) {
      chain.stabilized = true;
      chain.nil_index = index;
      return chain;
    }
    if (index >= 2 && chain.terms[index - 1] == chain.terms[index - 2]) {
      if (kind != PowerKind::full || index >= 2 * plateau_start) {
        chain.stabilized = true;
        return chain;
      }
    } else {
      plateau_start = index;
    }
    if (index >= limit) {
      chain.stabilized = false;
      return chain;
    }
    switch (kind) {
      case PowerKind::full:
        chain.terms.push_back(detail::next_full_power(a, chain.terms));
        break;
      case PowerKind::principal:
        chain.terms.push_back(subspace_product(a, chain.terms.back(), s));
        break;
      case PowerKind::plenary:
        chain.terms.push_back(subspace_product(a, chain.terms.back(), chain.terms.back()));
        break;
    }
  }
}

struct NilpotencyReport {
  std::optional<std::size_t> nil_index_full;
  std::optional<std::size_t> nil_index_principal;
  std::optional<std::size_t> solv_index;

  bool nilpotent() const { return nil_index_principal.has_value(); }
  bool solvable() const { return solv_index.has_value(); }
};

/// Runs all three chains of the subalgebra s with the default step bounds.
template <Field F>
NilpotencyReport nilpotency_report(const CommAlgebra<F>& a, const Subspace<F>& s) {
  const auto full = power_chain(a, s, PowerKind::full);
  const auto principal = power_chain(a, s, PowerKind::principal);
  const auto plenary = power_chain(a, s, PowerKind::plenary);
  if (!full.stabilized || !principal.stabilized || !plenary.stabilized)
    throw std::logic_error("power chain did not settle within its guaranteed bound");
  if (full.nil_index.has_value() != principal.nil_index.has_value())
    throw std::logic_error("full and principal nilpotency disagree on a commutative algebra");
  return {full.nil_index, principal.nil_index, plenary.nil_index};
}

}  // namespace bernalg
