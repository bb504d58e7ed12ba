#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bernalg/bernstein.hpp"

namespace bernalg {

// Finite truncations of the standard example algebras. Basis order is fixed
// (the weight-1 vector first) so serialized files are byte-stable.
//
//   zhevlakov(n)   e_1..e_n,            e_i e_j = e_{min(i,j)-1} for i, j >= 2
//   squareshift(n) e_1..e_n,            e_k^2 = e_{k-1} for k >= 2
//   bdown(n)       e, v1, u1..un,       e^2 = e, e u_i = u_i/2, u_i v1 = u_{i-1} (i >= 2)
//   bup(n)         e, v2, u1..un,       e^2 = e, e u_i = u_i/2, u_i v2 = u_{i+1} (i < n)
//   jordan3        e, u, v,             e^2 = e, e u = u/2, u^2 = v
//
// bup(n) sets u_n v2 = 0 to close the table. Truncation gives up the
// infinite-dimensional behaviour the untruncated algebras are known for:
// zhevlakov(n) has N^2 != N, and bup(n) has a nilpotent barideal.
enum class FamilyKind { zhevlakov, squareshift, bdown, bup, jordan3 };

std::string_view to_string(FamilyKind kind);
std::optional<FamilyKind> parse_family_kind(std::string_view text);

template <Field F>
Presentation<F> make_family(FamilyKind kind, std::size_t n) {
  if (kind != FamilyKind::jordan3 && n < 1) throw std::invalid_argument("family size n must be at least 1");
  const F half = F(1) / F(2);
  std::vector<std::string> names;
  auto unit = [&](std::size_t dim, std::size_t k) { return unit_vector<F>(dim, k); };

  switch (kind) {
    case FamilyKind::zhevlakov:
    case FamilyKind::squareshift: {
      for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
      CommAlgebra<F> a(std::string(to_string(kind)) + std::to_string(n), names);
      for (std::size_t i = 2; i <= n; ++i) {
        if (kind == FamilyKind::squareshift) {
          a.set_product(i - 1, i - 1, unit(n, i - 2));
          continue;
        }
        for (std::size_t j = i; j <= n; ++j) a.set_product(i - 1, j - 1, unit(n, i - 2));  // min(i, j) = i
      }
      return {std::move(a), std::nullopt};
    }
    case FamilyKind::bdown:
    case FamilyKind::bup: {
      const bool down = kind == FamilyKind::bdown;
      const std::size_t dim = n + 2;
      names = {"e", down ? "v1" : "v2"};
      for (std::size_t i = 1; i <= n; ++i) names.push_back("u" + std::to_string(i));
      CommAlgebra<F> a(std::string(to_string(kind)) + std::to_string(n), names);
      auto u = [](std::size_t i) { return i + 1; };  // basis slot of u_i
      a.set_product(0, 0, unit(dim, 0));
      for (std::size_t i = 1; i <= n; ++i) a.set_product(0, u(i), scaled(unit(dim, u(i)), half));
      for (std::size_t i = 1; i <= n; ++i) {
        if (down && i >= 2) a.set_product(u(i), 1, unit(dim, u(i - 1)));
        if (!down && i + 1 <= n) a.set_product(u(i), 1, unit(dim, u(i + 1)));
      }
      return {std::move(a), unit(dim, 0)};
    }
    case FamilyKind::jordan3: {
      CommAlgebra<F> a("jordan3", {"e", "u", "v"});
      a.set_product(0, 0, unit(3, 0));
      a.set_product(0, 1, scaled(unit(3, 1), half));
      a.set_product(1, 1, unit(3, 2));
      return {std::move(a), unit(3, 0)};
    }
  }
  throw std::logic_error("unknown family");
}

/// x^[1] = x, x^[r] = (x^[r-1])^2, up to max_r terms; stops after the first
/// zero term.
template <Field F>
std::vector<Vec<F>> plenary_trace(const CommAlgebra<F>& a, const Vec<F>& x, std::size_t max_r) {
  std::vector<Vec<F>> out;
  if (max_r == 0) return out;
  out.push_back(x);
  while (out.size() < max_r && !is_zero_vector(out.back())) out.push_back(a.square(out.back()));
  return out;
}

}  // namespace bernalg
