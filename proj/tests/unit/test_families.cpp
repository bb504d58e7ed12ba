#include "bernalg/families.hpp"
#include "bernalg/theorem_lab.hpp"
#include "doctest.h"

using namespace bernalg;
using Q = Rational;

namespace {

Vec<Q> u(std::size_t n, std::size_t k) { return unit_vector<Q>(n, k); }
Vec<Q> zero(std::size_t n) { return Vec<Q>(n); }

}  // namespace

TEST_CASE("family names") {
  for (auto k : {FamilyKind::zhevlakov, FamilyKind::squareshift, FamilyKind::bdown, FamilyKind::bup, FamilyKind::jordan3})
    CHECK(parse_family_kind(to_string(k)) == k);
  CHECK_FALSE(parse_family_kind("bsideways"));
  CHECK_THROWS_AS(make_family<Q>(FamilyKind::bdown, 0), std::invalid_argument);
  CHECK(make_family<Q>(FamilyKind::bdown, 3).algebra.name() == "bdown3");
  CHECK(make_family<Q>(FamilyKind::jordan3, 7).algebra.dim() == 3);
}

TEST_CASE("structure constants match the defining formulas") {
  const Q h(1, 2);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto zh = make_family<Q>(FamilyKind::zhevlakov, n).algebra;
    const auto ss = make_family<Q>(FamilyKind::squareshift, n).algebra;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) {
        const std::size_t m = std::min(i, j);
        CHECK(zh.basis_product(i - 1, j - 1) == (i >= 2 && j >= 2 ? u(n, m - 2) : zero(n)));
        CHECK(ss.basis_product(i - 1, j - 1) == (i == j && i >= 2 ? u(n, i - 2) : zero(n)));
      }

    const std::size_t d = n + 2;
    const auto down = make_family<Q>(FamilyKind::bdown, n);
    const auto up = make_family<Q>(FamilyKind::bup, n);
    CHECK(down.weight == u(d, 0));
    CHECK(up.weight == u(d, 0));
    CHECK(down.algebra.basis_product(0, 0) == u(d, 0));
    CHECK(down.algebra.basis_product(0, 1) == zero(d));
    CHECK(down.algebra.basis_product(1, 1) == zero(d));
    for (std::size_t i = 1; i <= n; ++i) {
      CHECK(down.algebra.basis_product(0, i + 1) == scaled(u(d, i + 1), h));
      CHECK(up.algebra.basis_product(0, i + 1) == scaled(u(d, i + 1), h));
      CHECK(down.algebra.basis_product(i + 1, 1) == (i >= 2 ? u(d, i) : zero(d)));
      CHECK(up.algebra.basis_product(i + 1, 1) == (i < n ? u(d, i + 2) : zero(d)));
      for (std::size_t j = 1; j <= n; ++j) CHECK(down.algebra.basis_product(i + 1, j + 1) == zero(d));
    }
  }
  const auto j3 = make_family<Q>(FamilyKind::jordan3, 0).algebra;
  CHECK(j3.basis_product(0, 1) == scaled(u(3, 1), h));
  CHECK(j3.basis_product(1, 1) == u(3, 2));
  CHECK(j3.basis_product(0, 2) == zero(3));
  CHECK(j3.basis_product(1, 2) == zero(3));
}

TEST_CASE("small family facts") {
  const auto b3 = make_family<Q>(FamilyKind::bdown, 3).baric();
  CHECK(verify_weight(b3).holds());
  CHECK(check_identity(b3.algebra, IdentityId::bernstein, b3.weight_span()).holds());

  const auto ss1 = make_family<Q>(FamilyKind::squareshift, 1).algebra;
  CHECK(ss1.dim() == 1);
  CHECK(ss1.basis_product(0, 0) == zero(1));

  const auto zh4 = make_family<Q>(FamilyKind::zhevlakov, 4).algebra;
  const auto sq = subspace_product(zh4, Subspace<Q>::full(4), Subspace<Q>::full(4));
  CHECK(sq == Subspace<Q>::span({u(4, 0), u(4, 1), u(4, 2)}, 4));
}

TEST_CASE("plenary traces in squareshift(3)") {
  const auto a = make_family<Q>(FamilyKind::squareshift, 3).algebra;
  const auto t = plenary_trace(a, add(u(3, 1), u(3, 2)), 5);
  REQUIRE(t.size() == 4);
  CHECK(t[1] == add(u(3, 0), u(3, 1)));
  CHECK(t[2] == u(3, 0));
  CHECK(is_zero_vector(t[3]));

  CHECK(plenary_trace(a, zero(3), 5) == std::vector<Vec<Q>>{zero(3)});

  const auto s = plenary_trace(a, scaled(u(3, 2), Q(2)), 3);
  CHECK(s[1] == scaled(u(3, 1), Q(4)));
  CHECK(s[2] == scaled(u(3, 0), Q(16)));
  CHECK(plenary_trace(a, u(3, 2), 0).empty());
}

TEST_CASE("plenary traces reach e1 from any element with a top coefficient") {
  for (std::size_t k = 2; k <= 7; ++k) {
    const auto a = make_family<Q>(FamilyKind::squareshift, k).algebra;
    Vec<Q> x(k);
    for (std::size_t i = 0; i < k; ++i) x[i] = Q(static_cast<long>(i) + 1, 3);
    const auto t = plenary_trace(a, x, k);
    REQUIRE(t.size() == k);
    const auto& last = t[k - 1];
    CHECK_FALSE(is_zero(last[0]));
    for (std::size_t i = 1; i < k; ++i) CHECK(is_zero(last[i]));
    CHECK(generated_subalgebra(a, {x}).contains(u(k, 0)));
  }
}

TEST_CASE("family invariants") {
  for (std::size_t n = 2; n <= 8; ++n) {
    CAPTURE(n);
    const auto down = make_family<Q>(FamilyKind::bdown, n).baric();
    const auto c = classify(down);
    CHECK(c.is_bernstein());
    CHECK(c.is_jordan() == (n < 3));
    CHECK_FALSE(c.is_nuclear());
    CHECK(power_chain(down.algebra, down.barideal(), PowerKind::principal).nil_index == n + 1);

    const auto up = make_family<Q>(FamilyKind::bup, n).baric();
    const auto cu = classify(up);
    CHECK(cu.is_bernstein());
    CHECK(cu.barideal_nilpotent->holds());
    CHECK(greatest_fixed_subspace(up.algebra, *cu.peirce).gfp.is_zero());

    const auto ss = make_family<Q>(FamilyKind::squareshift, n).algebra;
    CHECK(generated_subalgebra(ss, {u(n, n - 1)}).is_full());
    CHECK(power_chain(ss, Subspace<Q>::full(n), PowerKind::principal).nil_index == n + 1);
    const auto ssz = check_identity(ss, IdentityId::square_square_zero);
    CHECK(ssz.holds() == (n < 3));
    if (n >= 3) CHECK(ssz.witness->assignment[0].second == u(n, 2));

    const auto zh = make_family<Q>(FamilyKind::zhevlakov, n).algebra;
    for (std::size_t k = 0; k < n; ++k) {
      const auto s = generated_subalgebra(zh, {u(n, k)});
      CHECK(power_chain(zh, s, PowerKind::principal).nil_index.has_value());
    }
  }
}
