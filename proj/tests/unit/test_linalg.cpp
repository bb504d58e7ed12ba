#include <random>

#include "bernalg/subspace.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace bernalg;
using Q = Rational;
using M = Matrix<Q>;

namespace {

Q q(long n, long d = 1) { return Q(n, d); }

M random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  M m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = pick(rng) == 0 ? ScalarTraits<Q>::random(rng) : Q(0);
  return m;
}

Subspace<Q> random_subspace(std::size_t ambient, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> count(0, ambient);
  return Subspace<Q>::from_matrix(random_matrix(count(rng), ambient, rng));
}

}  // namespace

TEST_CASE("rational literals") {
  CHECK(*parse_rational("3/6") == q(1, 2));
  CHECK(*parse_rational("-4") == q(-4));
  CHECK(*parse_rational("+2/3") == q(2, 3));
  CHECK_FALSE(parse_rational("1/0"));
  CHECK_FALSE(parse_rational("1.5"));
  CHECK_FALSE(parse_rational(""));
  CHECK_FALSE(parse_rational("/3"));
  CHECK_FALSE(parse_rational("--1"));
}

TEST_CASE("rref of small matrices") {
  CHECK(rref(M{{q(2), q(4)}, {q(1), q(2)}}) == M{{q(1), q(2)}, {q(0), q(0)}});
  CHECK(rref(M::identity(3)) == M::identity(3));
  CHECK(rref(M{{q(0), q(1)}, {q(1), q(0)}}) == M::identity(2));
  CHECK(rank(M(2, 3)) == 0);
}

TEST_CASE("kernel") {
  CHECK(kernel(M(2, 2)) == Subspace<Q>::full(2));
  CHECK(kernel(M::identity(3)).is_zero());
  CHECK(kernel(M{{q(1), q(1)}}) == Subspace<Q>::span({{q(1), q(-1)}}, 2));
}

TEST_CASE("span") {
  CHECK(Subspace<Q>::span({}, 3).is_zero());
  const auto s = Subspace<Q>::span({{q(1), q(0)}, {q(2), q(0)}}, 2);
  CHECK(s.dim() == 1);
  CHECK(s == Subspace<Q>::span({{q(1), q(0)}}, 2));
  CHECK(Subspace<Q>::span({{q(1), q(1)}, {q(1), q(-1)}}, 2).is_full());
  CHECK_THROWS_AS(Subspace<Q>::span({{q(1)}}, 2), DimensionError);
}

TEST_CASE("sum and intersection") {
  const auto plane = Subspace<Q>::span({{q(1), q(0)}, {q(0), q(1)}}, 2);
  const auto diag = Subspace<Q>::span({{q(1), q(1)}}, 2);
  CHECK(subspace_sum(diag, Subspace<Q>::zero(2)) == diag);
  CHECK(subspace_intersect(plane, diag) == diag);
  CHECK_THROWS_AS(subspace_sum(diag, Subspace<Q>::zero(3)), DimensionError);

  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_subspace(5, rng);
    const auto b = random_subspace(5, rng);
    const auto s = subspace_sum(a, b);
    const auto i = subspace_intersect(a, b);
    CHECK(a.dim() + b.dim() == s.dim() + i.dim());
    CHECK(subspace_leq(i, a));
    CHECK(subspace_leq(i, b));
    CHECK(subspace_leq(a, s));
    CHECK((a == b) == (subspace_leq(a, b) && subspace_leq(b, a)));
  }
}

TEST_CASE("membership and coordinates") {
  CHECK(Subspace<Q>::zero(2).contains(Vec<Q>{q(0), q(0)}));
  const auto x = Subspace<Q>::span({{q(1), q(0)}}, 2);
  CHECK_FALSE(x.contains(Vec<Q>{q(0), q(1)}));
  const auto s = Subspace<Q>::span({{q(1), q(2), q(3)}, {q(0), q(1), q(1)}}, 3);
  const Vec<Q> v{q(2), q(5), q(7)};
  CHECK(s.from_coordinates(s.coordinates(v)) == v);
  CHECK_THROWS_AS(s.coordinates(Vec<Q>{q(0), q(0), q(1)}), AlgebraError);
}

TEST_CASE("eigenspaces") {
  CHECK(eigenspace(M::identity(3), q(1)).is_full());
  CHECK(eigenspace(M(3, 3), q(0)).is_full());
  const M d{{q(1), q(0), q(0)}, {q(0), q(1, 2), q(0)}, {q(0), q(0), q(0)}};
  CHECK(eigenspace(d, q(1, 2)) == Subspace<Q>::span({unit_vector<Q>(3, 1)}, 3));
}

TEST_CASE("random matrix laws") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const M m = random_matrix(1 + t % 5, 1 + (t / 5) % 6, rng);
    const M r = rref(m);
    CHECK(rref(r) == r);
    CHECK(rank(m) + kernel(m).dim() == m.cols());
    CHECK(Subspace<Q>::from_matrix(m) == Subspace<Q>::from_matrix(r));
  }
}

TEST_CASE("inverse") {
  const M m{{q(2), q(1)}, {q(1), q(1)}};
  const auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m * *inv == M::identity(2));
  CHECK_FALSE(inverse(M{{q(1), q(2)}, {q(2), q(4)}}));
}

TEST_CASE("prime field subspace lattice agrees with enumeration") {
  constexpr std::uint32_t P = 5;
  using F = Fp<P>;
  const auto all = oracle::all_subspaces<P>(3);
  CHECK(all.size() == 64);  // 1 + 31 + 31 + 1 subspaces of F_5^3
  std::vector<Subspace<F>> ours;
  for (const auto& s : all) ours.push_back(Subspace<F>::span(oracle::points<P>(s), 3));
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(oracle::set_of<P>(ours[i]) == all[i]);
    CHECK(ours[i].dim() == oracle::dim_of<P>(all[i]));
    for (std::size_t j = 0; j < all.size(); ++j) {
      CHECK(oracle::set_of<P>(subspace_sum(ours[i], ours[j])) == oracle::set_sum<P>(all[i], all[j]));
      CHECK(oracle::set_of<P>(subspace_intersect(ours[i], ours[j])) == oracle::set_intersection(all[i], all[j]));
      CHECK(subspace_leq(ours[i], ours[j]) == oracle::set_leq(all[i], all[j]));
    }
  }
}
