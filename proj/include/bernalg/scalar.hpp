#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bernalg {

/// Exact rational scalar. GMP keeps every result in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

namespace detail {

constexpr bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace detail

/// Residues modulo a prime P >= 5. Only used by exhaustive test oracles.
template <std::uint32_t P>
class Fp {
  static_assert(detail::is_prime(P), "Fp modulus must be prime");
  static_assert(P >= 5, "characteristic must differ from 2 and 3");

 public:
  static constexpr std::uint32_t modulus = P;

  constexpr Fp() = default;
  constexpr Fp(long long v) : value_(reduce(v)) {}  // NOLINT: implicit like an integer literal

  constexpr std::uint32_t value() const { return value_; }

  friend constexpr Fp operator+(Fp a, Fp b) { return Fp(static_cast<long long>(a.value_) + b.value_); }
  friend constexpr Fp operator-(Fp a, Fp b) {
    return Fp(static_cast<long long>(a.value_) - static_cast<long long>(b.value_));
  }
  friend constexpr Fp operator*(Fp a, Fp b) {
    return Fp(static_cast<long long>(static_cast<std::uint64_t>(a.value_) * b.value_ % P));
  }
  friend constexpr Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  constexpr Fp operator-() const { return Fp(-static_cast<long long>(value_)); }

  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }

  friend constexpr bool operator==(Fp, Fp) = default;

  constexpr Fp inverse() const {
    if (value_ == 0) throw std::domain_error("division by zero in prime field");
    // Fermat: a^(P-2)
    std::uint64_t result = 1, base = value_;
    for (std::uint32_t e = P - 2; e > 0; e >>= 1) {
      if (e & 1u) result = result * base % P;
      base = base * base % P;
    }
    Fp r;
    r.value_ = static_cast<std::uint32_t>(result);
    return r;
  }

 private:
  static constexpr std::uint32_t reduce(long long v) {
    long long r = v % static_cast<long long>(P);
    return static_cast<std::uint32_t>(r < 0 ? r + P : r);
  }

  std::uint32_t value_ = 0;
};

template <class F>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static std::string format(const Rational& x) { return x.get_str(); }

  /// Small random rational: numerator in [-9, 9], denominator in [1, 4].
  static Rational random(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
  }
};

template <std::uint32_t P>
struct ScalarTraits<Fp<P>> {
  static std::string format(const Fp<P>& x) { return std::to_string(x.value()); }

  static Fp<P> random(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> d(0, P - 1);
    return Fp<P>(d(rng));
  }
};

/// A commutative field of characteristic other than 2 and 3 with exact
/// arithmetic.
template <class F>
concept Field = std::regular<F> && requires(const F& a, const F& b, std::mt19937_64& rng) {
  F(1);
  { F(a + b) };
  { F(a - b) };
  { F(a * b) };
  { F(a / b) };
  { F(-a) };
  { ScalarTraits<F>::format(a) } -> std::convertible_to<std::string>;
  { ScalarTraits<F>::random(rng) } -> std::convertible_to<F>;
};

template <Field F>
bool is_zero(const F& x) {
  return x == F{};
}

template <Field F>
std::string format_scalar(const F& x) {
  return ScalarTraits<F>::format(x);
}

/// Parses `p`, `-p` or `p/q` (q > 0) into lowest terms.
std::optional<Rational> parse_rational(std::string_view text);

}  // namespace bernalg
