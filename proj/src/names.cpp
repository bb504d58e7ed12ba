#include <array>
#include <utility>

#include "bernalg/families.hpp"
#include "bernalg/identities.hpp"
#include "bernalg/powers.hpp"

namespace bernalg {

namespace {

constexpr std::array<std::pair<PowerKind, std::string_view>, 3> kPowerKinds{{
    {PowerKind::full, "full"},
    {PowerKind::principal, "principal"},
    {PowerKind::plenary, "plenary"},
}};

constexpr std::array<std::pair<FamilyKind, std::string_view>, 5> kFamilyKinds{{
    {FamilyKind::zhevlakov, "zhevlakov"},
    {FamilyKind::squareshift, "squareshift"},
    {FamilyKind::bdown, "bdown"},
    {FamilyKind::bup, "bup"},
    {FamilyKind::jordan3, "jordan3"},
}};

template <class Enum, std::size_t N>
std::string_view name_of(const std::array<std::pair<Enum, std::string_view>, N>& table, Enum value) {
  for (const auto& [k, name] : table)
    if (k == value) return name;
  return "?";
}

template <class Enum, std::size_t N>
std::optional<Enum> lookup(const std::array<std::pair<Enum, std::string_view>, N>& table, std::string_view text) {
  for (const auto& [k, name] : table)
    if (name == text) return k;
  return std::nullopt;
}

}  // namespace

std::string_view to_string(PowerKind kind) { return name_of(kPowerKinds, kind); }
std::optional<PowerKind> parse_power_kind(std::string_view text) { return lookup(kPowerKinds, text); }

std::string_view to_string(FamilyKind kind) { return name_of(kFamilyKinds, kind); }
std::optional<FamilyKind> parse_family_kind(std::string_view text) { return lookup(kFamilyKinds, text); }

IdentityShape identity_shape(IdentityId id) {
  switch (id) {
    case IdentityId::bernstein:
      return {"bernstein", "(x^2)^2 = w(x)^2 x^2", {{"x", 4}}, true};
    case IdentityId::jordan:
      return {"jordan", "x(x^2 y) = x^2(xy)", {{"x", 3}, {"y", 1}}, false};
    case IdentityId::cube_weight:
      return {"cube_weight", "x^3 = w(x) x^2", {{"x", 3}}, true};
    case IdentityId::jacobi:
      return {"jacobi", "(xy)z + (yz)x + (zx)y = 0", {{"x", 1}, {"y", 1}, {"z", 1}}, false};
    case IdentityId::cube_zero:
      return {"cube_zero", "x^3 = 0", {{"x", 3}}, false};
    case IdentityId::square_square_zero:
      return {"square_square_zero", "(x^2)^2 = 0", {{"x", 4}}, false};
  }
  return {"?", "?", {}, false};
}

std::string_view to_string(IdentityId id) { return identity_shape(id).name; }

std::optional<IdentityId> parse_identity(std::string_view text) {
  for (IdentityId id : kAllIdentities)
    if (to_string(id) == text) return id;
  return std::nullopt;
}

}  // namespace bernalg
