#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace docon {

/// The closed tower of algebraic structures. Magma-side kinds use a single
/// operation (`op`); ring-side kinds use `add` and `mul`.
enum class Kind {
  Magma,
  Semigroup,
  CommutativeSemigroup,
  Monoid,
  CommutativeMonoid,
  CCMonoid,
  FactorizationMonoid,
  Group,
  CommutativeGroup,
  Ringoid,
  Ring,
  RingWithOne,
  CommutativeRing,
  IntegralRing,
  GCDRing,
  EuclideanRing,
  FactorizationRing,
  UniqueFactorizationRing,
  Field,
};

enum class Family { Magma, Ring };

/// Operation slots an instance may fill.
enum class OpSlot {
  Op,
  Identity,
  Inverse,
  Add,
  Zero,
  Neg,
  Mul,
  One,
  Recip,
  Gcd,
  ExactQuotient,
  DivMod,
  Norm,
  CanonicalUnit,
  IsUnit,
  Factor,
  IsPrime,
  PrimeSplit,
};

std::string_view kind_name(Kind k);
std::optional<Kind> parse_kind(std::string_view name);
std::string_view slot_name(OpSlot s);
const std::vector<Kind>& all_kinds();

Family family(Kind k);
const std::vector<Kind>& parents(Kind k);

/// True when `k` is `ancestor` or lies below it in the tower.
bool is_a(Kind k, Kind ancestor);

/// Slots the kind must fill, including those inherited from its ancestors.
std::vector<OpSlot> required_slots(Kind k);
/// Required slots plus the optional helpers the kind tolerates.
std::vector<OpSlot> allowed_slots(Kind k);

}  // namespace docon
