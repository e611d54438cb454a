#include "docon/kinds.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace docon {

namespace {

struct KindInfo {
  Kind kind;
  std::string_view name;
  Family family;
  std::vector<Kind> parents;
  std::vector<OpSlot> own_required;
  std::vector<OpSlot> own_optional;
};

const std::vector<KindInfo>& table() {
  using K = Kind;
  using S = OpSlot;
  static const std::vector<KindInfo> t = {
      {K::Magma, "Magma", Family::Magma, {}, {S::Op}, {}},
      {K::Semigroup, "Semigroup", Family::Magma, {K::Magma}, {}, {}},
      {K::CommutativeSemigroup, "CommutativeSemigroup", Family::Magma, {K::Semigroup}, {}, {}},
      {K::Monoid, "Monoid", Family::Magma, {K::Semigroup}, {S::Identity}, {}},
      {K::CommutativeMonoid, "CommutativeMonoid", Family::Magma, {K::Monoid, K::CommutativeSemigroup}, {}, {}},
      {K::CCMonoid, "CCMonoid", Family::Magma, {K::CommutativeMonoid}, {}, {}},
      {K::FactorizationMonoid, "FactorizationMonoid", Family::Magma, {K::CCMonoid}, {S::Factor},
       {S::IsPrime, S::PrimeSplit}},
      {K::Group, "Group", Family::Magma, {K::Monoid}, {S::Inverse}, {}},
      {K::CommutativeGroup, "CommutativeGroup", Family::Magma, {K::Group, K::CommutativeMonoid}, {}, {}},
      {K::Ringoid, "Ringoid", Family::Ring, {}, {S::Add, S::Zero, S::Neg, S::Mul}, {}},
      {K::Ring, "Ring", Family::Ring, {K::Ringoid}, {}, {}},
      {K::RingWithOne, "RingWithOne", Family::Ring, {K::Ring}, {S::One}, {}},
      {K::CommutativeRing, "CommutativeRing", Family::Ring, {K::RingWithOne}, {}, {}},
      {K::IntegralRing, "IntegralRing", Family::Ring, {K::CommutativeRing}, {},
       {S::CanonicalUnit, S::IsUnit, S::IsPrime}},
      {K::GCDRing, "GCDRing", Family::Ring, {K::IntegralRing}, {S::Gcd, S::ExactQuotient}, {}},
      {K::EuclideanRing, "EuclideanRing", Family::Ring, {K::IntegralRing}, {S::DivMod, S::Norm}, {}},
      {K::FactorizationRing, "FactorizationRing", Family::Ring, {K::IntegralRing}, {S::Factor}, {}},
      {K::UniqueFactorizationRing, "UniqueFactorizationRing", Family::Ring, {K::FactorizationRing},
       {S::PrimeSplit}, {}},
      {K::Field, "Field", Family::Ring, {K::IntegralRing}, {S::Recip}, {}},
  };
  return t;
}

const KindInfo& info(Kind k) {
  const auto& t = table();
  return *std::find_if(t.begin(), t.end(), [k](const KindInfo& i) { return i.kind == k; });
}

void collect(Kind k, std::set<Kind>& seen) {
  if (!seen.insert(k).second) return;
  for (Kind p : info(k).parents) collect(p, seen);
}

}  // namespace

std::string_view kind_name(Kind k) { return info(k).name; }

std::optional<Kind> parse_kind(std::string_view name) {
  for (const auto& i : table())
    if (i.name == name) return i.kind;
  return std::nullopt;
}

std::string_view slot_name(OpSlot s) {
  static constexpr std::array<std::string_view, 18> names = {
      "op",  "identity", "inverse", "add",           "zero",   "neg",    "mul",     "one",     "recip",
      "gcd", "exactQuotient", "divMod", "norm", "canonicalUnit", "isUnit", "factor", "isPrime", "primeSplit"};
  return names[static_cast<std::size_t>(s)];
}

const std::vector<Kind>& all_kinds() {
  static const std::vector<Kind> ks = [] {
    std::vector<Kind> out;
    for (const auto& i : table()) out.push_back(i.kind);
    return out;
  }();
  return ks;
}

Family family(Kind k) { return info(k).family; }

const std::vector<Kind>& parents(Kind k) { return info(k).parents; }

bool is_a(Kind k, Kind ancestor) {
  std::set<Kind> seen;
  collect(k, seen);
  return seen.count(ancestor) != 0;
}

std::vector<OpSlot> required_slots(Kind k) {
  std::set<Kind> seen;
  collect(k, seen);
  std::set<OpSlot> slots;
  for (Kind a : seen)
    for (OpSlot s : info(a).own_required) slots.insert(s);
  return {slots.begin(), slots.end()};
}

std::vector<OpSlot> allowed_slots(Kind k) {
  std::set<Kind> seen;
  collect(k, seen);
  std::set<OpSlot> slots;
  for (Kind a : seen) {
    for (OpSlot s : info(a).own_required) slots.insert(s);
    for (OpSlot s : info(a).own_optional) slots.insert(s);
  }
  return {slots.begin(), slots.end()};
}

}  // namespace docon
