#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "docon/dset.hpp"
#include "docon/errors.hpp"
#include "docon/kinds.hpp"
#include "docon/witnesses.hpp"

namespace docon {

/// Operation slots. Which ones are filled is dictated by the instance kind
/// (see required_slots / allowed_slots).
template <class T>
struct Operations {
  using Binary = std::function<T(const T&, const T&)>;
  using Unary = std::function<T(const T&)>;

  Binary op;
  std::optional<T> identity;
  Unary inverse;

  Binary add;
  std::optional<T> zero;
  Unary neg;
  Binary mul;
  std::optional<T> one;
  Unary recip;

  Binary gcd;
  /// exact_quotient(m, d) is q with m ≈ d·q when d divides m.
  std::function<std::optional<T>(const T&, const T&)> exact_quotient;
  std::function<std::pair<T, T>(const T&, const T&)> div_mod;
  std::function<Nat(const T&)> norm;
  /// A unit u such that u·x is the canonical associate of x.
  Unary canonical_unit;
  std::function<bool(const T&)> is_unit;

  std::function<FactorizationData<T>(const T&)> factor;
  std::function<PrimalityCert<T>(const T&)> is_prime;
  std::function<PrimeSplit<T>(const T&, const T&, const T&, const DividesWitness<T>&)> prime_split;

  bool has(OpSlot s) const {
    switch (s) {
      case OpSlot::Op: return static_cast<bool>(op);
      case OpSlot::Identity: return identity.has_value();
      case OpSlot::Inverse: return static_cast<bool>(inverse);
      case OpSlot::Add: return static_cast<bool>(add);
      case OpSlot::Zero: return zero.has_value();
      case OpSlot::Neg: return static_cast<bool>(neg);
      case OpSlot::Mul: return static_cast<bool>(mul);
      case OpSlot::One: return one.has_value();
      case OpSlot::Recip: return static_cast<bool>(recip);
      case OpSlot::Gcd: return static_cast<bool>(gcd);
      case OpSlot::ExactQuotient: return static_cast<bool>(exact_quotient);
      case OpSlot::DivMod: return static_cast<bool>(div_mod);
      case OpSlot::Norm: return static_cast<bool>(norm);
      case OpSlot::CanonicalUnit: return static_cast<bool>(canonical_unit);
      case OpSlot::IsUnit: return static_cast<bool>(is_unit);
      case OpSlot::Factor: return static_cast<bool>(factor);
      case OpSlot::IsPrime: return static_cast<bool>(is_prime);
      case OpSlot::PrimeSplit: return static_cast<bool>(prime_split);
    }
    return false;
  }

  void clear(OpSlot s) {
    switch (s) {
      case OpSlot::Op: op = nullptr; break;
      case OpSlot::Identity: identity.reset(); break;
      case OpSlot::Inverse: inverse = nullptr; break;
      case OpSlot::Add: add = nullptr; break;
      case OpSlot::Zero: zero.reset(); break;
      case OpSlot::Neg: neg = nullptr; break;
      case OpSlot::Mul: mul = nullptr; break;
      case OpSlot::One: one.reset(); break;
      case OpSlot::Recip: recip = nullptr; break;
      case OpSlot::Gcd: gcd = nullptr; break;
      case OpSlot::ExactQuotient: exact_quotient = nullptr; break;
      case OpSlot::DivMod: div_mod = nullptr; break;
      case OpSlot::Norm: norm = nullptr; break;
      case OpSlot::CanonicalUnit: canonical_unit = nullptr; break;
      case OpSlot::IsUnit: is_unit = nullptr; break;
      case OpSlot::Factor: factor = nullptr; break;
      case OpSlot::IsPrime: is_prime = nullptr; break;
      case OpSlot::PrimeSplit: prime_split = nullptr; break;
    }
  }
};

inline constexpr OpSlot kAllSlots[] = {
    OpSlot::Op,     OpSlot::Identity,      OpSlot::Inverse,       OpSlot::Add,    OpSlot::Zero,
    OpSlot::Neg,    OpSlot::Mul,           OpSlot::One,           OpSlot::Recip,  OpSlot::Gcd,
    OpSlot::ExactQuotient, OpSlot::DivMod, OpSlot::Norm,          OpSlot::CanonicalUnit,
    OpSlot::IsUnit, OpSlot::Factor,        OpSlot::IsPrime,       OpSlot::PrimeSplit};

/// One level of the tower over carrier T: a kind, its base DSet, and the
/// operations the kind calls for. Immutable once built; share via
/// std::shared_ptr<const StructureInstance<T>>.
template <class T>
struct StructureInstance {
  std::string name;
  Kind kind = Kind::Magma;
  std::shared_ptr<const DSet<T>> base;
  Operations<T> ops;

  bool eq(const T& x, const T& y) const { return base->equal(x, y); }
  std::string show(const T& x) const { return base->show(x); }

  /// The "multiplication" of the structure: `op` on the magma side, `mul` on the ring side.
  const typename Operations<T>::Binary& product() const {
    return family(kind) == Family::Ring ? ops.mul : ops.op;
  }
  /// Neutral element of product().
  const T& product_identity() const {
    const auto& e = family(kind) == Family::Ring ? ops.one : ops.identity;
    if (!e) throw StructuralError(name + ": no multiplicative identity");
    return *e;
  }
};

template <class T>
using InstancePtr = std::shared_ptr<const StructureInstance<T>>;

/// Throws StructuralError unless the filled slots match the kind's signature.
template <class T>
void validate(const StructureInstance<T>& inst) {
  if (!inst.base || !inst.base->equal || !inst.base->sample || !inst.base->show)
    throw StructuralError(inst.name + ": base DSet is incomplete");
  for (OpSlot s : required_slots(inst.kind))
    if (!inst.ops.has(s))
      throw StructuralError(inst.name + ": kind " + std::string(kind_name(inst.kind)) + " requires operation '" +
                            std::string(slot_name(s)) + "'");
  const auto allowed = allowed_slots(inst.kind);
  for (OpSlot s : kAllSlots) {
    if (!inst.ops.has(s)) continue;
    if (std::find(allowed.begin(), allowed.end(), s) == allowed.end())
      throw StructuralError(inst.name + ": operation '" + std::string(slot_name(s)) + "' is not part of kind " +
                            std::string(kind_name(inst.kind)));
  }
}

/// Up-cast to an ancestor kind of the same family, dropping the operations
/// the target kind does not know about.
template <class T>
StructureInstance<T> view_as(const StructureInstance<T>& inst, Kind target) {
  if (!is_a(inst.kind, target))
    throw MismatchError(inst.name + ": " + std::string(kind_name(inst.kind)) + " cannot be viewed as " +
                        std::string(kind_name(target)));
  StructureInstance<T> out = inst;
  out.kind = target;
  const auto allowed = allowed_slots(target);
  for (OpSlot s : kAllSlots)
    if (std::find(allowed.begin(), allowed.end(), s) == allowed.end()) out.ops.clear(s);
  return out;
}

/// The additive commutative group (add, zero, neg) of a ring-side instance.
template <class T>
StructureInstance<T> additive_group(const StructureInstance<T>& ring) {
  if (family(ring.kind) != Family::Ring) throw MismatchError(ring.name + ": not a ring-side instance");
  StructureInstance<T> out;
  out.name = ring.name + "(+)";
  out.kind = Kind::CommutativeGroup;
  out.base = ring.base;
  out.ops.op = ring.ops.add;
  out.ops.identity = ring.ops.zero;
  out.ops.inverse = ring.ops.neg;
  return out;
}

/// The multiplicative monoid (mul, one) of a ring with one; commutative when the ring is.
template <class T>
StructureInstance<T> multiplicative_monoid(const StructureInstance<T>& ring) {
  if (!is_a(ring.kind, Kind::RingWithOne)) throw MismatchError(ring.name + ": not a ring with one");
  StructureInstance<T> out;
  out.name = ring.name + "(*)";
  out.kind = is_a(ring.kind, Kind::CommutativeRing) ? Kind::CommutativeMonoid : Kind::Monoid;
  out.base = ring.base;
  out.ops.op = ring.ops.mul;
  out.ops.identity = ring.ops.one;
  return out;
}

}  // namespace docon

namespace docon {

/// unit · Π primeᵉ evaluated with the instance's multiplication.
template <class T>
T product_of(const StructureInstance<T>& inst, const FactorizationData<T>& f) {
  const auto& mul = inst.product();
  T acc = f.unit;
  for (const auto& pp : f.factors)
    for (Nat i = 0; i < pp.multiplicity; i += 1) acc = mul(acc, pp.prime);
  return acc;
}

}  // namespace docon
