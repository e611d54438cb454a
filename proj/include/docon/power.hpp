#pragma once

#include <cstddef>

#include "docon/bin.hpp"
#include "docon/instance.hpp"

namespace docon {

struct PowerStats {
  std::size_t squarings = 0;
  std::size_t multiplications = 0;
};

/// xⁿ in a monoid by the binary method: the exponent is coded with to_bin and
/// scanned from its highest bit, squaring once per lower bit and multiplying
/// by x on each set bit. x⁰ is the identity (also for x = 0).
template <class T>
T power(const StructureInstance<T>& m, const T& x, const Nat& n, PowerStats* stats = nullptr) {
  if (family(m.kind) != Family::Magma || !is_a(m.kind, Kind::Monoid))
    throw MismatchError(m.name + ": power needs a monoid, got " + std::string(kind_name(m.kind)));
  validate(m);
  const Bin code = to_bin(n);
  if (code.bits.empty()) return *m.ops.identity;
  T acc = x;
  for (std::size_t i = code.bits.size() - 1; i-- > 0;) {
    acc = m.ops.op(acc, acc);
    if (stats) ++stats->squarings;
    if (code.bits[i]) {
      acc = m.ops.op(acc, x);
      if (stats) ++stats->multiplications;
    }
  }
  return acc;
}

}  // namespace docon
