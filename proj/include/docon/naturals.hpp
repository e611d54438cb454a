#pragma once

#include <memory>

#include "docon/bin.hpp"
#include "docon/instance.hpp"
#include "docon/nat.hpp"

namespace docon {

/// ℕ with decidable equality; samples mix small values with wide random ones.
std::shared_ptr<const DSet<Nat>> nat_dset();
/// ℕ \ {0}.
std::shared_ptr<const DSet<Nat>> positive_nat_dset();

StructureInstance<Nat> nat_additive();        // CommutativeMonoid (+, 0)
StructureInstance<Nat> nat_multiplicative();  // CommutativeMonoid (*, 1)
StructureInstance<Nat> positive_nat_multiplicative();  // CCMonoid (*, 1) on ℕ \ {0}
/// ℕ under truncated subtraction, claimed as a Semigroup. It is not one; this
/// is the negative control for the law checker.
StructureInstance<Nat> nat_monus();

/// Canonical Bin codes under bit-level addition (CommutativeMonoid).
StructureInstance<Bin> bin_additive();

}  // namespace docon
