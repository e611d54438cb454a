#pragma once

#include <memory>

#include "docon/euclid.hpp"
#include "docon/instance.hpp"
#include "docon/nat.hpp"
#include "docon/witnesses.hpp"

namespace docon {

std::shared_ptr<const DSet<Int>> int_dset();

/// Euclidean division on ℤ with non-negative remainder: 0 ≤ r < |b|.
/// Throws DivisionByZero for b = 0.
std::pair<Int, Int> int_div_mod(const Int& a, const Int& b);

Int int_gcd(const Int& a, const Int& b);

/// Integer square root ⌊√n⌋ of a non-negative n.
Int isqrt(const Int& n);

/// Trial division up to ⌊√|n|⌋. Composite verdicts carry the smallest
/// factor d > 1 with n = d·q. Throws DomainError for |n| ≤ 1.
PrimalityCert<Int> is_prime(const Int& n);

/// Re-checks a certificate: the factor witness for composites, a fresh trial
/// division for primes.
bool verify_primality(const PrimalityCert<Int>& cert);

/// ℤ as a EuclideanRing (norm = |x|), with canonical associates (|x|),
/// a unit test and the trial-division primality procedure.
const StructureInstance<Int>& int_ring();

/// ℤ under addition (CommutativeGroup).
StructureInstance<Int> int_additive_group();

/// ℤ/(b) and ℤ/(p) built on int_ring().
StructureInstance<Residue<Int>> int_residue_ring(const Int& b);
StructureInstance<Residue<Int>> int_residue_field(const Int& p);

}  // namespace docon

#include "docon/certlists.hpp"

namespace docon {

/// The usual order on ℤ.
DecTotalOrder<Int> int_order();

}  // namespace docon
