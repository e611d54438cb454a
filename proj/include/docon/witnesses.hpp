#pragma once

// Certificate records shared by the arithmetic modules. They are plain data;
// the functions that produce and re-check them live with their algorithms.

#include <optional>
#include <vector>

#include "docon/decision.hpp"
#include "docon/nat.hpp"

namespace docon {

/// Evidence that `divisor` divides `dividend`: dividend ≈ divisor · quotient.
template <class T>
struct DividesWitness {
  T divisor;
  T dividend;
  T quotient;
};

/// Verdict of a primality procedure. A composite verdict carries a proper
/// factor together with the division that exhibits it.
template <class T>
struct PrimalityCert {
  T subject;
  std::optional<DividesWitness<T>> factor;

  bool is_prime() const noexcept { return !factor.has_value(); }
};

template <class T>
struct PrimePower {
  T prime;
  Nat multiplicity;
  PrimalityCert<T> cert;
};

/// unit · Π primeᵉ, primes pairwise non-associate.
template <class T>
struct FactorizationData {
  T unit;
  std::vector<PrimePower<T>> factors;
};

/// Which side of a product a prime divides.
template <class T>
using PrimeSplit = Either<DividesWitness<T>, DividesWitness<T>>;

}  // namespace docon
