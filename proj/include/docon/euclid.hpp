#pragma once

// Algorithms generic over any EuclideanRing instance: division with
// remainder, the extended gcd with its Bézout certificate, the constructive
// prime-split, and the residue ring / residue field constructors.

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "docon/errors.hpp"
#include "docon/instance.hpp"
#include "docon/rng.hpp"
#include "docon/witnesses.hpp"

namespace docon {

/// u·a + v·b ≈ g with a ≈ qa·g and b ≈ qb·g.
template <class T>
struct BezoutCertificate {
  T g;
  T u;
  T v;
  T qa;
  T qb;
};

/// Raised when a residue field is requested for a composite modulus; carries
/// the factor witness that shows the modulus is not prime.
template <class T>
class CompositeModulus : public Error {
 public:
  CompositeModulus(DividesWitness<T> witness, const std::string& what)
      : Error(ErrorCode::NotPrime, what), witness_(std::move(witness)) {}
  const DividesWitness<T>& witness() const noexcept { return witness_; }

 private:
  DividesWitness<T> witness_;
};

namespace detail {

template <class T>
void require_euclidean(const StructureInstance<T>& r) {
  if (family(r.kind) != Family::Ring || !is_a(r.kind, Kind::EuclideanRing))
    throw MismatchError(r.name + ": a EuclideanRing is required, got " + std::string(kind_name(r.kind)));
}

template <class T>
T sub(const StructureInstance<T>& r, const T& x, const T& y) {
  return r.ops.add(x, r.ops.neg(y));
}

}  // namespace detail

/// (q, r) with a ≈ q·b + r and (r ≈ 0 or norm r < norm b).
template <class T>
std::pair<T, T> div_mod(const StructureInstance<T>& r, const T& a, const T& b) {
  detail::require_euclidean(r);
  if (r.eq(b, *r.ops.zero)) throw DivisionByZero("division of " + r.show(a) + " by zero in " + r.name);
  return r.ops.div_mod(a, b);
}

/// Unit test: the instance's own predicate when it has one, otherwise
/// "nonzero with the norm of one".
template <class T>
bool is_unit(const StructureInstance<T>& r, const T& x) {
  if (r.ops.is_unit) return r.ops.is_unit(x);
  if (r.eq(x, *r.ops.zero)) return false;
  return r.ops.norm(x) <= r.ops.norm(*r.ops.one);
}

template <class T>
bool check_divides(const StructureInstance<T>& r, const DividesWitness<T>& w) {
  return r.eq(w.dividend, r.ops.mul(w.divisor, w.quotient));
}

/// Extended Euclidean algorithm. Terminates because the remainder norm
/// strictly decreases; a ring whose div_mod breaks that contract gets a
/// DomainError rather than a loop. gcd(0, 0) = 0 with u = 1, v = 0. When the
/// ring supplies canonical_unit, g is its canonical associate (non-negative for ℤ).
template <class T>
BezoutCertificate<T> extended_gcd(const StructureInstance<T>& r, const T& a, const T& b) {
  detail::require_euclidean(r);
  const T& zero = *r.ops.zero;
  const T& one = *r.ops.one;
  T r0 = a, r1 = b;
  T s0 = one, s1 = zero;
  T t0 = zero, t1 = one;
  while (!r.eq(r1, zero)) {
    auto [q, rem] = r.ops.div_mod(r0, r1);
    if (!r.eq(rem, zero) && !(r.ops.norm(rem) < r.ops.norm(r1)))
      throw DomainError(r.name + ": div_mod remainder norm did not decrease");
    T s2 = detail::sub(r, s0, r.ops.mul(q, s1));
    T t2 = detail::sub(r, t0, r.ops.mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  BezoutCertificate<T> cert{r0, s0, t0, zero, zero};
  if (r.ops.canonical_unit && !r.eq(cert.g, zero)) {
    T c = r.ops.canonical_unit(cert.g);
    cert.g = r.ops.mul(c, cert.g);
    cert.u = r.ops.mul(c, cert.u);
    cert.v = r.ops.mul(c, cert.v);
  }
  if (!r.eq(cert.g, zero)) {
    cert.qa = r.ops.div_mod(a, cert.g).first;
    cert.qb = r.ops.div_mod(b, cert.g).first;
  }
  return cert;
}

/// Re-checks all certificate invariants against the inputs.
template <class T>
bool verify_bezout(const StructureInstance<T>& r, const T& a, const T& b, const BezoutCertificate<T>& c) {
  const auto& mul = r.ops.mul;
  const T& zero = *r.ops.zero;
  if (!r.eq(r.ops.add(mul(c.u, a), mul(c.v, b)), c.g)) return false;
  if (!r.eq(a, mul(c.qa, c.g)) || !r.eq(b, mul(c.qb, c.g))) return false;
  if (r.eq(c.g, zero) && !(r.eq(a, zero) && r.eq(b, zero))) return false;
  return true;
}

/// Given a prime p and a witness of p | a·b, decides which factor p divides
/// and returns the division for that side. p | a is tested first, so Left
/// wins when p divides both.
///
/// If gcd(p, a) is not a unit it is an associate of p and the Bézout
/// quotient gives a = qa·g. Otherwise u·p + v·a ≈ g (a unit), so
/// b·g ≈ p·(u·b + v·q) where a·b = p·q.
template <class T>
PrimeSplit<T> prime_split(const StructureInstance<T>& r, const T& p, const T& a, const T& b,
                          const DividesWitness<T>& w) {
  detail::require_euclidean(r);
  if (!r.ops.is_prime) throw StructuralError(r.name + ": prime_split needs a primality procedure");
  if (!r.ops.is_prime(p).is_prime()) throw DomainError(r.show(p) + " is not prime");
  const auto& mul = r.ops.mul;
  if (!r.eq(w.divisor, p) || !r.eq(w.dividend, mul(a, b)) || !check_divides(r, w))
    throw DomainError("witness does not show " + r.show(p) + " | " + r.show(a) + "*" + r.show(b));

  const auto cert = extended_gcd(r, p, a);
  if (!is_unit(r, cert.g)) {
    T c = r.ops.div_mod(cert.g, p).first;
    DividesWitness<T> left{p, a, mul(cert.qb, c)};
    if (!check_divides(r, left)) throw DomainError(r.name + ": gcd(p, a) is not an associate of p");
    return PrimeSplit<T>(Left<DividesWitness<T>>{left});
  }
  T g_inv = r.ops.div_mod(*r.ops.one, cert.g).first;
  T q = mul(r.ops.add(mul(cert.u, b), mul(cert.v, w.quotient)), g_inv);
  DividesWitness<T> right{p, b, q};
  if (!check_divides(r, right)) throw DomainError(r.name + ": prime split witness failed to re-check");
  return PrimeSplit<T>(Right<DividesWitness<T>>{right});
}

/// Element of R/(b). Values produced by the ring operations are canonical
/// remainders; `variant` representatives (value + k·b) exist only to exercise
/// congruence and compare equal after reduction.
template <class T>
struct Residue {
  T modulus;
  T value;
};

/// The commutative ring R/(b); b must be nonzero and not a unit.
template <class T>
StructureInstance<Residue<T>> residue_ring(const StructureInstance<T>& ring, const T& b) {
  detail::require_euclidean(ring);
  if (ring.eq(b, *ring.ops.zero)) throw DivisionByZero("residue ring modulo zero");
  if (is_unit(ring, b)) throw DomainError("residue ring modulo the unit " + ring.show(b));
  using Q = Residue<T>;
  auto r = std::make_shared<const StructureInstance<T>>(ring);
  auto reduce = [r, b](const T& x) { return Q{b, r->ops.div_mod(x, b).second}; };

  auto d = std::make_shared<DSet<Q>>();
  d->name = ring.base->name + "/(" + ring.show(b) + ")";
  d->equal = [r, reduce](const Q& x, const Q& y) {
    return r->eq(x.modulus, y.modulus) && r->eq(reduce(x.value).value, reduce(y.value).value);
  };
  d->sample = [r, reduce](std::uint64_t seed, std::size_t count) {
    std::vector<Q> out;
    for (const auto& x : r->base->sample(seed, count)) out.push_back(reduce(x));
    return out;
  };
  if (ring.base->enumerate)
    d->enumerate = [r, reduce](std::size_t bound) {
      std::vector<Q> out;
      std::set<std::string> seen;
      for (const auto& x : r->base->enumerate(bound)) {
        Q q = reduce(x);
        if (seen.insert(r->show(q.value)).second) out.push_back(q);
      }
      return out;
    };
  d->variant = [r, b](const Q& x, std::uint64_t salt) {
    T k = *r->ops.one;
    for (std::uint64_t i = 0; i < salt % 4; ++i) k = r->ops.add(k, *r->ops.one);
    if (salt % 2 == 1) k = r->ops.neg(k);
    return Q{x.modulus, r->ops.add(x.value, r->ops.mul(k, b))};
  };
  d->show = [r, reduce](const Q& x) { return r->show(reduce(x.value).value); };

  StructureInstance<Q> s;
  s.name = d->name;
  s.kind = Kind::CommutativeRing;
  s.base = d;
  s.ops.add = [r, reduce](const Q& x, const Q& y) { return reduce(r->ops.add(x.value, y.value)); };
  s.ops.mul = [r, reduce](const Q& x, const Q& y) { return reduce(r->ops.mul(x.value, y.value)); };
  s.ops.neg = [r, reduce](const Q& x) { return reduce(r->ops.neg(x.value)); };
  s.ops.zero = reduce(*ring.ops.zero);
  s.ops.one = reduce(*ring.ops.one);
  return s;
}

/// R/(b) as a Field, given a primality verdict for b. A composite verdict is
/// rejected with its factor witness. The reciprocal of x comes from the
/// Bézout identity u·x + v·b ≈ g (a unit): x⁻¹ = u·g⁻¹ mod b.
template <class T>
StructureInstance<Residue<T>> residue_field(const StructureInstance<T>& ring, const T& b, const PrimalityCert<T>& cert) {
  detail::require_euclidean(ring);
  if (!ring.eq(cert.subject, b))
    throw DomainError("primality certificate is for " + ring.show(cert.subject) + ", not " + ring.show(b));
  if (!cert.is_prime()) {
    const auto& w = *cert.factor;
    throw CompositeModulus<T>(w, ring.show(b) + " is composite: " + ring.show(w.divisor) + " | " +
                                     ring.show(w.dividend) + " (quotient " + ring.show(w.quotient) + ")");
  }
  if (ring.ops.is_prime && !ring.ops.is_prime(b).is_prime())
    throw DomainError(ring.show(b) + " was certified prime but fails the ring's primality procedure");

  auto s = residue_ring(ring, b);
  s.kind = Kind::Field;
  auto r = std::make_shared<const StructureInstance<T>>(ring);
  s.ops.recip = [r, b](const Residue<T>& x) {
    T v = r->ops.div_mod(x.value, b).second;
    if (r->eq(v, *r->ops.zero)) throw DivisionByZero("inverse of zero in " + r->name + "/(" + r->show(b) + ")");
    auto c = extended_gcd(*r, v, b);
    T g_inv = r->ops.div_mod(*r->ops.one, c.g).first;
    return Residue<T>{b, r->ops.div_mod(r->ops.mul(c.u, g_inv), b).second};
  };
  return s;
}

}  // namespace docon
