#include "docon/integers.hpp"

#include <limits>

#include "docon/errors.hpp"
#include "docon/rng.hpp"

namespace docon {

namespace {

std::vector<Int> sample_ints(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::vector<Int> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    switch (rng.below(4)) {
      case 0: out.emplace_back(rng.range(-3, 3)); break;
      case 1: out.emplace_back(rng.range(-60, 60)); break;
      case 2: out.push_back(random_int(rng, 32)); break;
      default: out.push_back(random_int(rng, 1 + static_cast<unsigned>(rng.below(128)))); break;
    }
  }
  return out;
}

bool fits_u64(const Int& n) { return n.sign() >= 0 && n <= std::numeric_limits<std::uint64_t>::max(); }

// Smallest divisor d with 1 < d ≤ ⌊√m⌋, or 0 when m is prime.
Int smallest_factor(const Int& m) {
  if (fits_u64(m)) {
    const auto v = static_cast<std::uint64_t>(m);
    if (v % 2 == 0) return v == 2 ? Int(0) : Int(2);
    for (std::uint64_t d = 3; d <= v / d; d += 2)
      if (v % d == 0) return Int(d);
    return 0;
  }
  if (!boost::multiprecision::bit_test(m, 0)) return 2;
  const Int root = isqrt(m);
  for (Int d = 3; d <= root; d += 2)
    if (m % d == 0) return d;
  return 0;
}

}  // namespace

std::shared_ptr<const DSet<Int>> int_dset() {
  static const std::shared_ptr<const DSet<Int>> d = [] {
    auto s = std::make_shared<DSet<Int>>();
    s->name = "Z";
    s->equal = [](const Int& a, const Int& b) { return a == b; };
    s->sample = sample_ints;
    s->enumerate = [](std::size_t bound) {
      std::vector<Int> out;
      const auto b = static_cast<long long>(bound);
      for (long long i = -b; i <= b; ++i) out.emplace_back(i);
      return out;
    };
    s->show = [](const Int& x) { return x.str(); };
    return s;
  }();
  return d;
}

std::pair<Int, Int> int_div_mod(const Int& a, const Int& b) {
  if (b.is_zero()) throw DivisionByZero("integer division by zero");
  Int q = a / b;
  Int r = a % b;
  if (r.sign() < 0) {
    if (b.sign() > 0) {
      r += b;
      q -= 1;
    } else {
      r -= b;
      q += 1;
    }
  }
  return {q, r};
}

Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

Int isqrt(const Int& n) {
  if (n.sign() < 0) throw DomainError("square root of a negative number");
  return boost::multiprecision::sqrt(n);
}

PrimalityCert<Int> is_prime(const Int& n) {
  const Int m = abs(n);
  if (m <= 1) throw DomainError("primality is undefined for " + n.str() + " (|n| <= 1)");
  PrimalityCert<Int> cert{n, std::nullopt};
  Int d = smallest_factor(m);
  if (!d.is_zero()) cert.factor = DividesWitness<Int>{d, n, n / d};
  return cert;
}

bool verify_primality(const PrimalityCert<Int>& cert) {
  const Int m = abs(cert.subject);
  if (m <= 1) return false;
  if (cert.factor) {
    const auto& w = *cert.factor;
    const Int d = abs(w.divisor);
    return w.dividend == cert.subject && w.divisor * w.quotient == w.dividend && d > 1 && d < m;
  }
  return smallest_factor(m).is_zero();
}

const StructureInstance<Int>& int_ring() {
  static const StructureInstance<Int> z = [] {
    StructureInstance<Int> s;
    s.name = "int";
    s.kind = Kind::EuclideanRing;
    s.base = int_dset();
    s.ops.add = [](const Int& a, const Int& b) { return Int(a + b); };
    s.ops.mul = [](const Int& a, const Int& b) { return Int(a * b); };
    s.ops.neg = [](const Int& a) { return Int(-a); };
    s.ops.zero = Int(0);
    s.ops.one = Int(1);
    s.ops.div_mod = int_div_mod;
    s.ops.norm = [](const Int& a) { return Nat(Int(abs(a))); };
    s.ops.canonical_unit = [](const Int& a) { return Int(a.sign() < 0 ? -1 : 1); };
    s.ops.is_unit = [](const Int& a) { return a == 1 || a == -1; };
    s.ops.is_prime = [](const Int& a) { return is_prime(a); };
    return s;
  }();
  return z;
}

StructureInstance<Int> int_additive_group() {
  auto g = additive_group(int_ring());
  g.name = "int-add";
  return g;
}

StructureInstance<Residue<Int>> int_residue_ring(const Int& b) {
  auto s = residue_ring(int_ring(), b);
  s.name = "zmod" + b.str();
  return s;
}

StructureInstance<Residue<Int>> int_residue_field(const Int& p) {
  const Int m = abs(p);
  if (m <= 1) throw DomainError("residue field modulo " + p.str());
  auto s = residue_field(int_ring(), p, is_prime(p));
  s.name = "gf" + p.str();
  return s;
}

}  // namespace docon

namespace docon {

DecTotalOrder<Int> int_order() {
  return {int_dset(), [](const Int& a, const Int& b) { return decide(a <= b, "<=", ">"); }};
}

}  // namespace docon
