#include "docon/factorization.hpp"

#include <limits>

#include "docon/errors.hpp"
#include "docon/naturals.hpp"
#include "docon/rng.hpp"

namespace docon {

namespace {

void push_prime(FactorizationData<Int>& f, const Int& p, unsigned e) {
  f.factors.push_back({p, Nat(e), is_prime(p)});
}

// Products of a few primes below 1000, at most one of them up to 10^6.
// Trial division on such values (and on their products) stops early.
Int smooth_value(Rng& rng) {
  static const std::vector<std::uint64_t> small = [] {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t n = 2; n < 1000; ++n) {
      bool prime = true;
      for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) prime = false;
      if (prime) ps.push_back(n);
    }
    return ps;
  }();
  Int v = 1;
  const auto k = rng.below(6);
  for (std::uint64_t i = 0; i < k; ++i) v *= small[rng.below(rng.coin() ? 10 : small.size())];
  if (rng.below(4) == 0) {
    std::uint64_t big = 1000 + rng.below(999000);
    while (!is_prime(Int(big)).is_prime()) ++big;
    v *= big;
  }
  return v;
}

template <class T>
std::shared_ptr<const DSet<T>> smooth_dset(std::shared_ptr<const DSet<T>> base, bool with_sign) {
  auto d = std::make_shared<DSet<T>>(*base);
  d->name = base->name + " (smooth)";
  d->sample = [with_sign](std::uint64_t seed, std::size_t count) {
    Rng rng(derive_seed(seed, 0x5300));
    std::vector<T> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      Int v = smooth_value(rng);
      if (with_sign) {
        if (rng.below(3) == 0) v = -v;
        if (rng.below(20) == 0) v = 0;
      }
      out.push_back(T(v));
    }
    return out;
  };
  return d;
}

}  // namespace

FactorizationData<Int> factor(const Int& x) {
  if (x.is_zero()) throw DomainError("cannot factor 0");
  FactorizationData<Int> f{Int(x.sign() < 0 ? -1 : 1), {}};
  Int m = abs(x);
  if (m <= std::numeric_limits<std::uint64_t>::max()) {
    auto v = static_cast<std::uint64_t>(m);
    for (std::uint64_t d = 2; d <= v / d; d += (d == 2 ? 1 : 2)) {
      unsigned e = 0;
      while (v % d == 0) {
        v /= d;
        ++e;
      }
      if (e) push_prime(f, Int(d), e);
    }
    if (v > 1) push_prime(f, Int(v), 1);
    return f;
  }
  for (Int d = 2; d * d <= m; d += (d == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    if (e) push_prime(f, d, e);
  }
  if (m > 1) push_prime(f, m, 1);
  return f;
}

FactorizationData<Nat> factor(const Nat& x) {
  if (x.is_zero()) throw DomainError("cannot factor 0 in N\\0");
  const auto fi = factor(x.value());
  FactorizationData<Nat> f{Nat(1), {}};
  for (const auto& pp : fi.factors) {
    PrimalityCert<Nat> cert{Nat(pp.prime), std::nullopt};
    f.factors.push_back({Nat(pp.prime), pp.multiplicity, cert});
  }
  return f;
}

Int product_of(const FactorizationData<Int>& f) { return product_of(int_ring(), f); }

Nat product_of(const FactorizationData<Nat>& f) {
  Nat acc = f.unit;
  for (const auto& pp : f.factors)
    for (Nat i = 0; i < pp.multiplicity; i += 1) acc = acc * pp.prime;
  return acc;
}

std::string render_factorization(const Int& x, const FactorizationData<Int>& f) {
  std::string s = x.str() + " = ";
  if (f.factors.empty()) return s + f.unit.str();
  if (f.unit < 0) s += "-";
  bool first = true;
  for (const auto& pp : f.factors) {
    if (!first) s += " * ";
    first = false;
    s += pp.prime.str();
    if (pp.multiplicity != Nat(1)) s += "^" + pp.multiplicity.str();
  }
  return s;
}

const StructureInstance<Int>& int_ufr() {
  static const StructureInstance<Int> z = [] {
    auto s = view_as(int_ring(), Kind::IntegralRing);
    s.name = "int-ufr";
    s.base = smooth_dset(int_dset(), true);
    s.kind = Kind::UniqueFactorizationRing;
    s.ops.factor = [](const Int& x) { return factor(x); };
    s.ops.prime_split = [](const Int& p, const Int& a, const Int& b, const DividesWitness<Int>& w) {
      return prime_split(int_ring(), p, a, b, w);
    };
    return s;
  }();
  return z;
}

const StructureInstance<Nat>& positive_nat_factorization() {
  static const StructureInstance<Nat> n = [] {
    auto s = positive_nat_multiplicative();
    s.name = "nat-pos-factor";
    s.base = smooth_dset(positive_nat_dset(), false);
    s.kind = Kind::FactorizationMonoid;
    s.ops.factor = [](const Nat& x) { return factor(x); };
    s.ops.is_prime = [](const Nat& x) {
      const auto c = is_prime(x.value());
      PrimalityCert<Nat> out{x, std::nullopt};
      if (c.factor) out.factor = DividesWitness<Nat>{Nat(c.factor->divisor), x, Nat(c.factor->quotient)};
      return out;
    };
    // Routed through ℤ: all quotients of positive naturals stay positive.
    s.ops.prime_split = [](const Nat& p, const Nat& a, const Nat& b, const DividesWitness<Nat>& w) {
      const DividesWitness<Int> wi{p.value(), w.dividend.value(), w.quotient.value()};
      const auto split = prime_split(int_ring(), p.value(), a.value(), b.value(), wi);
      auto back = [](const DividesWitness<Int>& d) {
        return DividesWitness<Nat>{Nat(d.divisor), Nat(d.dividend), Nat(d.quotient)};
      };
      if (split.is_left()) return PrimeSplit<Nat>(Left<DividesWitness<Nat>>{back(split.left())});
      return PrimeSplit<Nat>(Right<DividesWitness<Nat>>{back(split.right())});
    };
    return s;
  }();
  return n;
}

}  // namespace docon
