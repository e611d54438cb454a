#pragma once

#include <memory>
#include <string>

#include "docon/certlists.hpp"
#include "docon/instance.hpp"
#include "docon/integers.hpp"
#include "docon/laws.hpp"
#include "docon/nat.hpp"
#include "docon/witnesses.hpp"

namespace docon {

/// Trial-division factorization of a nonzero integer. Primes are positive;
/// the unit carries the sign. Throws DomainError for 0.
FactorizationData<Int> factor(const Int& x);
/// Factorization in the multiplicative monoid ℕ \ {0}; throws DomainError for 0.
FactorizationData<Nat> factor(const Nat& x);

Int product_of(const FactorizationData<Int>& f);
Nat product_of(const FactorizationData<Nat>& f);

/// Renders "60 = 2^2 * 3 * 5" style text (sign shown for negative units).
std::string render_factorization(const Int& x, const FactorizationData<Int>& f);

/// ℤ as a UniqueFactorizationRing: ring operations plus factor and prime_split.
/// Both factorization instances sample smooth values (small prime factors)
/// so that trial division stays fast.
const StructureInstance<Int>& int_ufr();
/// ℕ \ {0} under multiplication as a FactorizationMonoid.
const StructureInstance<Nat>& positive_nat_factorization();

/// Multiset of the primes of f, with multiplicities as counts.
template <class T>
Multiset<T> prime_multiset(const StructureInstance<T>& r, const FactorizationData<T>& f) {
  Multiset<T> m(r.base);
  for (const auto& pp : f.factors) m.insert(pp.prime, pp.multiplicity);
  return m;
}

namespace detail {

template <class T>
T unit_inverse(const StructureInstance<T>& r, const T& c) {
  if (r.ops.div_mod) return r.ops.div_mod(r.product_identity(), c).first;
  // Without division the canonical units must be involutions (±1 in ℤ).
  if (!r.eq(r.product()(c, c), r.product_identity()))
    throw StructuralError(r.name + ": cannot invert canonical unit " + r.show(c));
  return c;
}

/// Moves each prime to its canonical associate and folds the compensating
/// unit into f.unit; equal primes are merged.
template <class T>
FactorizationData<T> normalize_associates(const StructureInstance<T>& r, const FactorizationData<T>& f) {
  if (!r.ops.canonical_unit) return f;
  const auto& mul = r.product();
  FactorizationData<T> out{f.unit, {}};
  for (const auto& pp : f.factors) {
    T c = r.ops.canonical_unit(pp.prime);
    T p = mul(c, pp.prime);
    T c_inv = unit_inverse(r, c);
    for (Nat i = 0; i < pp.multiplicity; i += 1) out.unit = mul(out.unit, c_inv);
    auto it = std::find_if(out.factors.begin(), out.factors.end(), [&](const PrimePower<T>& q) { return r.eq(q.prime, p); });
    if (it != out.factors.end())
      it->multiplicity += pp.multiplicity;
    else
      out.factors.push_back({p, pp.multiplicity, pp.cert});
  }
  return out;
}

}  // namespace detail

/// Equal up to order of factors and associates of primes.
template <class T>
bool factorizations_equal(const StructureInstance<T>& r, const FactorizationData<T>& f1, const FactorizationData<T>& f2) {
  const auto a = detail::normalize_associates(r, f1);
  const auto b = detail::normalize_associates(r, f2);
  return r.eq(a.unit, b.unit) && mset_eq(prime_multiset(r, a), prime_multiset(r, b));
}

/// Factorization of x·y assembled from those of x and y: units multiply,
/// prime multisets add.
template <class T>
FactorizationData<T> merge_factorizations(const StructureInstance<T>& r, const FactorizationData<T>& f1,
                                          const FactorizationData<T>& f2) {
  FactorizationData<T> out{r.product()(f1.unit, f2.unit), {}};
  const auto sum = mset_sum(prime_multiset(r, f1), prime_multiset(r, f2));
  auto cert_for = [&](const T& p) -> PrimalityCert<T> {
    for (const auto* f : {&f1, &f2})
      for (const auto& pp : f->factors)
        if (r.eq(pp.prime, p)) return pp.cert;
    return {p, std::nullopt};
  };
  for (const auto& [p, e] : sum.entries()) out.factors.push_back({p, e, cert_for(p)});
  return out;
}

/// Sampled check of unique factorization and its prime-split counterpart:
///   reconstruct  : unit·Π pᵉ ≈ x;
///   unique       : factor(x·y) equals the merge of factor(x) and factor(y);
///   prime-split  : for each prime p of x with p | y·z, prime_split returns a
///                  re-checking division on the correct side.
/// Throws StructuralError when the instance lacks factor or prime_split.
template <class T>
LawReport<T> check_unique_sampled(const StructureInstance<T>& r, std::uint64_t seed, std::size_t budget) {
  if (!r.ops.factor || !r.ops.prime_split)
    throw StructuralError(r.name + ": unique-factorization check needs factor and prime_split");
  LawReport<T> report;
  report.instance = r.name;
  report.kind = r.kind;
  const auto pool = budget == 0 ? std::vector<T>{} : r.base->sample(seed, budget);
  if (pool.empty()) return report;

  const auto& mul = r.product();
  const bool ring_side = family(r.kind) == Family::Ring;
  auto is_zero = [&](const T& x) { return ring_side && r.eq(x, *r.ops.zero); };
  auto guarded = [](auto&& f) {
    try {
      return f();
    } catch (const std::exception&) {
      return false;
    }
  };

  Rng rng(derive_seed(seed, 0xfac7));
  for (std::size_t i = 0; i < budget; ++i) {
    const T& x = pool[i % pool.size()];
    const T& y = pool[rng.below(pool.size())];
    const T& z = pool[rng.below(pool.size())];
    ++report.cases;
    if (is_zero(x)) continue;

    report.checks += 1;
    if (!guarded([&] { return r.eq(product_of(r, r.ops.factor(x)), x); }))
      report.failures.push_back({"reconstruct", {x}});

    if (!is_zero(y)) {
      report.checks += 1;
      if (!guarded([&] {
            return factorizations_equal(r, r.ops.factor(mul(x, y)),
                                        merge_factorizations(r, r.ops.factor(x), r.ops.factor(y)));
          }))
        report.failures.push_back({"unique", {x, y}});
    }

    if (is_zero(y) || is_zero(z)) continue;
    const T yz = mul(y, z);
    const auto fyz = r.ops.factor(yz);
    for (const auto& pp : r.ops.factor(x).factors) {
      auto it = std::find_if(fyz.factors.begin(), fyz.factors.end(),
                             [&](const PrimePower<T>& q) { return r.eq(q.prime, pp.prime); });
      if (it == fyz.factors.end()) continue;
      report.checks += 1;
      FactorizationData<T> rest = fyz;
      auto& m = rest.factors[static_cast<std::size_t>(it - fyz.factors.begin())].multiplicity;
      m = monus(m, Nat(1));
      const DividesWitness<T> w{pp.prime, yz, product_of(r, rest)};
      const bool ok = guarded([&] {
        auto split = r.ops.prime_split(pp.prime, y, z, w);
        const auto& side = split.is_left() ? split.left() : split.right();
        const T& expected = split.is_left() ? y : z;
        return r.eq(side.divisor, pp.prime) && r.eq(side.dividend, expected) && r.eq(expected, mul(pp.prime, side.quotient));
      });
      if (!ok) report.failures.push_back({"prime-split", {pp.prime, y, z}});
    }
  }
  return report;
}

}  // namespace docon
