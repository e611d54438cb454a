#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "docon/instance.hpp"
#include "docon/rng.hpp"

namespace docon {

/// A single executable law: a predicate over an `arity`-tuple of carrier elements.
template <class T>
struct Law {
  std::string name;
  std::size_t arity;
  std::function<bool(std::span<const T>)> holds;
};

/// A law together with the concrete elements on which it failed.
template <class T>
struct LawFailure {
  std::string law;
  std::vector<T> witness;
};

template <class T>
struct LawReport {
  std::string instance;
  Kind kind = Kind::Magma;
  /// Tuples drawn: sampled cases plus tuples of the exhaustive sweep.
  std::size_t cases = 0;
  /// Individual law evaluations.
  std::size_t checks = 0;
  std::vector<LawFailure<T>> failures;

  bool ok() const noexcept { return failures.empty(); }
};

struct LawOptions {
  /// When positive and the base DSet can enumerate, every law is also checked
  /// on all tuples drawn from enumerate(sweep_bound).
  std::size_t sweep_bound = 0;
};

namespace detail {

template <class T>
T variant_of(const StructureInstance<T>& in, const T& x, std::uint64_t salt) {
  return in.base->variant ? in.base->variant(x, salt) : x;
}

template <class T>
bool divides(const StructureInstance<T>& in, const T& d, const T& m) {
  auto q = in.ops.exact_quotient(m, d);
  return q.has_value() && in.eq(m, in.ops.mul(d, *q));
}

template <class T>
bool factorization_sound(const StructureInstance<T>& in, const T& x) {
  auto f = in.ops.factor(x);
  if (!in.eq(product_of(in, f), x)) return false;
  for (const auto& pp : f.factors) {
    if (pp.multiplicity == Nat(0)) return false;
    if (!pp.cert.is_prime() || !in.eq(pp.cert.subject, pp.prime)) return false;
  }
  return true;
}

// Magma-side laws for a binary operation `op` with optional identity / inverse.
// Ring-side instances reuse these for their additive group under a name prefix.
template <class T>
void group_like_laws(std::vector<Law<T>>& out, const std::string& prefix, std::shared_ptr<const StructureInstance<T>> in,
                     typename Operations<T>::Binary op, std::optional<T> e, typename Operations<T>::Unary inv,
                     bool assoc, bool comm) {
  out.push_back({prefix + "cong", 2, [in, op](std::span<const T> t) {
                   T x2 = variant_of(*in, t[0], 1), y2 = variant_of(*in, t[1], 2);
                   return in->eq(t[0], x2) && in->eq(t[1], y2) && in->eq(op(t[0], t[1]), op(x2, y2));
                 }});
  if (assoc)
    out.push_back({prefix + "assoc", 3, [in, op](std::span<const T> t) {
                     return in->eq(op(op(t[0], t[1]), t[2]), op(t[0], op(t[1], t[2])));
                   }});
  if (comm)
    out.push_back(
        {prefix + "comm", 2, [in, op](std::span<const T> t) { return in->eq(op(t[0], t[1]), op(t[1], t[0])); }});
  if (e) {
    T id = *e;
    out.push_back({prefix + "identity-left", 1, [in, op, id](std::span<const T> t) { return in->eq(op(id, t[0]), t[0]); }});
    out.push_back({prefix + "identity-right", 1, [in, op, id](std::span<const T> t) { return in->eq(op(t[0], id), t[0]); }});
    if (inv) {
      out.push_back({prefix + "inverse-left", 1, [in, op, id, inv](std::span<const T> t) {
                       return in->eq(op(inv(t[0]), t[0]), id);
                     }});
      out.push_back({prefix + "inverse-right", 1, [in, op, id, inv](std::span<const T> t) {
                       return in->eq(op(t[0], inv(t[0])), id);
                     }});
      out.push_back({prefix + "inverse-cong", 1, [in, inv](std::span<const T> t) {
                       return in->eq(inv(variant_of(*in, t[0], 3)), inv(t[0]));
                     }});
      // An inverse is unique: any y with x∙y ≈ e (or y∙x ≈ e) is eq-equal to x⁻¹.
      out.push_back({prefix + "inverse-unique", 2, [in, op, id, inv](std::span<const T> t) {
                       const T& x = t[0];
                       const T& y = t[1];
                       if (in->eq(op(x, y), id) && !in->eq(y, inv(x))) return false;
                       if (in->eq(op(y, x), id) && !in->eq(y, inv(x))) return false;
                       return true;
                     }});
      out.push_back({prefix + "inverse-antihom", 2, [in, op, inv](std::span<const T> t) {
                       return in->eq(inv(op(t[0], t[1])), op(inv(t[1]), inv(t[0])));
                     }});
    }
  }
}

}  // namespace detail

/// The executable law catalogue of the instance's kind, inherited laws included.
template <class T>
std::vector<Law<T>> law_catalogue(const StructureInstance<T>& inst) {
  validate(inst);
  auto in = std::make_shared<const StructureInstance<T>>(inst);
  const auto& ops = in->ops;
  const Kind k = in->kind;
  std::vector<Law<T>> laws;

  if (family(k) == Family::Magma) {
    const bool has_identity = is_a(k, Kind::Monoid);
    detail::group_like_laws<T>(laws, "", in, ops.op, has_identity ? ops.identity : std::nullopt,
                               is_a(k, Kind::Group) ? ops.inverse : nullptr, is_a(k, Kind::Semigroup),
                               is_a(k, Kind::CommutativeSemigroup));
    if (is_a(k, Kind::CCMonoid))
      laws.push_back({"cancel", 3, [in](std::span<const T> t) {
                        const auto& op = in->ops.op;
                        return !in->eq(op(t[0], t[2]), op(t[1], t[2])) || in->eq(t[0], t[1]);
                      }});
    if (is_a(k, Kind::FactorizationMonoid))
      laws.push_back({"factor-sound", 1, [in](std::span<const T> t) { return detail::factorization_sound(*in, t[0]); }});
    return laws;
  }

  // Ring side: additive commutative group, then multiplicative layers.
  detail::group_like_laws<T>(laws, "add-", in, ops.add, ops.zero, ops.neg, true, true);
  laws.push_back({"mul-cong", 2, [in](std::span<const T> t) {
                    T x2 = detail::variant_of(*in, t[0], 1), y2 = detail::variant_of(*in, t[1], 2);
                    return in->eq(in->ops.mul(t[0], t[1]), in->ops.mul(x2, y2));
                  }});
  if (is_a(k, Kind::Ring)) {
    laws.push_back({"mul-assoc", 3, [in](std::span<const T> t) {
                      const auto& m = in->ops.mul;
                      return in->eq(m(m(t[0], t[1]), t[2]), m(t[0], m(t[1], t[2])));
                    }});
    laws.push_back({"distrib-left", 3, [in](std::span<const T> t) {
                      const auto& m = in->ops.mul;
                      const auto& a = in->ops.add;
                      return in->eq(m(t[0], a(t[1], t[2])), a(m(t[0], t[1]), m(t[0], t[2])));
                    }});
    laws.push_back({"distrib-right", 3, [in](std::span<const T> t) {
                      const auto& m = in->ops.mul;
                      const auto& a = in->ops.add;
                      return in->eq(m(a(t[0], t[1]), t[2]), a(m(t[0], t[2]), m(t[1], t[2])));
                    }});
  }
  if (is_a(k, Kind::RingWithOne)) {
    laws.push_back({"mul-one-left", 1, [in](std::span<const T> t) { return in->eq(in->ops.mul(*in->ops.one, t[0]), t[0]); }});
    laws.push_back({"mul-one-right", 1, [in](std::span<const T> t) { return in->eq(in->ops.mul(t[0], *in->ops.one), t[0]); }});
  }
  if (is_a(k, Kind::CommutativeRing))
    laws.push_back({"mul-comm", 2, [in](std::span<const T> t) {
                      return in->eq(in->ops.mul(t[0], t[1]), in->ops.mul(t[1], t[0]));
                    }});
  if (is_a(k, Kind::IntegralRing)) {
    laws.push_back({"one-not-zero", 1, [in](std::span<const T>) { return !in->eq(*in->ops.one, *in->ops.zero); }});
    laws.push_back({"no-zero-divisors", 2, [in](std::span<const T> t) {
                      const T& z = *in->ops.zero;
                      return !in->eq(in->ops.mul(t[0], t[1]), z) || in->eq(t[0], z) || in->eq(t[1], z);
                    }});
  }
  if (is_a(k, Kind::GCDRing)) {
    laws.push_back({"gcd-divides", 2, [in](std::span<const T> t) {
                      T g = in->ops.gcd(t[0], t[1]);
                      if (in->eq(g, *in->ops.zero)) return in->eq(t[0], g) && in->eq(t[1], g);
                      return detail::divides(*in, g, t[0]) && detail::divides(*in, g, t[1]);
                    }});
    laws.push_back({"gcd-greatest", 3, [in](std::span<const T> t) {
                      const T& z = t[2];
                      if (in->eq(z, *in->ops.zero)) return true;
                      if (!detail::divides(*in, z, t[0]) || !detail::divides(*in, z, t[1])) return true;
                      return detail::divides(*in, z, in->ops.gcd(t[0], t[1]));
                    }});
  }
  if (is_a(k, Kind::EuclideanRing)) {
    laws.push_back({"divmod", 2, [in](std::span<const T> t) {
                      const T& zero = *in->ops.zero;
                      if (in->eq(t[1], zero)) return true;
                      auto [q, r] = in->ops.div_mod(t[0], t[1]);
                      if (!in->eq(t[0], in->ops.add(in->ops.mul(q, t[1]), r))) return false;
                      return in->eq(r, zero) || in->ops.norm(r) < in->ops.norm(t[1]);
                    }});
    laws.push_back({"divmod-cong", 2, [in](std::span<const T> t) {
                      if (in->eq(t[1], *in->ops.zero)) return true;
                      auto [q1, r1] = in->ops.div_mod(t[0], t[1]);
                      auto [q2, r2] = in->ops.div_mod(detail::variant_of(*in, t[0], 1), detail::variant_of(*in, t[1], 2));
                      return in->eq(q1, q2) && in->eq(r1, r2);
                    }});
    laws.push_back({"norm-cong", 1, [in](std::span<const T> t) {
                      return in->ops.norm(t[0]) == in->ops.norm(detail::variant_of(*in, t[0], 1));
                    }});
  }
  if (is_a(k, Kind::FactorizationRing))
    laws.push_back({"factor-sound", 1, [in](std::span<const T> t) {
                      if (in->eq(t[0], *in->ops.zero)) return true;
                      return detail::factorization_sound(*in, t[0]);
                    }});
  if (is_a(k, Kind::UniqueFactorizationRing))
    // For every prime p of x: whenever p divides y·z, prime_split names a side
    // with a division that re-checks.
    laws.push_back({"prime-split", 3, [in](std::span<const T> t) {
                      const T& zero = *in->ops.zero;
                      const auto& m = in->ops.mul;
                      if (in->eq(t[0], zero)) return true;
                      T yz = m(t[1], t[2]);
                      if (in->eq(yz, zero)) return true;
                      auto fyz = in->ops.factor(yz);
                      for (const auto& pp : in->ops.factor(t[0]).factors) {
                        const T& p = pp.prime;
                        auto it = std::find_if(fyz.factors.begin(), fyz.factors.end(),
                                               [&](const PrimePower<T>& q) { return in->eq(q.prime, p); });
                        if (it == fyz.factors.end()) continue;
                        FactorizationData<T> rest = fyz;
                        auto& mult = rest.factors[static_cast<std::size_t>(it - fyz.factors.begin())].multiplicity;
                        mult = monus(mult, Nat(1));
                        DividesWitness<T> w{p, yz, product_of(*in, rest)};
                        auto split = in->ops.prime_split(p, t[1], t[2], w);
                        const auto& side = split.is_left() ? split.left() : split.right();
                        const T& expected = split.is_left() ? t[1] : t[2];
                        if (!in->eq(side.divisor, p) || !in->eq(side.dividend, expected) ||
                            !in->eq(side.dividend, m(p, side.quotient)))
                          return false;
                      }
                      return true;
                    }});
  if (is_a(k, Kind::Field)) {
    laws.push_back({"recip", 1, [in](std::span<const T> t) {
                      if (in->eq(t[0], *in->ops.zero)) return true;
                      return in->eq(in->ops.mul(t[0], in->ops.recip(t[0])), *in->ops.one);
                    }});
    laws.push_back({"recip-cong", 1, [in](std::span<const T> t) {
                      if (in->eq(t[0], *in->ops.zero)) return true;
                      return in->eq(in->ops.recip(t[0]), in->ops.recip(detail::variant_of(*in, t[0], 1)));
                    }});
  }
  return laws;
}

namespace detail {

template <class T>
bool evaluate(const Law<T>& law, std::span<const T> tuple) {
  try {
    return law.holds(tuple.first(law.arity));
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace detail

/// Runs the kind's law catalogue on `budget` seeded tuples (plus the optional
/// exhaustive sweep) and reports every failing tuple. Throws StructuralError
/// when the instance does not fit its kind.
template <class T>
LawReport<T> check_laws(const StructureInstance<T>& inst, std::uint64_t seed, std::size_t budget,
                        const LawOptions& options = {}) {
  const auto laws = law_catalogue(inst);
  LawReport<T> report;
  report.instance = inst.name;
  report.kind = inst.kind;

  std::set<std::pair<std::string, std::string>> seen;
  auto record = [&](const Law<T>& law, std::span<const T> tuple) {
    ++report.checks;
    if (detail::evaluate(law, tuple)) return;
    std::vector<T> witness(tuple.begin(), tuple.begin() + static_cast<std::ptrdiff_t>(law.arity));
    std::string key;
    for (const auto& w : witness) key += inst.show(w) + ";";
    if (seen.emplace(law.name, key).second) report.failures.push_back({law.name, std::move(witness)});
  };

  const std::vector<T> pool = budget == 0 ? std::vector<T>{} : inst.base->sample(seed, budget);
  if (!pool.empty()) {
    Rng rng(derive_seed(seed, 0x1a55));
    std::vector<T> tuple(3, pool.front());
    for (std::size_t i = 0; i < budget; ++i) {
      tuple[0] = pool[i % pool.size()];
      tuple[1] = pool[rng.below(pool.size())];
      tuple[2] = pool[rng.below(pool.size())];
      ++report.cases;
      for (const auto& law : laws) record(law, tuple);
    }
  }

  if (options.sweep_bound > 0 && inst.base->enumerate) {
    const std::vector<T> elems = inst.base->enumerate(options.sweep_bound);
    const std::size_t n = elems.size();
    report.cases += n * n * n;
    for (const auto& law : laws) {
      if (n == 0) break;
      std::vector<std::size_t> idx(law.arity, 0);
      std::vector<T> tuple(law.arity == 0 ? 1 : law.arity, elems.front());
      while (true) {
        for (std::size_t j = 0; j < law.arity; ++j) tuple[j] = elems[idx[j]];
        record(law, tuple);
        std::size_t j = law.arity;
        while (j > 0 && ++idx[j - 1] == n) idx[--j] = 0;
        if (j == 0) break;
      }
    }
  }
  return report;
}

/// Re-evaluates a reported failure; true when the law now holds on the witness.
template <class T>
bool recheck(const StructureInstance<T>& inst, const LawFailure<T>& failure) {
  for (const auto& law : law_catalogue(inst))
    if (law.name == failure.law) return detail::evaluate(law, std::span<const T>(failure.witness));
  throw StructuralError(inst.name + ": unknown law '" + failure.law + "'");
}

}  // namespace docon
