#pragma once

#include <memory>
#include <utility>

#include "docon/instance.hpp"
#include "docon/rng.hpp"

namespace docon {

inline bool product_kind_supported(Kind k) {
  switch (k) {
    case Kind::Magma:
    case Kind::Semigroup:
    case Kind::CommutativeSemigroup:
    case Kind::Monoid:
    case Kind::CommutativeMonoid:
    case Kind::Group:
    case Kind::CommutativeGroup:
      return true;
    default:
      return false;
  }
}

/// Componentwise structure on A × B: (x, y) ∙ (x', y') = (x ∙ x', y ∙ y').
template <class A, class B>
StructureInstance<std::pair<A, B>> direct_product(const StructureInstance<A>& a, const StructureInstance<B>& b) {
  using P = std::pair<A, B>;
  if (a.kind != b.kind)
    throw MismatchError("direct product of " + std::string(kind_name(a.kind)) + " and " +
                        std::string(kind_name(b.kind)));
  if (!product_kind_supported(a.kind))
    throw MismatchError("direct product is defined for group-level kinds only, not " +
                        std::string(kind_name(a.kind)));
  validate(a);
  validate(b);

  auto ba = a.base;
  auto bb = b.base;
  auto base = std::make_shared<DSet<P>>();
  base->name = ba->name + " x " + bb->name;
  base->equal = [ba, bb](const P& x, const P& y) { return ba->equal(x.first, y.first) && bb->equal(x.second, y.second); };
  base->sample = [ba, bb](std::uint64_t seed, std::size_t count) {
    auto xs = ba->sample(derive_seed(seed, 1), count);
    auto ys = bb->sample(derive_seed(seed, 2), count);
    std::vector<P> out;
    for (std::size_t i = 0; i < std::min(xs.size(), ys.size()); ++i) out.emplace_back(xs[i], ys[i]);
    return out;
  };
  if (ba->enumerate && bb->enumerate)
    base->enumerate = [ba, bb](std::size_t bound) {
      std::vector<P> out;
      auto ys = bb->enumerate(bound);
      for (const auto& x : ba->enumerate(bound))
        for (const auto& y : ys) out.emplace_back(x, y);
      return out;
    };
  base->variant = [ba, bb](const P& x, std::uint64_t salt) {
    return P{ba->variant ? ba->variant(x.first, salt) : x.first, bb->variant ? bb->variant(x.second, salt) : x.second};
  };
  base->show = [ba, bb](const P& x) { return "(" + ba->show(x.first) + ", " + bb->show(x.second) + ")"; };

  StructureInstance<P> out;
  out.name = a.name + " x " + b.name;
  out.kind = a.kind;
  out.base = base;
  auto opa = a.ops.op;
  auto opb = b.ops.op;
  out.ops.op = [opa, opb](const P& x, const P& y) { return P{opa(x.first, y.first), opb(x.second, y.second)}; };
  if (a.ops.identity && b.ops.identity) out.ops.identity = P{*a.ops.identity, *b.ops.identity};
  if (a.ops.inverse && b.ops.inverse) {
    auto ia = a.ops.inverse;
    auto ib = b.ops.inverse;
    out.ops.inverse = [ia, ib](const P& x) { return P{ia(x.first), ib(x.second)}; };
  }
  return out;
}

}  // namespace docon
