#include "docon/naturals.hpp"

#include "docon/rng.hpp"

namespace docon {

namespace {

std::vector<Nat> sample_nats(std::uint64_t seed, std::size_t count, bool positive) {
  Rng rng(seed);
  std::vector<Nat> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Nat v;
    switch (rng.below(4)) {
      case 0: v = Nat(rng.below(4)); break;
      case 1: v = Nat(rng.below(50)); break;
      case 2: v = random_nat(rng, 32); break;
      default: v = random_nat(rng, 1 + static_cast<unsigned>(rng.below(128))); break;
    }
    if (positive && v.is_zero()) v = Nat(1 + rng.below(10));
    out.push_back(v);
  }
  return out;
}

std::shared_ptr<DSet<Nat>> make_nat_dset(bool positive) {
  auto d = std::make_shared<DSet<Nat>>();
  d->name = positive ? "N\\0" : "N";
  d->equal = [](const Nat& a, const Nat& b) { return a == b; };
  d->sample = [positive](std::uint64_t seed, std::size_t count) { return sample_nats(seed, count, positive); };
  d->enumerate = [positive](std::size_t bound) {
    std::vector<Nat> out;
    for (std::size_t i = positive ? 1 : 0; i <= bound; ++i) out.emplace_back(i);
    return out;
  };
  d->show = [](const Nat& n) { return n.str(); };
  return d;
}

}  // namespace

std::shared_ptr<const DSet<Nat>> nat_dset() {
  static const std::shared_ptr<const DSet<Nat>> d = make_nat_dset(false);
  return d;
}

std::shared_ptr<const DSet<Nat>> positive_nat_dset() {
  static const std::shared_ptr<const DSet<Nat>> d = make_nat_dset(true);
  return d;
}

StructureInstance<Nat> nat_additive() {
  StructureInstance<Nat> s;
  s.name = "nat-add";
  s.kind = Kind::CommutativeMonoid;
  s.base = nat_dset();
  s.ops.op = [](const Nat& a, const Nat& b) { return a + b; };
  s.ops.identity = Nat(0);
  return s;
}

StructureInstance<Nat> nat_multiplicative() {
  StructureInstance<Nat> s;
  s.name = "nat-mul";
  s.kind = Kind::CommutativeMonoid;
  s.base = nat_dset();
  s.ops.op = [](const Nat& a, const Nat& b) { return a * b; };
  s.ops.identity = Nat(1);
  return s;
}

StructureInstance<Nat> positive_nat_multiplicative() {
  StructureInstance<Nat> s;
  s.name = "nat-pos-mul";
  s.kind = Kind::CCMonoid;
  s.base = positive_nat_dset();
  s.ops.op = [](const Nat& a, const Nat& b) { return a * b; };
  s.ops.identity = Nat(1);
  return s;
}

StructureInstance<Nat> nat_monus() {
  StructureInstance<Nat> s;
  s.name = "nat-monus";
  s.kind = Kind::Semigroup;
  s.base = nat_dset();
  s.ops.op = [](const Nat& a, const Nat& b) { return monus(a, b); };
  return s;
}

StructureInstance<Bin> bin_additive() {
  auto d = std::make_shared<DSet<Bin>>();
  d->name = "Bin";
  d->equal = [](const Bin& a, const Bin& b) { return a == b; };
  d->sample = [](std::uint64_t seed, std::size_t count) {
    std::vector<Bin> out;
    for (const auto& n : sample_nats(seed, count, false)) out.push_back(to_bin(n));
    return out;
  };
  d->enumerate = [](std::size_t bound) {
    std::vector<Bin> out;
    for (std::size_t i = 0; i <= bound; ++i) out.push_back(to_bin(Nat(i)));
    return out;
  };
  d->show = [](const Bin& b) { return to_string(b); };

  StructureInstance<Bin> s;
  s.name = "bin-add";
  s.kind = Kind::CommutativeMonoid;
  s.base = d;
  s.ops.op = bin_add;
  s.ops.identity = Bin{};
  return s;
}

}  // namespace docon
