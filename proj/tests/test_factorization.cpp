#include <doctest.h>

#include "docon/factorization.hpp"
#include "oracles.hpp"

using namespace docon;

namespace {

std::map<std::uint64_t, unsigned> as_map(const FactorizationData<Int>& f) {
  std::map<std::uint64_t, unsigned> out;
  for (const auto& pp : f.factors) out[pp.prime.convert_to<std::uint64_t>()] += pp.multiplicity.value().convert_to<unsigned>();
  return out;
}

FactorizationData<Int> make(Int unit, std::vector<std::pair<int, unsigned>> ps) {
  FactorizationData<Int> f{std::move(unit), {}};
  for (auto [p, e] : ps) f.factors.push_back({Int(p), Nat(e), is_prime(Int(p < 0 ? -p : p))});
  return f;
}

}  // namespace

TEST_CASE("factor examples") {
  const auto one = factor(Int(1));
  CHECK(one.unit == 1);
  CHECK(one.factors.empty());

  const auto f60 = factor(Int(60));
  CHECK(f60.unit == 1);
  CHECK(as_map(f60) == std::map<std::uint64_t, unsigned>{{2, 2}, {3, 1}, {5, 1}});
  CHECK(render_factorization(Int(60), f60) == "60 = 2^2 * 3 * 5");

  const auto fm12 = factor(Int(-12));
  CHECK(fm12.unit == -1);
  CHECK(as_map(fm12) == std::map<std::uint64_t, unsigned>{{2, 2}, {3, 1}});
  CHECK(product_of(fm12) == -12);

  CHECK(factor(Int(-1)).unit == -1);
  CHECK(factor(Int(-1)).factors.empty());
  CHECK_THROWS_AS(factor(Int(0)), DomainError);
  CHECK_THROWS_AS(factor(Nat(0)), DomainError);

  const auto n97 = factor(Nat(97));
  REQUIRE(n97.factors.size() == 1);
  CHECK(n97.factors[0].prime == Nat(97));
  CHECK(n97.factors[0].cert.is_prime());
}

TEST_CASE("product_of examples") {
  CHECK(product_of(make(1, {{2, 2}, {3, 1}})) == 12);
  CHECK(product_of(make(-1, {})) == -1);
  CHECK(product_of(make(1, {})) == 1);
}

TEST_CASE("factorizations_equal works up to order and associates") {
  const auto& z = int_ufr();
  CHECK(factorizations_equal(z, make(1, {{2, 1}, {3, 1}}), make(1, {{3, 1}, {2, 1}})));
  CHECK(factorizations_equal(z, make(1, {{-2, 1}, {3, 1}}), make(-1, {{2, 1}, {3, 1}})));
  CHECK(factorizations_equal(z, make(1, {{-2, 2}}), make(1, {{2, 2}})));
  CHECK_FALSE(factorizations_equal(z, make(1, {{2, 2}}), make(1, {{2, 1}})));
  CHECK_FALSE(factorizations_equal(z, make(1, {{2, 1}}), make(-1, {{2, 1}})));
}

TEST_CASE("factor reconstructs and matches the sieve for 2..10^4") {
  for (std::uint64_t n = 2; n <= 10000; ++n) {
    const auto f = factor(Int(n));
    REQUIRE(product_of(f) == n);
    CHECK(as_map(f) == oracle::factor_map(n));
    for (const auto& pp : f.factors) CHECK(oracle::sieve_is_prime(pp.prime.convert_to<std::uint64_t>()));
    const auto g = factor(Int(-static_cast<long long>(n)));
    CHECK(product_of(g) == -static_cast<long long>(n));
    CHECK(product_of(factor(Nat(n))) == Nat(n));
  }
}

TEST_CASE("factor on random values below 10^9") {
  Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    const auto n = static_cast<std::uint64_t>(rng.range(2, 999999999));
    const auto f = factor(Int(n));
    CHECK(product_of(f) == n);
    CHECK(as_map(f) == oracle::factor_map(n));
  }
}

TEST_CASE("factor(x*y) equals merge(factor x, factor y)") {
  const auto& z = int_ufr();
  for (int x = -60; x <= 60; x += 7)
    for (int y = -60; y <= 60; y += 5) {
      if (x == 0 || y == 0) continue;
      const auto merged = merge_factorizations(z, factor(Int(x)), factor(Int(y)));
      CHECK(factorizations_equal(z, factor(Int(x) * y), merged));
      CHECK(product_of(merged) == x * y);
    }
}

TEST_CASE("unique-factorization checks on the shipped instances") {
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto rz = check_unique_sampled(int_ufr(), seed, 300);
    CHECK(rz.ok());
    CHECK(rz.cases == 300);
    CHECK(rz.checks > 300);
    CHECK(check_unique_sampled(positive_nat_factorization(), seed, 300).ok());
    CHECK(check_laws(int_ufr(), seed, 300).ok());
    CHECK(check_laws(positive_nat_factorization(), seed, 300).ok());
  }
  const auto empty = check_unique_sampled(int_ufr(), 1, 0);
  CHECK(empty.cases == 0);
  CHECK(empty.ok());
  CHECK_THROWS_AS(check_unique_sampled(int_ring(), 1, 10), StructuralError);
}

TEST_CASE("a factorizer that drops a prime is caught") {
  auto bad = int_ufr();
  bad.ops.factor = [](const Int& x) {
    auto f = factor(x);
    if (!f.factors.empty() && f.factors.back().prime > 100) f.factors.pop_back();
    return f;
  };
  const auto r = check_unique_sampled(bad, 1, 300);
  CHECK_FALSE(r.ok());
  for (const auto& f : r.failures) CHECK(f.law != "");
}

TEST_CASE("a prime split that picks the wrong side is caught") {
  auto bad = int_ufr();
  bad.ops.prime_split = [](const Int& p, const Int& a, const Int&, const DividesWitness<Int>&) {
    return PrimeSplit<Int>(Left<DividesWitness<Int>>{{p, a, a / p}});
  };
  const auto r = check_unique_sampled(bad, 2, 300);
  CHECK_FALSE(r.ok());
  for (const auto& f : r.failures) CHECK(f.law == "prime-split");
}

TEST_CASE("smooth samplers stay factorable and cover signs and zero") {
  const auto xs = int_ufr().base->sample(4, 400);
  bool neg = false, zero = false, big = false;
  for (const auto& x : xs) {
    neg = neg || x < 0;
    zero = zero || x == 0;
    big = big || abs(x) > 1000000;
  }
  CHECK(neg);
  CHECK(zero);
  CHECK(big);
  for (const auto& n : positive_nat_factorization().base->sample(4, 200)) CHECK_FALSE(n.is_zero());
}
