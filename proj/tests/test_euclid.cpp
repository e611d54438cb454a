#include <doctest.h>

#include "docon/euclid.hpp"
#include "docon/integers.hpp"
#include "docon/laws.hpp"
#include "oracles.hpp"

using namespace docon;

namespace {

const StructureInstance<Int>& Z() { return int_ring(); }

DividesWitness<Int> product_witness(const Int& p, const Int& a, const Int& b) {
  return {p, a * b, a * b / p};
}

}  // namespace

TEST_CASE("divMod on Z uses the non-negative remainder") {
  CHECK(div_mod(Z(), Int(7), Int(2)) == std::pair<Int, Int>{3, 1});
  CHECK(div_mod(Z(), Int(-7), Int(2)) == std::pair<Int, Int>{-4, 1});
  CHECK(div_mod(Z(), Int(6), Int(3)) == std::pair<Int, Int>{2, 0});
  CHECK(div_mod(Z(), Int(7), Int(-2)) == std::pair<Int, Int>{-3, 1});
  CHECK(div_mod(Z(), Int(-7), Int(-2)) == std::pair<Int, Int>{4, 1});
  CHECK_THROWS_AS(div_mod(Z(), Int(1), Int(0)), DivisionByZero);
  for (int a = -30; a <= 30; ++a)
    for (int b = -9; b <= 9; ++b) {
      if (b == 0) continue;
      const auto [q, r] = div_mod(Z(), Int(a), Int(b));
      CHECK(q * b + r == a);
      CHECK(r >= 0);
      CHECK(r < std::abs(b));
    }
}

TEST_CASE("extendedGcd examples") {
  const auto c = extended_gcd(Z(), Int(12), Int(8));
  CHECK(c.g == 4);
  CHECK(c.u * 12 + c.v * 8 == 4);
  CHECK(verify_bezout(Z(), Int(12), Int(8), c));

  const auto base = extended_gcd(Z(), Int(9), Int(0));
  CHECK(base.g == 9);
  CHECK(base.u == 1);
  CHECK(base.v == 0);

  const auto zero = extended_gcd(Z(), Int(0), Int(0));
  CHECK(zero.g == 0);
  CHECK(zero.u == 1);
  CHECK(zero.v == 0);
  CHECK(verify_bezout(Z(), Int(0), Int(0), zero));
}

TEST_CASE("Bezout certificates on [-50,50]^2 against the brute-force gcd") {
  for (int a = -50; a <= 50; ++a)
    for (int b = -50; b <= 50; ++b) {
      const auto c = extended_gcd(Z(), Int(a), Int(b));
      REQUIRE(verify_bezout(Z(), Int(a), Int(b), c));
      CHECK(c.g == oracle::brute_gcd(a, b));
    }
}

TEST_CASE("Bezout certificates on random 64-bit pairs") {
  Rng rng(64);
  for (int i = 0; i < 200; ++i) {
    const Int a = random_int(rng, 64);
    const Int b = random_int(rng, 64);
    const auto c = extended_gcd(Z(), a, b);
    CHECK(verify_bezout(Z(), a, b, c));
    CHECK(c.g == boost::multiprecision::gcd(a, b));
  }
}

TEST_CASE("verify_bezout rejects forged certificates") {
  auto c = extended_gcd(Z(), Int(12), Int(8));
  auto bad_g = c;
  bad_g.g = 2;
  CHECK_FALSE(verify_bezout(Z(), Int(12), Int(8), bad_g));
  auto bad_u = c;
  bad_u.u += 1;
  CHECK_FALSE(verify_bezout(Z(), Int(12), Int(8), bad_u));
  auto bad_q = c;
  bad_q.qa = 2;
  CHECK_FALSE(verify_bezout(Z(), Int(12), Int(8), bad_q));
  // g = 0 is only allowed for gcd(0, 0).
  CHECK_FALSE(verify_bezout(Z(), Int(3), Int(0), BezoutCertificate<Int>{0, 0, 0, 0, 0}));
}

TEST_CASE("extendedGcd rejects a division whose remainder norm does not drop") {
  auto broken = Z();
  broken.ops.div_mod = [](const Int& a, const Int& b) { return std::pair<Int, Int>{0, a == 0 ? Int(0) : b}; };
  CHECK_THROWS_AS(extended_gcd(broken, Int(5), Int(3)), DomainError);
}

TEST_CASE("isPrime examples and witnesses") {
  CHECK(is_prime(Int(7)).is_prime());
  CHECK(is_prime(Int(2)).is_prime());
  const auto six = is_prime(Int(6));
  REQUIRE_FALSE(six.is_prime());
  CHECK(six.factor->divisor == 2);
  CHECK(six.factor->quotient == 3);
  CHECK(six.factor->dividend == 6);
  CHECK_THROWS_AS(is_prime(Int(1)), DomainError);
  CHECK_THROWS_AS(is_prime(Int(0)), DomainError);
  CHECK_THROWS_AS(is_prime(Int(-1)), DomainError);
  for (std::uint64_t n = 2; n < 3000; ++n) {
    const auto c = is_prime(Int(n));
    CHECK(c.is_prime() == oracle::sieve_is_prime(n));
    CHECK(verify_primality(c));
  }
  CHECK(is_prime(Int(-7)).is_prime());
  CHECK(is_prime(Int(1000000007)).is_prime());
  PrimalityCert<Int> forged{Int(15), std::nullopt};
  CHECK_FALSE(verify_primality(forged));
  PrimalityCert<Int> bad_factor{Int(15), DividesWitness<Int>{4, 15, 4}};
  CHECK_FALSE(verify_primality(bad_factor));
}

TEST_CASE("primeSplit examples") {
  const auto s1 = prime_split(Z(), Int(2), Int(2), Int(5), product_witness(2, 2, 5));
  REQUIRE(s1.is_left());
  CHECK(s1.left().quotient == 1);

  const auto s2 = prime_split(Z(), Int(3), Int(4), Int(6), product_witness(3, 4, 6));
  REQUIRE(s2.is_right());
  CHECK(s2.right().quotient == 2);

  const auto s3 = prime_split(Z(), Int(5), Int(10), Int(10), product_witness(5, 10, 10));
  REQUIRE(s3.is_left());
  CHECK(s3.left().quotient == 2);

  CHECK_THROWS_AS(prime_split(Z(), Int(4), Int(2), Int(2), product_witness(4, 2, 2)), DomainError);
  CHECK_THROWS_AS(prime_split(Z(), Int(3), Int(2), Int(2), DividesWitness<Int>{3, 4, 1}), DomainError);
}

TEST_CASE("primeSplit re-verifies for the first 10 primes and a, b in [-30, 30]") {
  const auto primes = oracle::primes_below(30);
  for (auto p : primes)
    for (int a = -30; a <= 30; ++a)
      for (int b = -30; b <= 30; ++b) {
        if ((a * b) % static_cast<int>(p) != 0) continue;
        const auto s = prime_split(Z(), Int(p), Int(a), Int(b), product_witness(Int(p), a, b));
        const auto& w = s.is_left() ? s.left() : s.right();
        CHECK(w.divisor == p);
        CHECK(w.dividend == (s.is_left() ? a : b));
        CHECK(check_divides(Z(), w));
        // Left is preferred whenever p | a.
        CHECK(s.is_left() == (a % static_cast<int>(p) == 0));
      }
}

TEST_CASE("residue ring examples") {
  const auto z6 = int_residue_ring(6);
  using R = Residue<Int>;
  CHECK(z6.eq(z6.ops.add(R{6, 4}, R{6, 5}), R{6, 3}));
  CHECK(z6.eq(z6.ops.mul(R{6, 2}, R{6, 3}), R{6, 0}));
  CHECK(z6.ops.neg(R{6, 1}).value == 5);
  CHECK(z6.kind == Kind::CommutativeRing);
  CHECK_THROWS_AS(int_residue_ring(0), DivisionByZero);
  CHECK_THROWS_AS(int_residue_ring(1), DomainError);
  CHECK_THROWS_AS(int_residue_ring(-1), DomainError);
}

TEST_CASE("residue field examples") {
  const auto f7 = int_residue_field(7);
  using R = Residue<Int>;
  CHECK(f7.ops.recip(R{7, 3}).value == 5);
  CHECK(f7.ops.recip(R{7, 1}).value == 1);
  CHECK_THROWS_AS(f7.ops.recip(R{7, 0}), DivisionByZero);
  CHECK_THROWS_AS(f7.ops.recip(R{7, 14}), DivisionByZero);
  try {
    int_residue_field(6);
    FAIL("composite modulus accepted");
  } catch (const CompositeModulus<Int>& e) {
    CHECK(e.witness().divisor == 2);
    CHECK(e.witness().dividend == 6);
    CHECK(check_divides(Z(), e.witness()));
    CHECK(e.code() == ErrorCode::NotPrime);
  }
  // A certificate for a different number is refused.
  CHECK_THROWS_AS(residue_field(Z(), Int(7), is_prime(Int(11))), DomainError);
}

TEST_CASE("inverses in every prime field below 100 match exhaustive search") {
  for (auto p : oracle::primes_below(100)) {
    const auto f = int_residue_field(Int(p));
    for (std::uint64_t x = 1; x < p; ++x) {
      const auto inv = f.ops.recip(Residue<Int>{Int(p), Int(x)});
      CHECK(inv.value == oracle::modular_inverse(static_cast<std::int64_t>(x), static_cast<std::int64_t>(p)));
      CHECK(f.eq(f.ops.mul(inv, Residue<Int>{Int(p), Int(x)}), *f.ops.one));
    }
  }
}

TEST_CASE("composite moduli are refused with a valid factor witness") {
  for (std::uint64_t b = 4; b <= 100; ++b) {
    if (oracle::sieve_is_prime(b)) continue;
    try {
      int_residue_field(Int(b));
      FAIL("composite modulus accepted: " << b);
    } catch (const CompositeModulus<Int>& e) {
      const auto& w = e.witness();
      CHECK(w.dividend == b);
      CHECK(w.divisor > 1);
      CHECK(w.divisor < b);
      CHECK(w.divisor * w.quotient == b);
    }
  }
}

TEST_CASE("residue law suites") {
  for (std::uint64_t seed : {1, 2}) {
    for (int b = 2; b <= 50; b += 3) CHECK(check_laws(int_residue_ring(b), seed, 300).ok());
    for (int p : {2, 3, 5, 13, 97}) CHECK(check_laws(int_residue_field(p), seed, 300).ok());
  }
  CHECK(check_laws(int_residue_ring(6), 1, 0, LawOptions{12}).ok());
}

TEST_CASE("a residue ring of a composite is not an integral ring") {
  auto fake = int_residue_ring(6);
  fake.kind = Kind::IntegralRing;
  const auto r = check_laws(fake, 1, 0, LawOptions{6});
  REQUIRE_FALSE(r.ok());
  for (const auto& f : r.failures) CHECK(f.law == "no-zero-divisors");
}

TEST_CASE("congruence across representatives in Z/(b)") {
  for (int b = 2; b <= 20; ++b) {
    const auto zb = int_residue_ring(b);
    const auto xs = zb.base->sample(b, 30);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      const auto x = xs[i];
      const auto y = xs[i + 1];
      const auto x2 = zb.base->variant(x, i);
      REQUIRE(zb.eq(x, x2));
      CHECK(zb.eq(zb.ops.add(x, y), zb.ops.add(x2, y)));
      CHECK(zb.eq(zb.ops.mul(x, y), zb.ops.mul(x2, y)));
      CHECK(zb.eq(zb.ops.neg(x), zb.ops.neg(x2)));
    }
  }
}
