#include "docon/fractions.hpp"

#include "docon/errors.hpp"
#include "docon/rng.hpp"

namespace docon {

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational::make(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::shared_ptr<const DSet<Rational>> rational_dset() {
  static const std::shared_ptr<const DSet<Rational>> d = [] {
    auto s = std::make_shared<DSet<Rational>>();
    s->name = "Q";
    s->equal = [](const Rational& a, const Rational& b) { return a == b; };
    s->sample = [](std::uint64_t seed, std::size_t count) {
      Rng rng(seed);
      std::vector<Rational> out;
      out.reserve(count);
      for (std::size_t i = 0; i < count; ++i) {
        Int n, d;
        switch (rng.below(3)) {
          case 0:
            n = rng.range(-5, 5);
            d = rng.range(1, 6);
            break;
          case 1:
            n = rng.range(-100, 100);
            d = rng.range(-100, 100);
            break;
          default:
            n = random_int(rng, 64);
            d = random_int(rng, 64);
            break;
        }
        if (d.is_zero()) d = 1;
        out.push_back(Rational::make(n, d));
      }
      return out;
    };
    s->enumerate = [](std::size_t bound) {
      std::vector<Rational> out;
      const auto b = static_cast<long long>(bound);
      for (long long n = -b; n <= b; ++n)
        for (long long d = 1; d <= b; ++d)
          if (boost::multiprecision::gcd(Int(n), Int(d)) == 1) out.push_back(Rational::make(n, d));
      return out;
    };
    s->show = [](const Rational& x) { return to_string(x); };
    return s;
  }();
  return d;
}

const StructureInstance<Rational>& rational_field() {
  static const StructureInstance<Rational> q = [] {
    StructureInstance<Rational> s;
    s.name = "frac";
    s.kind = Kind::Field;
    s.base = rational_dset();
    s.ops.add = [](const Rational& a, const Rational& b) { return add_optimized(a, b); };
    s.ops.mul = [](const Rational& a, const Rational& b) { return mul(a, b); };
    s.ops.neg = [](const Rational& a) { return neg(a); };
    s.ops.zero = Rational();
    s.ops.one = Rational(Int(1));
    s.ops.recip = [](const Rational& a) { return inverse(a); };
    return s;
  }();
  return q;
}

DecTotalOrder<Rational> rational_order() {
  return {rational_dset(), [](const Rational& a, const Rational& b) {
            return decide(a.num() * b.den() <= b.num() * a.den(), "<=", ">");
          }};
}

}  // namespace docon
