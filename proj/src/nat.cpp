#include "docon/nat.hpp"

#include <cctype>

#include "docon/errors.hpp"

namespace docon {

Int parse_int(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw DomainError("not an integer: '" + std::string(text) + "'");
  Int v = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw DomainError("not an integer: '" + std::string(text) + "'");
    v = v * 10 + (text[i] - '0');
  }
  return negative ? Int(-v) : v;
}

std::string to_string(const Int& x) { return x.str(); }

Int random_int(Rng& rng, unsigned bits) {
  Int v = random_nat(rng, bits).value();
  return rng.coin() ? Int(-v) : v;
}

Nat::Nat(Int v) : v_(std::move(v)) {
  if (v_.sign() < 0) throw DomainError("negative value for a natural number: " + v_.str());
}

unsigned Nat::bit_length() const {
  if (v_.is_zero()) return 0;
  return static_cast<unsigned>(boost::multiprecision::msb(v_)) + 1;
}

Nat Nat::parse(std::string_view text) {
  if (!text.empty() && text.front() == '-') throw DomainError("negative value for a natural number");
  return Nat(parse_int(text));
}

Nat monus(const Nat& a, const Nat& b) {
  if (a <= b) return Nat();
  return Nat(a.value() - b.value());
}

Nat random_nat(Rng& rng, unsigned bits) {
  Int v = 0;
  unsigned remaining = bits;
  while (remaining > 0) {
    unsigned take = remaining >= 64 ? 64 : remaining;
    std::uint64_t word = rng.next();
    if (take < 64) word &= (std::uint64_t{1} << take) - 1;
    v = (v << take) | word;
    remaining -= take;
  }
  return Nat(v);
}

}  // namespace docon
