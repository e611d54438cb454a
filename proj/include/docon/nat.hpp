#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "docon/rng.hpp"

namespace docon {

/// Arbitrary-precision signed integer.
using Int = boost::multiprecision::cpp_int;

Int parse_int(std::string_view text);
std::string to_string(const Int& x);

/// Random integer with |x| < 2^bits and a random sign.
Int random_int(Rng& rng, unsigned bits);

/// Arbitrary-precision natural number. Never negative; subtraction is the
/// truncated `monus`.
class Nat {
 public:
  Nat() = default;
  Nat(std::uint64_t v) : v_(v) {}  // NOLINT: implicit from small literals
  explicit Nat(Int v);

  const Int& value() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_.is_zero(); }
  bool bit(unsigned i) const { return boost::multiprecision::bit_test(v_, i); }
  /// Number of significant bits; 0 for zero.
  unsigned bit_length() const;

  friend Nat operator+(const Nat& a, const Nat& b) { return Nat(a.v_ + b.v_, Trusted{}); }
  friend Nat operator*(const Nat& a, const Nat& b) { return Nat(a.v_ * b.v_, Trusted{}); }
  Nat& operator+=(const Nat& o) {
    v_ += o.v_;
    return *this;
  }

  friend bool operator==(const Nat& a, const Nat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  static Nat parse(std::string_view text);
  std::string str() const { return to_string(v_); }

 private:
  struct Trusted {};
  Nat(Int v, Trusted) : v_(std::move(v)) {}

  Int v_;
};

/// Truncated subtraction: a ∸ b = max(a - b, 0).
Nat monus(const Nat& a, const Nat& b);

/// Random natural below 2^bits.
Nat random_nat(Rng& rng, unsigned bits);

inline std::string to_string(const Nat& n) { return n.str(); }

}  // namespace docon
