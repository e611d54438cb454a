#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "docon/nat.hpp"

namespace docon {

/// Binary coding of a natural number, least-significant bit first. The
/// canonical form has no trailing (most-significant) zero; zero is the empty list.
struct Bin {
  std::vector<std::uint8_t> bits;

  bool is_canonical() const;
  friend bool operator==(const Bin&, const Bin&) = default;
};

Bin to_bin(const Nat& n);
/// Throws DomainError on a non-canonical or non-binary digit list.
Nat from_bin(const Bin& b);
/// Successor computed on the bits directly.
Bin bin_suc(const Bin& b);
/// Ripple-carry addition on canonical codes.
Bin bin_add(const Bin& a, const Bin& b);

/// "0b110" (most-significant first); zero prints as "0b0".
std::string to_string(const Bin& b);
Bin parse_bin(std::string_view text);

}  // namespace docon
