#include "docon/bin.hpp"

#include "docon/errors.hpp"

namespace docon {

bool Bin::is_canonical() const {
  for (auto b : bits)
    if (b > 1) return false;
  return bits.empty() || bits.back() == 1;
}

Bin to_bin(const Nat& n) {
  Bin b;
  const unsigned len = n.bit_length();
  b.bits.reserve(len);
  for (unsigned i = 0; i < len; ++i) b.bits.push_back(n.bit(i) ? 1 : 0);
  return b;
}

Nat from_bin(const Bin& b) {
  if (!b.is_canonical()) throw DomainError("non-canonical binary code " + to_string(b));
  Int v = 0;
  for (auto it = b.bits.rbegin(); it != b.bits.rend(); ++it) v = (v << 1) | Int(*it);
  return Nat(v);
}

Bin bin_suc(const Bin& b) {
  if (!b.is_canonical()) throw DomainError("non-canonical binary code " + to_string(b));
  Bin out = b;
  for (auto& bit : out.bits) {
    if (bit == 0) {
      bit = 1;
      return out;
    }
    bit = 0;
  }
  out.bits.push_back(1);
  return out;
}

Bin bin_add(const Bin& a, const Bin& b) {
  if (!a.is_canonical() || !b.is_canonical()) throw DomainError("non-canonical binary code");
  Bin out;
  const std::size_t n = std::max(a.bits.size(), b.bits.size());
  unsigned carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    unsigned s = carry + (i < a.bits.size() ? a.bits[i] : 0) + (i < b.bits.size() ? b.bits[i] : 0);
    out.bits.push_back(static_cast<std::uint8_t>(s & 1u));
    carry = s >> 1;
  }
  if (carry) out.bits.push_back(1);
  return out;
}

std::string to_string(const Bin& b) {
  if (b.bits.empty()) return "0b0";
  std::string s = "0b";
  for (auto it = b.bits.rbegin(); it != b.bits.rend(); ++it) s += static_cast<char>('0' + *it);
  return s;
}

Bin parse_bin(std::string_view text) {
  if (text.substr(0, 2) != "0b" || text.size() == 2) throw DomainError("not a binary literal: " + std::string(text));
  Bin b;
  for (auto it = text.rbegin(); it != text.rend() - 2; ++it) {
    if (*it != '0' && *it != '1') throw DomainError("not a binary literal: " + std::string(text));
    b.bits.push_back(static_cast<std::uint8_t>(*it - '0'));
  }
  if (b.bits.size() > 1 && b.bits.back() == 0) throw DomainError("leading zero in binary literal: " + std::string(text));
  if (b.bits.size() == 1 && b.bits.back() == 0) b.bits.clear();
  return b;
}

}  // namespace docon
