#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "docon/decision.hpp"

namespace docon {

/// A carrier with decidable equality and a deterministic sampler.
///
/// `enumerate(bound)` is optional: when present it lists a finite, duplicate-free
/// fragment of the carrier whose size grows with `bound` (used for exhaustive
/// law sweeps). `variant(x, salt)` is optional too: it yields an element
/// eq-equal to `x` that may differ in representation (e.g. a residue stored as
/// value + k·modulus), which is what makes congruence checks non-trivial.
template <class T>
struct DSet {
  std::string name;
  std::function<bool(const T&, const T&)> equal;
  std::function<std::vector<T>(std::uint64_t seed, std::size_t count)> sample;
  std::function<std::vector<T>(std::size_t bound)> enumerate;
  std::function<T(const T&, std::uint64_t salt)> variant;
  std::function<std::string(const T&)> show;
};

template <class T>
Decision<> decide_eq(const DSet<T>& d, const T& x, const T& y) {
  if (d.equal(x, y)) return Decision<>::yes(Evidence{d.show(x) + " ≈ " + d.show(y)});
  return Decision<>::no(Evidence{d.show(x) + " ≉ " + d.show(y)});
}

}  // namespace docon
