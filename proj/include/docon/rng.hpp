#pragma once

#include <cstdint>
#include <random>

namespace docon {

/// Seeded generator used by every sampler. mt19937_64's output sequence is
/// fixed by the standard; we avoid <random> distributions (whose algorithms
/// are implementation-defined) so samples are identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish value in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  /// Value in the closed range [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    return lo + static_cast<std::int64_t>(below(span));
  }

  bool coin() { return (engine_() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Mixes a base seed with a stream index so independent samplers do not
/// share a sequence.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace docon
