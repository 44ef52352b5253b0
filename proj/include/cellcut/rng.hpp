#pragma once

#include <cstdint>
#include <random>

namespace cellcut {

/// Portable seeded generator.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Bounded integers use rejection sampling and doubles take the top
/// 53 bits, so results do not depend on the standard library's distribution
/// implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo);
    if (span == UINT64_MAX) return static_cast<std::int64_t>(engine_());
    return lo + static_cast<std::int64_t>(below(span + 1));
  }

  /// Uniform integer in [0, 2^bits - 1], bits in [0, 64].
  std::uint64_t bits(unsigned bits) {
    if (bits == 0) return 0;
    const std::uint64_t x = engine_();
    return bits >= 64 ? x : x >> (64 - bits);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cellcut
