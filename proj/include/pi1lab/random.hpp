// Seeded random source whose output is fixed by the standard: std::mt19937_64
// is fully specified, and the helpers below avoid the implementation-defined
// std::*_distribution classes so identical seeds give identical reports on
// every platform.

#pragma once

#include "pi1lab/rational.hpp"

#include <cstdint>
#include <random>

namespace pi1lab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [0, n).
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  bool coin() { return (next() & 1U) != 0; }
  /// Dyadic rational in (0, 1] with 2^20 as denominator.
  Rational unit_fraction() {
    return make_rational(static_cast<long>(next() % kScale) + 1, static_cast<long>(kScale));
  }
  /// Dyadic rational in (-1, 1).
  Rational signed_fraction() {
    const long k = static_cast<long>(next() % (2 * kScale - 1)) - static_cast<long>(kScale - 1);
    return make_rational(k, static_cast<long>(kScale));
  }

 private:
  static constexpr std::uint64_t kScale = 1U << 20;
  std::mt19937_64 engine_;
};

}  // namespace pi1lab
