#pragma once

#include <cstdint>
#include <random>

#include "toruscm/rational.hpp"

namespace toruscm {

// Platform-independent sampling on top of mt19937_64 (whose output sequence is fixed by the standard).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi] by rejection sampling.
  long uniform(long lo, long hi);
  // Numerator uniform in [-8, 8], denominator uniform in [1, 8].
  Rational small_rational();

 private:
  std::mt19937_64 engine_;
};

}  // namespace toruscm
