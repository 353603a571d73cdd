#include "toruscm/random.hpp"

namespace toruscm {

long SeededRng::uniform(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return lo + static_cast<long>(v % span);
}

Rational SeededRng::small_rational() {
  long num = uniform(-8, 8);
  long den = uniform(1, 8);
  return make_rational(num, den);
}

}  // namespace toruscm
