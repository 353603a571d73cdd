#pragma once

#include <vector>

#include "toruscm/interval.hpp"
#include "toruscm/poly.hpp"

namespace toruscm {

struct RootEnclosure {
  Box box;       // contains exactly one root; real roots have im = [0, 0]
  bool is_real;
};

// Certified isolation of all roots of a squarefree polynomial; every box side is < width.
// Order: real roots ascending, then non-real roots by argument in (0, 2pi), ties by modulus.
std::vector<RootEnclosure> isolate_roots(const Poly& p, const Rational& width);

// Shrinks existing enclosures (same order, same roots) until every side is < width.
std::vector<RootEnclosure> refine_roots(const Poly& p, const std::vector<RootEnclosure>& current,
                                        const Rational& width);

}  // namespace toruscm
