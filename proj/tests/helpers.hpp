#pragma once

#include <complex>
#include <random>
#include <vector>

#include "toruscm/matrix.hpp"

namespace testing_support {

using toruscm::FieldElement;
using toruscm::FieldMatrix;
using toruscm::FieldPtr;
using toruscm::Integer;
using toruscm::IntMatrix;
using toruscm::NumberField;
using toruscm::Rational;

inline Rational q(long n, long d = 1) { return toruscm::make_rational(n, d); }

inline FieldPtr gaussian() { return NumberField::make({1, 0, 1}, std::vector<Rational>{0, -1}); }
inline FieldPtr zeta5() { return NumberField::make({1, 1, 1, 1, 1}, std::vector<Rational>{-1, -1, -1, -1}); }
inline FieldPtr sqrt5() { return NumberField::make({-5, 0, 1}, std::vector<Rational>{0, 1}); }

inline FieldMatrix rat(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (long v : row) r.back().emplace_back(v);
  }
  return FieldMatrix::from_rationals(r);
}

inline long double approx(const Rational& x) { return toruscm::to_long_double(x); }

inline std::complex<long double> centre(const toruscm::Box& b) {
  return {approx(b.re.mid()), approx(b.im.mid())};
}

}  // namespace testing_support
