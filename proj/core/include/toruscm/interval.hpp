#pragma once

#include <string>

#include "toruscm/poly.hpp"
#include "toruscm/rational.hpp"

namespace toruscm {

// Closed interval [lo, hi] with exact rational endpoints.
struct Interval {
  Rational lo, hi;

  Interval() = default;
  Interval(const Rational& a) : lo(a), hi(a) {}
  Interval(const Rational& a, const Rational& b) : lo(a), hi(b) {}

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  // -1 / +1 when the interval excludes 0, otherwise 0.
  int certain_sign() const;

  Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
  Interval operator-(const Interval& o) const { return {lo - o.hi, hi - o.lo}; }
  Interval operator-() const { return {-hi, -lo}; }
  Interval operator*(const Interval& o) const;
};

// Rectangle re x im in the complex plane.
struct Box {
  Interval re, im;

  Box() = default;
  Box(const Interval& r, const Interval& i) : re(r), im(i) {}
  static Box point(const Rational& a, const Rational& b = 0) { return {Interval(a), Interval(b)}; }

  bool overlaps(const Box& o) const { return re.overlaps(o.re) && im.overlaps(o.im); }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  Rational diameter_bound() const;  // max side length
  Box conj() const { return {re, -im}; }

  Box operator+(const Box& o) const { return {re + o.re, im + o.im}; }
  Box operator-(const Box& o) const { return {re - o.re, im - o.im}; }
  Box operator*(const Box& o) const;
  Box operator*(const Rational& s) const;

  std::string to_string() const;
};

Box eval(const Poly& p, const Box& z);
Box eval_coeffs(const std::vector<Rational>& coeffs, const Box& z);
Interval eval(const Poly& p, const Interval& x);

}  // namespace toruscm
