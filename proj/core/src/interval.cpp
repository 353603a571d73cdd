#include "toruscm/interval.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace toruscm {

int Interval::certain_sign() const {
  if (lo > 0) return 1;
  if (hi < 0) return -1;
  return 0;
}

Interval Interval::operator*(const Interval& o) const {
  if (lo == hi && o.lo == o.hi) return Interval(lo * o.lo);
  Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
  return {std::min({a, b, c, d}), std::max({a, b, c, d})};
}

Rational Box::diameter_bound() const { return std::max(re.width(), im.width()); }

Box Box::operator*(const Box& o) const {
  return {re * o.re - im * o.im, re * o.im + im * o.re};
}

Box Box::operator*(const Rational& s) const {
  return {re * Interval(s), im * Interval(s)};
}

std::string Box::to_string() const {
  std::ostringstream os;
  os << std::setprecision(12) << "[" << to_long_double(re.lo) << ", " << to_long_double(re.hi)
     << "] + i[" << to_long_double(im.lo) << ", " << to_long_double(im.hi) << "]";
  return os.str();
}

Box eval_coeffs(const std::vector<Rational>& coeffs, const Box& z) {
  Box acc = Box::point(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + Box::point(*it);
  return acc;
}

Box eval(const Poly& p, const Box& z) { return eval_coeffs(p.coeffs(), z); }

Interval eval(const Poly& p, const Interval& x) {
  Interval acc(0);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Interval(*it);
  return acc;
}

}  // namespace toruscm
