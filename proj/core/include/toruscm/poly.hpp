#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toruscm/rational.hpp"

namespace toruscm {

// Dense univariate polynomial over Q, coefficients from degree 0 upward.
// The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int degree);
  static Poly x() { return monomial(1, 1); }
  static Poly from_integers(const std::vector<Integer>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  Rational leading() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& s) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Euclidean division; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  Poly derivative() const;
  Poly monic() const;
  Rational eval(const Rational& x) const;
  // p(q(x)).
  Poly compose(const Poly& q) const;
  bool has_integer_coeffs() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);

// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) monic.
struct ExtGcd {
  Poly g, s, t;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

bool is_squarefree(const Poly& p);

// Sturm sequence of a squarefree polynomial.
std::vector<Poly> sturm_sequence(const Poly& p);

// Number of distinct real roots of squarefree p.
int count_real_roots(const Poly& p);

// Discriminant up to sign, via the resultant with the derivative (Sylvester determinant free:
// computed as lc^(2n-2) * prod over Euclidean remainders). Used only as a denominator bound.
Integer discriminant_bound(const Poly& monic_integer_poly);

}  // namespace toruscm
