#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace toruscm {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical p/q construction; q must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);

// "p/q", "p" or a decimal-free integer string. Throws InvalidArgument.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

// Least common multiple of the denominators.
Integer common_denominator(const std::vector<Rational>& xs);

// Round x to a multiple of 2^-bits (toward -infinity).
Rational dyadic_floor(const Rational& x, long bits);

// 2^e for signed e.
Rational pow2(long e);

// Smallest integer >= sqrt(x) scaled: returns r >= sqrt(x) with r rational and
// r - sqrt(x) <= 2^-bits * max(1, sqrt(x)).
Rational sqrt_upper(const Rational& x, long bits);

long double to_long_double(const Rational& x);

}  // namespace toruscm
