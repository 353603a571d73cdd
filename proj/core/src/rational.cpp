#include "toruscm/rational.hpp"

#include <cctype>
#include <cmath>

#include "toruscm/errors.hpp"

namespace toruscm {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string s) {
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den))
    throw Error(ErrorCode::InvalidArgument, "not a rational: '" + text + "'");
  return make_rational(parse_integer(num), parse_integer(den));
}

std::string to_string(const Rational& x) { return x.get_str(); }
std::string to_string(const Integer& x) { return x.get_str(); }

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer common_denominator(const std::vector<Rational>& xs) {
  Integer d = 1;
  for (const auto& x : xs) d = lcm(d, x.get_den());
  return d;
}

Rational pow2(long e) {
  Integer p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
  return e >= 0 ? Rational(p) : make_rational(1, p);
}

Rational dyadic_floor(const Rational& x, long bits) {
  Rational scaled = x * pow2(bits);
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return Rational(f) * pow2(-bits);
}

Rational sqrt_upper(const Rational& x, long bits) {
  if (x <= 0) return 0;
  // sqrt(x) = sqrt(n*d)/d; scale n*d by 4^k so the integer root has enough bits.
  Integer nd = x.get_num() * x.get_den();
  long k = bits + 2;
  Integer scaled = nd;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * k));
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  if (root * root != scaled) root += 1;
  return make_rational(root, x.get_den()) * pow2(-k);
}

long double to_long_double(const Rational& x) {
  // mpf avoids overflow for large numerators; double mantissa precision suffices here.
  mpf_class f(x, 128);
  long exp = 0;
  double mant = mpf_get_d_2exp(&exp, f.get_mpf_t());
  return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
}

}  // namespace toruscm
