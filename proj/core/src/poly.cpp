#include "toruscm/poly.hpp"

#include <sstream>

#include "toruscm/errors.hpp"

namespace toruscm {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return c_[static_cast<std::size_t>(k)];
}

Rational Poly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return Poly(std::move(v));
}

Poly Poly::operator-() const {
  std::vector<Rational> v = c_;
  for (auto& x : v) x = -x;
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return Poly(std::move(v));
}

Poly Poly::operator*(const Rational& s) const {
  std::vector<Rational> v = c_;
  for (auto& x : v) x *= s;
  return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> r = c_;
  int dd = d.degree();
  int n = degree();
  if (n < dd) return {Poly(), *this};
  std::vector<Rational> q(static_cast<std::size_t>(n - dd + 1), Rational(0));
  Rational inv_lc = 1 / d.leading();
  for (int k = n; k >= dd; --k) {
    Rational f = r[static_cast<std::size_t>(k)] * inv_lc;
    if (f == 0) continue;
    q[static_cast<std::size_t>(k - dd)] = f;
    for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(k - dd + j)] -= f * d.c_[static_cast<std::size_t>(j)];
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / leading());
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::compose(const Poly& q) const {
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(*it);
  return acc;
}

bool Poly::has_integer_coeffs() const {
  for (const auto& x : c_)
    if (x.get_den() != 1) return false;
  return true;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeff(k);
    if (c == 0) continue;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0 || a != 1) os << a.get_str();
    if (k > 0 && a != 1) os << "*";
    if (k > 0) os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(1), s1;
  Poly t0, t1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

bool is_squarefree(const Poly& p) {
  if (p.degree() <= 0) return !p.is_zero();
  return gcd(p, p.derivative()).degree() == 0;
}

std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    Poly r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

namespace {

int sign_changes_at_infinity(const std::vector<Poly>& seq, bool positive) {
  int changes = 0;
  int last = 0;
  for (const auto& q : seq) {
    if (q.is_zero()) continue;
    int s = sgn(q.leading());
    if (!positive && q.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int count_real_roots(const Poly& p) {
  if (p.degree() <= 0) return 0;
  auto seq = sturm_sequence(p);
  return sign_changes_at_infinity(seq, false) - sign_changes_at_infinity(seq, true);
}

Integer discriminant_bound(const Poly& p) {
  // |disc| <= prod |p'(alpha_i)| ; use the resultant through the Euclidean algorithm over Q.
  // res(a, b) for a of degree n, b of degree m: res(a,b) = (-1)^(nm) lc(b)^(n-deg r) res(b, r).
  Poly a = p, b = p.derivative();
  Rational res = 1;
  while (true) {
    int n = a.degree(), m = b.degree();
    if (m < 0) return 0;
    if (m == 0) {
      Rational f = 1;
      for (int i = 0; i < n; ++i) f *= b.leading();
      res *= f;
      break;
    }
    Poly r = a % b;
    if (r.is_zero()) return 0;
    int k = r.degree();
    Rational f = 1;
    for (int i = 0; i < n - k; ++i) f *= b.leading();
    if ((n * m) % 2 == 1) f = -f;
    res *= f;
    a = std::move(b);
    b = std::move(r);
  }
  Integer out = abs(res.get_num());
  return out;
}

}  // namespace toruscm
