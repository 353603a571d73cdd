#include "toruscm/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <optional>

#include "toruscm/errors.hpp"

namespace toruscm {

namespace {

struct CQ {
  Rational re, im;
};

CQ operator+(const CQ& a, const CQ& b) { return {a.re + b.re, a.im + b.im}; }
CQ operator-(const CQ& a, const CQ& b) { return {a.re - b.re, a.im - b.im}; }
CQ operator*(const CQ& a, const CQ& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
CQ operator/(const CQ& a, const CQ& b) {
  Rational n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
Rational norm2(const CQ& a) { return a.re * a.re + a.im * a.im; }

CQ eval(const Poly& p, const CQ& z) {
  CQ acc{0, 0};
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + CQ{*it, 0};
  return acc;
}

CQ round(const CQ& z, long bits) { return {dyadic_floor(z.re, bits), dyadic_floor(z.im, bits)}; }

using CLD = std::complex<long double>;

std::vector<CQ> initial_approximations(const Poly& p) {
  int n = p.degree();
  std::vector<long double> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = to_long_double(p.coeff(k) / p.leading());
  long double bound = 1;
  for (int k = 0; k < n; ++k) bound = std::max(bound, 1 + std::fabs(c[static_cast<std::size_t>(k)]));
  auto peval = [&](CLD z) {
    CLD acc = 0;
    for (int k = n; k >= 0; --k) acc = acc * z + c[static_cast<std::size_t>(k)];
    return acc;
  };
  std::vector<CLD> z(static_cast<std::size_t>(n));
  CLD seed(0.4L, 0.9L);
  CLD w = 1;
  for (int i = 0; i < n; ++i) {
    w *= seed;
    z[static_cast<std::size_t>(i)] = w * (bound / 2);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (int i = 0; i < n; ++i) {
      CLD denom = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      if (std::abs(denom) == 0) denom = 1e-30L;
      CLD step = peval(z[static_cast<std::size_t>(i)]) / denom;
      z[static_cast<std::size_t>(i)] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-18L * bound) break;
  }
  std::vector<CQ> out;
  for (const auto& zi : z) {
    auto to_q = [](long double v) {
      if (!std::isfinite(v)) v = 0;
      long double scaled = std::ldexp(v, 60);
      Integer num(static_cast<double>(std::floor(scaled)));
      return make_rational(num, 1) * pow2(-60);
    };
    out.push_back({to_q(zi.real()), to_q(zi.imag())});
  }
  return out;
}

struct Attempt {
  std::vector<CQ> corrections;  // Weierstrass corrections W_i
  std::optional<std::vector<RootEnclosure>> boxes;
};

Attempt certify(const Poly& p, const std::vector<CQ>& z, int real_count, const Rational& width) {
  const std::size_t n = z.size();
  Attempt out;
  out.corrections.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    CQ denom{p.leading(), 0};
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) denom = denom * (z[i] - z[j]);
    if (denom.re == 0 && denom.im == 0) return out;  // coincident approximations
    out.corrections[i] = eval(p, z[i]) / denom;
  }
  // Gershgorin discs of diag(z) - W 1^T: centre z_i - W_i, radius (n-1)|W_i|.
  std::vector<CQ> centre(n);
  std::vector<Rational> radius(n);
  for (std::size_t i = 0; i < n; ++i) {
    centre[i] = z[i] - out.corrections[i];
    radius[i] = sqrt_upper(norm2(out.corrections[i]), 40) * static_cast<long>(n - 1);
  }
  std::vector<RootEnclosure> boxes(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (2 * radius[i] >= width) return out;
    boxes[i].box = Box({centre[i].re - radius[i], centre[i].re + radius[i]},
                       {centre[i].im - radius[i], centre[i].im + radius[i]});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (boxes[i].box.overlaps(boxes[j].box)) return out;
  int nonreal = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool off_axis = abs(centre[i].im) > radius[i];
    boxes[i].is_real = !off_axis;
    if (off_axis) ++nonreal;
  }
  if (nonreal != static_cast<int>(n) - real_count) return out;
  for (auto& b : boxes)
    if (b.is_real) b.box.im = Interval(0);
  out.boxes = std::move(boxes);
  return out;
}

Rational max_norm2(const std::vector<CQ>& w) {
  Rational m = 0;
  for (const auto& x : w) m = std::max(m, norm2(x));
  return m;
}

// Bits of accuracy implied by the largest correction.
long accuracy_bits(const Rational& max_w2) {
  if (max_w2 == 0) return 4096;
  long double v = to_long_double(max_w2);
  if (v <= 0) return 4096;
  return static_cast<long>(-0.5L * std::log2(v));
}

std::vector<RootEnclosure> run(const Poly& p, std::vector<CQ> z, const Rational& width) {
  const int real_count = count_real_roots(p);
  for (int iter = 0; iter < 400; ++iter) {
    Attempt a = certify(p, z, real_count, width);
    if (a.boxes) return *a.boxes;
    if (a.corrections.empty() || a.corrections.size() != z.size()) {
      // Coincident approximations; perturb deterministically.
      for (std::size_t i = 0; i < z.size(); ++i) z[i].im += make_rational(static_cast<long>(i) + 1, 1000);
      continue;
    }
    long acc = std::clamp<long>(accuracy_bits(max_norm2(a.corrections)), 0, 1 << 16);
    long bits = std::max<long>(64, 2 * acc + 64);
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = round(z[i] - a.corrections[i], bits);
  }
  throw Error(ErrorCode::InvalidArgument, "root isolation did not converge for " + p.to_string());
}

long double argument(const Box& b) {
  long double a = std::atan2(to_long_double(b.im.mid()), to_long_double(b.re.mid()));
  if (a < 0) a += 2 * M_PIl;
  return a;
}

long double modulus(const Box& b) {
  return std::hypot(to_long_double(b.re.mid()), to_long_double(b.im.mid()));
}

Box intersect(const Box& a, const Box& b) {
  return {{std::max(a.re.lo, b.re.lo), std::min(a.re.hi, b.re.hi)},
          {std::max(a.im.lo, b.im.lo), std::min(a.im.hi, b.im.hi)}};
}

}  // namespace

std::vector<RootEnclosure> isolate_roots(const Poly& p, const Rational& width) {
  if (p.degree() < 1) throw Error(ErrorCode::InvalidArgument, "isolate_roots needs degree >= 1");
  if (!is_squarefree(p)) throw Error(ErrorCode::NotSquarefree, p.to_string());
  auto roots = run(p, initial_approximations(p), width);
  std::vector<std::size_t> order(roots.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ra = roots[a];
    const auto& rb = roots[b];
    if (ra.is_real != rb.is_real) return ra.is_real;
    if (ra.is_real) return ra.box.re.hi < rb.box.re.lo;
    long double aa = argument(ra.box), ab = argument(rb.box);
    if (std::fabs(aa - ab) > 1e-12L) return aa < ab;
    return modulus(ra.box) < modulus(rb.box);
  });
  std::vector<RootEnclosure> out;
  for (auto i : order) out.push_back(roots[i]);
  return out;
}

std::vector<RootEnclosure> refine_roots(const Poly& p, const std::vector<RootEnclosure>& current,
                                        const Rational& width) {
  bool ok = true;
  for (const auto& r : current)
    if (r.box.diameter_bound() >= width) ok = false;
  if (ok) return current;
  std::vector<CQ> z;
  for (const auto& r : current) z.push_back({r.box.re.mid(), r.box.im.mid()});
  Rational w = width;
  for (int attempt = 0; attempt < 8; ++attempt, w *= pow2(-32)) {
    auto fresh = run(p, z, w);
    std::vector<RootEnclosure> out(current.size());
    std::vector<bool> used(current.size(), false);
    bool consistent = true;
    for (const auto& f : fresh) {
      std::optional<std::size_t> match;
      bool ambiguous = false;
      for (std::size_t j = 0; j < current.size(); ++j) {
        if (!f.box.overlaps(current[j].box)) continue;
        if (match) ambiguous = true;
        match = j;
      }
      if (ambiguous || !match || used[*match]) {
        consistent = false;
        break;
      }
      used[*match] = true;
      out[*match] = {intersect(f.box, current[*match].box), current[*match].is_real};
    }
    if (consistent) return out;
  }
  throw Error(ErrorCode::InvalidArgument, "root refinement could not be matched to enclosures");
}

}  // namespace toruscm
