#include "toruscm/numfield.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>

#include "toruscm/errors.hpp"

namespace toruscm {

std::string_view irreducibility_name(Irreducibility v) {
  switch (v) {
    case Irreducibility::Irreducible: return "irreducible";
    case Irreducibility::Reducible: return "reducible";
    case Irreducibility::Assumed: return "assumed";
  }
  return "assumed";
}

Rational default_width() {
  long bits = 64;
  if (const char* env = std::getenv("TORUSCM_PRECISION")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 8 && v <= 1 << 16) bits = v;
  }
  return pow2(-bits);
}

FieldPtr NumberField::rationals() {
  static const FieldPtr q = NumberField::make({0, 1}, std::nullopt);
  return q;
}

FieldPtr NumberField::make(const std::vector<Integer>& minpoly, std::optional<std::vector<Rational>> conj_image) {
  if (minpoly.size() < 2) throw Error(ErrorCode::InvalidArgument, "minimal polynomial must have degree >= 1");
  if (minpoly.back() != 1) throw Error(ErrorCode::InvalidArgument, "minimal polynomial must be monic");
  auto f = std::shared_ptr<NumberField>(new NumberField());
  f->minpoly_ = Poly::from_integers(minpoly);
  f->degree_ = f->minpoly_.degree();
  const int d = f->degree_;
  if (!is_squarefree(f->minpoly_)) throw Error(ErrorCode::NotSquarefree, f->minpoly_.to_string());

  // Reduction table x^k mod m for k = d .. 2d-2.
  if (d >= 2) {
    std::vector<Rational> cur(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) cur[static_cast<std::size_t>(i)] = -f->minpoly_.coeff(i);
    for (int k = d; k <= 2 * d - 2; ++k) {
      f->reduction_.push_back(cur);
      Rational top = cur[static_cast<std::size_t>(d - 1)];
      for (int i = d - 1; i >= 1; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
      cur[0] = 0;
      for (int i = 0; i < d; ++i) cur[static_cast<std::size_t>(i)] -= top * f->minpoly_.coeff(i);
    }
  }

  // Newton identities for Tr(x^k).
  f->power_traces_.assign(static_cast<std::size_t>(d), Rational(0));
  f->power_traces_[0] = d;
  for (int k = 1; k < d; ++k) {
    Rational s = Rational(k) * f->minpoly_.coeff(d - k);
    for (int i = 1; i < k; ++i) s += f->minpoly_.coeff(d - i) * f->power_traces_[static_cast<std::size_t>(k - i)];
    f->power_traces_[static_cast<std::size_t>(k)] = -s;
  }

  // Embeddings.
  auto roots = isolate_roots(f->minpoly_, default_width());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Embedding e;
    e.index = static_cast<int>(i) + 1;
    e.enclosure = roots[i].box;
    e.is_real = roots[i].is_real;
    e.conj_index = e.index;
    f->embeddings_.push_back(e);
  }
  for (Rational w = default_width();; w = w * w) {
    bool ok = true;
    auto embs = f->embeddings(w);
    for (auto& e : embs) {
      if (e.is_real) continue;
      int match = 0, count = 0;
      for (const auto& o : embs)
        if (!o.is_real && o.enclosure.overlaps(e.enclosure.conj())) {
          match = o.index;
          ++count;
        }
      if (count != 1) ok = false;
      f->embeddings_[static_cast<std::size_t>(e.index - 1)].conj_index = match;
    }
    if (ok) break;
  }

  if (d == 1) {
    f->conj_ = std::vector<Rational>{-f->minpoly_.coeff(0)};
    f->conj_compatible_ = true;
    return f;
  }
  if (conj_image) {
    if (static_cast<int>(conj_image->size()) != d)
      throw Error(ErrorCode::InvalidArgument, "conj image must have length " + std::to_string(d));
    f->conj_ = *conj_image;
    FieldPtr self = f;
    FieldElement img(self, *conj_image);
    if (!evaluate(f->minpoly_, img).is_zero())
      throw Error(ErrorCode::ConjNotAutomorphism, "minpoly(conj(x)) != 0");
    if (img.conj() != FieldElement::generator(self))
      throw Error(ErrorCode::ConjNotInvolution, "conj(conj(x)) != x");
    // Compare with complex conjugation embedding by embedding.
    bool compatible = true;
    for (const auto& e : f->embeddings_) {
      for (Rational w = default_width();; w = w * w) {
        auto embs = f->embeddings(w);
        Box image = evaluate(img, embs[static_cast<std::size_t>(e.index - 1)]);
        int count = 0, match = 0;
        for (const auto& o : embs)
          if (o.enclosure.overlaps(image)) {
            ++count;
            match = o.index;
          }
        if (count == 1) {
          if (match != e.conj_index) compatible = false;
          break;
        }
        if (w < pow2(-4096)) throw Error(ErrorCode::InvalidArgument, "could not match conj image to a root");
      }
    }
    f->conj_compatible_ = compatible;
  }
  return f;
}

std::vector<Embedding> NumberField::embeddings(const Rational& width) const {
  bool fine = true;
  for (const auto& e : embeddings_)
    if (e.enclosure.diameter_bound() >= width) fine = false;
  if (fine) return embeddings_;
  std::vector<RootEnclosure> cur;
  for (const auto& e : embeddings_) cur.push_back({e.enclosure, e.is_real});
  auto refined = refine_roots(minpoly_, cur, width);
  std::vector<Embedding> out = embeddings_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i].enclosure = refined[i].box;
  return out;
}

Embedding NumberField::embedding(int index) const {
  if (index < 1 || index > degree_)
    throw Error(ErrorCode::InvalidArgument, "embedding index " + std::to_string(index) + " out of range");
  return embeddings_[static_cast<std::size_t>(index - 1)];
}

Embedding NumberField::refine(const Embedding& e, const Rational& width) const {
  if (e.enclosure.diameter_bound() < width) return e;
  return embeddings(width)[static_cast<std::size_t>(e.index - 1)];
}

bool NumberField::same_as(const NumberField& o) const {
  if (this == &o) return true;
  if (degree_ == 1 && o.degree_ == 1) return true;
  if (minpoly_ != o.minpoly_) return false;
  if (conj_.has_value() != o.conj_.has_value()) return false;
  return !conj_ || *conj_ == *o.conj_;
}

Irreducibility NumberField::irreducibility(int degree_bound) const {
  return trial_irreducibility(minpoly_, degree_bound);
}

std::string NumberField::describe() const {
  if (degree_ == 1) return "Q";
  return "Q[x]/(" + minpoly_.to_string() + ")";
}

// ---------------------------------------------------------------------------

namespace {

const FieldPtr& common_field(const FieldElement& a, const FieldElement& b) {
  if (!a.valid() || !b.valid()) throw Error(ErrorCode::InvalidArgument, "uninitialised field element");
  if (a.field() == b.field() || a.field()->same_as(*b.field())) return a.field();
  if (a.field()->is_rationals()) return b.field();
  if (b.field()->is_rationals()) return a.field();
  throw Error(ErrorCode::FieldMismatch, a.field()->describe() + " vs " + b.field()->describe());
}

}  // namespace

FieldElement::FieldElement(FieldPtr field) : field_(std::move(field)) {
  c_.assign(static_cast<std::size_t>(field_->degree()), Rational(0));
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), c_(std::move(coords)) {
  const auto d = static_cast<std::size_t>(field_->degree());
  if (c_.size() > d) {
    // Reduce an over-long polynomial modulo m.
    Poly r = Poly(c_) % field_->minpoly();
    c_ = r.coeffs();
  }
  c_.resize(d, Rational(0));
}

FieldElement::FieldElement(FieldPtr field, const Rational& value) : FieldElement(std::move(field)) {
  c_[0] = value;
}

FieldElement FieldElement::generator(FieldPtr field) {
  if (field->degree() == 1) return FieldElement(field, -field->minpoly().coeff(0));
  FieldElement g(field);
  g.c_[1] = 1;
  return g;
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

bool FieldElement::is_rational() const {
  return std::all_of(c_.begin() + (c_.empty() ? 0 : 1), c_.end(), [](const Rational& x) { return x == 0; });
}

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::InvalidArgument, "element is not rational: " + to_string());
  return c_.empty() ? Rational(0) : c_[0];
}

FieldElement FieldElement::in_field(const FieldPtr& target) const {
  if (field_ == target || field_->same_as(*target)) return FieldElement(target, c_);
  return FieldElement(target, rational_value());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  const FieldPtr& f = common_field(*this, o);
  if (field_->degree() != o.field_->degree()) {
    return field_ == f ? *this + o.in_field(f) : in_field(f) + o;
  }
  std::vector<Rational> v = c_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.c_[i];
  return FieldElement(f, std::move(v));
}

FieldElement FieldElement::operator-() const {
  std::vector<Rational> v = c_;
  for (auto& x : v) x = -x;
  return FieldElement(field_, std::move(v));
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const Rational& s) const {
  std::vector<Rational> v = c_;
  for (auto& x : v) x *= s;
  return FieldElement(field_, std::move(v));
}

FieldElement operator*(const Rational& s, const FieldElement& x) { return x * s; }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  const FieldPtr& f = common_field(*this, o);
  if (field_->degree() != o.field_->degree()) {
    if (field_->is_rationals()) return o * c_[0];
    return *this * o.c_[0];
  }
  const int d = f->degree();
  if (d == 1) return FieldElement(f, c_[0] * o.c_[0]);
  std::vector<Rational> prod(static_cast<std::size_t>(2 * d - 1), Rational(0));
  for (int i = 0; i < d; ++i) {
    if (c_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (o.c_[static_cast<std::size_t>(j)] == 0) continue;
      prod[static_cast<std::size_t>(i + j)] += c_[static_cast<std::size_t>(i)] * o.c_[static_cast<std::size_t>(j)];
    }
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + d);
  const auto& red = f->reduction_table();
  for (int k = d; k <= 2 * d - 2; ++k) {
    const Rational& a = prod[static_cast<std::size_t>(k)];
    if (a == 0) continue;
    const auto& row = red[static_cast<std::size_t>(k - d)];
    for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] += a * row[static_cast<std::size_t>(i)];
  }
  return FieldElement(f, std::move(out));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::Singular, "inverse of zero");
  if (field_->degree() == 1) return FieldElement(field_, 1 / c_[0]);
  ExtGcd eg = ext_gcd(as_poly(), field_->minpoly());
  if (eg.g.degree() != 0) throw Error(ErrorCode::Singular, "zero divisor " + to_string());
  return FieldElement(field_, (eg.s % field_->minpoly()).coeffs());
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

bool FieldElement::operator==(const FieldElement& o) const {
  if (!valid() || !o.valid()) return valid() == o.valid();
  if (field_->degree() != o.field_->degree()) {
    if (field_->is_rationals()) return o.is_rational() && o.c_[0] == c_[0];
    if (o.field_->is_rationals()) return is_rational() && c_[0] == o.c_[0];
    return false;
  }
  return c_ == o.c_ && (field_ == o.field_ || field_->same_as(*o.field_));
}

FieldElement FieldElement::pow(unsigned e) const {
  FieldElement result(field_, Rational(1));
  FieldElement base = *this;
  while (e) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

FieldElement FieldElement::conj() const {
  if (field_->degree() == 1) return *this;
  if (!field_->has_conj()) throw Error(ErrorCode::InvalidArgument, "field has no conjugation");
  return evaluate(as_poly(), FieldElement(field_, field_->conj_image()));
}

std::string FieldElement::to_string() const {
  return as_poly().to_string("a");
}

FieldElement evaluate(const Poly& p, const FieldElement& x) {
  FieldElement acc(x.field());
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + FieldElement(x.field(), *it);
  return acc;
}

// ---------------------------------------------------------------------------

Box evaluate(const FieldElement& x, const Embedding& e) { return eval_coeffs(x.coords(), e.enclosure); }

Box evaluate(const FieldElement& x, const Embedding& e, const Rational& width) {
  return evaluate(x, x.field()->refine(e, width));
}

bool is_root_at(const Poly& g, const NumberField& field, int index) {
  const int k = g.degree();
  if (k <= 0) return false;
  if (k >= field.degree()) return true;
  for (long bits = 64; bits <= (1L << 16); bits *= 2) {
    auto embs = field.embeddings(pow2(-bits));
    std::vector<int> hits;
    for (const auto& e : embs)
      if (eval(g, e.enclosure).contains_zero()) hits.push_back(e.index);
    if (static_cast<int>(hits.size()) == k)
      return std::find(hits.begin(), hits.end(), index) != hits.end();
  }
  throw Error(ErrorCode::InvalidArgument, "zero test did not separate roots");
}

namespace {

bool is_zero_at(const FieldElement& x, const Embedding& e) {
  if (x.is_zero()) return true;
  if (x.is_rational()) return false;
  Poly g = gcd(x.field()->minpoly(), x.as_poly());
  return is_root_at(g, *x.field(), e.index);
}

int refine_sign(const FieldElement& x, const Embedding& e, bool imaginary) {
  for (long bits = 64; bits <= (1L << 16); bits *= 2) {
    Box b = evaluate(x, e, pow2(-bits));
    int s = imaginary ? b.im.certain_sign() : b.re.certain_sign();
    if (s != 0) return s;
  }
  throw Error(ErrorCode::InvalidArgument, "sign refinement did not terminate");
}

}  // namespace

bool is_real_under(const FieldElement& x, const Embedding& e) {
  if (x.is_rational() || e.is_real) return true;
  const NumberField& f = *x.field();
  if (f.has_conj() && f.conj_is_complex_conjugation()) return x.conj() == x;
  if (minimal_polynomial(x).degree() == f.degree()) return false;  // all conjugates distinct
  // sigma_e(x) real iff sigma_e(x) = sigma_conj(e)(x): test via the zero test on x - x at both.
  Box b = evaluate(x, e);
  if (b.im.certain_sign() != 0) return false;
  throw Error(ErrorCode::NotRealUnderEmbedding, "cannot decide reality of " + x.to_string());
}

int exact_sign(const FieldElement& x, const Embedding& e) {
  if (!is_real_under(x, e))
    throw Error(ErrorCode::NotRealUnderEmbedding, x.to_string() + " under embedding " + std::to_string(e.index));
  if (x.is_rational()) return sgn(x.rational_value());
  Box b = evaluate(x, e);
  if (int s = b.re.certain_sign(); s != 0) return s;
  if (is_zero_at(x, e)) return 0;
  return refine_sign(x, e, false);
}

int imag_sign(const FieldElement& x, const Embedding& e) {
  if (x.is_rational() || e.is_real) return 0;
  Box b = evaluate(x, e);
  if (int s = b.im.certain_sign(); s != 0) return s;
  if (is_real_under(x, e)) return 0;
  return refine_sign(x, e, true);
}

Rational trace_q(const FieldElement& x) {
  const auto& t = x.field()->power_traces();
  Rational s = 0;
  for (std::size_t i = 0; i < x.coords().size(); ++i) s += x.coords()[i] * t[i];
  return s;
}

std::pair<Rational, FieldElement> rational_part(const FieldElement& x) {
  Rational c = x.coords().empty() ? Rational(0) : x.coords()[0];
  return {c, x - FieldElement(x.field(), c)};
}

std::vector<std::vector<Rational>> multiplication_matrix(const FieldElement& x) {
  const int d = x.field()->degree();
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
  FieldElement gen = FieldElement::generator(x.field());
  FieldElement col = x;
  for (int k = 0; k < d; ++k) {
    for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = col.coords()[static_cast<std::size_t>(i)];
    if (d > 1) col = col * gen;
  }
  return m;
}

namespace {

// Incremental row echelon basis over Q used for dependency detection.
struct EchelonBasis {
  std::vector<std::vector<Rational>> rows;    // reduced vectors
  std::vector<int> pivots;
  std::vector<std::vector<Rational>> combos;  // row = combo . originals

  // Reduces v; returns coefficients expressing v as a combination of inserted vectors if dependent.
  std::optional<std::vector<Rational>> insert(std::vector<Rational> v, std::size_t count) {
    std::vector<Rational> combo(count + 1, Rational(0));
    combo[count] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rational& a = v[static_cast<std::size_t>(pivots[r])];
      if (a == 0) continue;
      Rational f = a / rows[r][static_cast<std::size_t>(pivots[r])];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
      for (std::size_t j = 0; j < combos[r].size(); ++j) combo[j] -= f * combos[r][j];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& a) { return a != 0; });
    if (it == v.end()) return combo;  // combo . originals = 0
    pivots.push_back(static_cast<int>(it - v.begin()));
    rows.push_back(std::move(v));
    combos.push_back(std::move(combo));
    return std::nullopt;
  }
};

}  // namespace

Poly minimal_polynomial(const FieldElement& x) {
  const int d = x.field()->degree();
  EchelonBasis eb;
  FieldElement p(x.field(), Rational(1));
  for (int k = 0; k <= d; ++k) {
    auto dep = eb.insert(p.coords(), static_cast<std::size_t>(k));
    if (dep) {
      Poly mp(*dep);
      return mp.monic();
    }
    p = p * x;
  }
  throw Error(ErrorCode::InvalidArgument, "minimal polynomial search exceeded degree");
}

std::optional<std::vector<Rational>> power_coordinates(const FieldElement& x, const FieldElement& gen, int k) {
  EchelonBasis eb;
  FieldElement p(gen.field(), Rational(1));
  for (int i = 0; i < k; ++i) {
    if (eb.insert(p.coords(), static_cast<std::size_t>(i)))
      throw Error(ErrorCode::InvalidArgument, "powers of the generator are dependent");
    p = p * gen;
  }
  auto dep = eb.insert(x.coords(), static_cast<std::size_t>(k));
  if (!dep) return std::nullopt;
  // dep . (1, gen, ..., gen^{k-1}, x) = 0 with last coefficient 1.
  std::vector<Rational> out(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out[static_cast<std::size_t>(i)] = -(*dep)[static_cast<std::size_t>(i)] / (*dep)[static_cast<std::size_t>(k)];
  return out;
}

// ---------------------------------------------------------------------------
// Trial factorisation through products of root enclosures.

namespace {

struct RootSet {
  std::vector<RootEnclosure> roots;
  std::vector<std::vector<int>> orbits;  // {real} or {z, conj z}
  std::vector<int> orbit_of;
};

RootSet root_orbits(const Poly& p, const Rational& width) {
  RootSet rs;
  Rational w = width;
  rs.roots = isolate_roots(p, default_width());
  for (int attempt = 0; attempt < 16; ++attempt, w = w * w) {
    rs.roots = refine_roots(p, rs.roots, w);
    rs.orbits.clear();
    rs.orbit_of.assign(rs.roots.size(), -1);
    bool ok = true;
    for (std::size_t i = 0; i < rs.roots.size() && ok; ++i) {
      if (rs.orbit_of[i] >= 0) continue;
      if (rs.roots[i].is_real) {
        rs.orbit_of[i] = static_cast<int>(rs.orbits.size());
        rs.orbits.push_back({static_cast<int>(i)});
        continue;
      }
      int match = -1, count = 0;
      for (std::size_t j = 0; j < rs.roots.size(); ++j)
        if (j != i && !rs.roots[j].is_real && rs.roots[j].box.overlaps(rs.roots[i].box.conj())) {
          match = static_cast<int>(j);
          ++count;
        }
      if (count != 1 || rs.orbit_of[static_cast<std::size_t>(match)] >= 0) {
        ok = false;
        break;
      }
      rs.orbit_of[i] = rs.orbit_of[static_cast<std::size_t>(match)] = static_cast<int>(rs.orbits.size());
      rs.orbits.push_back({static_cast<int>(i), match});
    }
    if (ok) return rs;
  }
  throw Error(ErrorCode::InvalidArgument, "could not pair conjugate roots");
}

enum class Candidate { NotFactor, Factor, NeedPrecision };

Candidate test_subset(const Poly& p, const RootSet& rs, const std::vector<int>& subset, Poly* out) {
  std::vector<Box> c{Box::point(1)};
  for (int idx : subset) {
    const Box& r = rs.roots[static_cast<std::size_t>(idx)].box;
    std::vector<Box> next(c.size() + 1, Box::point(0));
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j + 1] = next[j + 1] + c[j];
      next[j] = next[j] - c[j] * r;
    }
    c = std::move(next);
  }
  std::vector<Integer> coeffs;
  for (const auto& b : c) {
    if (!b.im.contains_zero()) return Candidate::NotFactor;
    if (b.re.width() >= Rational(1, 2)) return Candidate::NeedPrecision;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), b.re.hi.get_num_mpz_t(), b.re.hi.get_den_mpz_t());
    if (Rational(fl) < b.re.lo) return Candidate::NotFactor;
    coeffs.push_back(fl);
  }
  Poly f = Poly::from_integers(coeffs);
  if (!(p % f).is_zero()) return Candidate::NotFactor;
  *out = f;
  return Candidate::Factor;
}

// Calls visit on every union of orbits with total size k; visit returns true to stop.
bool for_each_orbit_union(const RootSet& rs, int k, int required_orbit,
                          const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> chosen;
  const int n_orbits = static_cast<int>(rs.orbits.size());
  std::function<bool(int, int)> rec = [&](int start, int remaining) -> bool {
    if (remaining == 0) {
      if (required_orbit >= 0) {
        bool has = false;
        for (int r : chosen)
          if (rs.orbit_of[static_cast<std::size_t>(r)] == required_orbit) has = true;
        if (!has) return false;
      }
      return visit(chosen);
    }
    for (int o = start; o < n_orbits; ++o) {
      const auto& orb = rs.orbits[static_cast<std::size_t>(o)];
      int sz = static_cast<int>(orb.size());
      if (sz > remaining) continue;
      for (int r : orb) chosen.push_back(r);
      bool stop = rec(o + 1, remaining - sz);
      for (int i = 0; i < sz; ++i) chosen.pop_back();
      if (stop) return true;
    }
    return false;
  };
  return rec(0, k);
}

Rational search_width(const Poly& p) {
  Rational bound = 1;
  for (const auto& c : p.coeffs()) bound = std::max(bound, Rational(Rational(abs(c)) + 1));
  long bits = 64 + 2 * p.degree() * static_cast<long>(mpz_sizeinbase(bound.get_num_mpz_t(), 2) + 1);
  return pow2(-bits);
}

// Searches for a monic factor of degree k (optionally vanishing at a given root).
std::optional<Poly> find_factor(const Poly& p, int k, int required_root) {
  Rational w = search_width(p);
  for (int attempt = 0; attempt < 8; ++attempt, w = w * w) {
    RootSet rs = root_orbits(p, w);
    int req_orbit = required_root >= 0 ? rs.orbit_of[static_cast<std::size_t>(required_root)] : -1;
    bool need_precision = false;
    std::optional<Poly> found;
    for_each_orbit_union(rs, k, req_orbit, [&](const std::vector<int>& subset) {
      Poly f;
      switch (test_subset(p, rs, subset, &f)) {
        case Candidate::Factor: found = f; return true;
        case Candidate::NeedPrecision: need_precision = true; return true;
        case Candidate::NotFactor: return false;
      }
      return false;
    });
    if (found) return found;
    if (!need_precision) return std::nullopt;
  }
  throw Error(ErrorCode::InvalidArgument, "trial factorisation needed excessive precision");
}

}  // namespace

Poly factor_containing_root(const Poly& p, int root_index) {
  if (!p.has_integer_coeffs() || p.leading() != 1)
    throw Error(ErrorCode::InvalidArgument, "factorisation expects a monic integer polynomial");
  for (int k = 1; k < p.degree(); ++k)
    if (auto f = find_factor(p, k, root_index)) return *f;
  return p;
}

Irreducibility trial_irreducibility(const Poly& p, int degree_bound) {
  if (p.degree() <= 1) return Irreducibility::Irreducible;
  int limit = p.degree() / 2;
  int k_max = std::min(limit, degree_bound);
  for (int k = 1; k <= k_max; ++k)
    if (find_factor(p, k, -1)) return Irreducibility::Reducible;
  return k_max == limit ? Irreducibility::Irreducible : Irreducibility::Assumed;
}

// ---------------------------------------------------------------------------

std::vector<FieldElement> roots_in_field(const Poly& h, const FieldPtr& field) {
  using C = std::complex<long double>;
  const int d = field->degree();
  std::vector<FieldElement> found;
  auto add = [&](const FieldElement& r) {
    if (!evaluate(h, r).is_zero()) return;
    for (const auto& f : found)
      if (f == r) return;
    found.push_back(r);
  };
  if (d == 1) {
    // Rational roots p/q have q dividing the leading coefficient of the integer-scaled polynomial.
    Poly hi = h * Rational(common_denominator(h.coeffs()));
    Integer lead = abs(hi.leading().get_num());
    for (const auto& r : isolate_roots(h, pow2(-64))) {
      if (!r.is_real) continue;
      for (Integer q = 1; q <= lead; ++q) {
        Rational s = r.box.re.mid() * Rational(q) + Rational(1, 2);
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
        Rational cand = make_rational(fl, q);
        if (h.eval(cand) == 0) add(FieldElement(field, cand));
      }
    }
    return found;
  }
  auto embs = field->embeddings(pow2(-96));
  std::vector<C> alpha;
  for (const auto& e : embs) alpha.emplace_back(to_long_double(e.enclosure.re.mid()), to_long_double(e.enclosure.im.mid()));
  // Inverse Vandermonde by Gauss-Jordan with partial pivoting.
  std::vector<std::vector<C>> a(static_cast<std::size_t>(d), std::vector<C>(static_cast<std::size_t>(2 * d)));
  for (int i = 0; i < d; ++i) {
    C pw = 1;
    for (int k = 0; k < d; ++k) {
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = pw;
      pw *= alpha[static_cast<std::size_t>(i)];
    }
    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(d + i)] = 1;
  }
  for (int col = 0; col < d; ++col) {
    int piv = col;
    for (int r = col + 1; r < d; ++r)
      if (std::abs(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) > std::abs(a[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)])) piv = r;
    std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(piv)]);
    C inv = C(1) / a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    for (auto& v : a[static_cast<std::size_t>(col)]) v *= inv;
    for (int r = 0; r < d; ++r) {
      if (r == col) continue;
      C f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (f == C(0)) continue;
      for (int j = 0; j < 2 * d; ++j) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -= f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
    }
  }
  // a[k][d + i] = (V^-1)_{k i}: coordinate k of the element whose i-th image is v_i.
  auto hroots_enc = isolate_roots(h, pow2(-96));
  std::vector<C> hroots;
  for (const auto& r : hroots_enc) hroots.emplace_back(to_long_double(r.box.re.mid()), to_long_double(r.box.im.mid()));
  auto nearest = [&](C z) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < hroots.size(); ++j)
      if (std::abs(hroots[j] - z) < std::abs(hroots[best] - z)) best = j;
    return best;
  };
  std::vector<int> reps;
  for (const auto& e : embs)
    if (e.is_real || e.index < e.conj_index) reps.push_back(e.index - 1);
  Integer disc = discriminant_bound(field->minpoly());
  Integer hden = 1;
  // h monic integer: roots in the field are algebraic integers, coordinates in (1/disc) Z.
  if (!(h.has_integer_coeffs() && h.leading() == 1)) hden = common_denominator(h.coeffs()) * abs(h.leading().get_num());
  const Integer denom = disc * hden * hden;
  const long double dscale = to_long_double(Rational(denom));
  std::vector<std::size_t> choice(reps.size(), 0);
  std::vector<C> v(static_cast<std::size_t>(d));
  while (true) {
    bool admissible = true;
    for (std::size_t t = 0; t < reps.size(); ++t) {
      int i = reps[t];
      C val = hroots[choice[t]];
      const auto& e = embs[static_cast<std::size_t>(i)];
      if (e.is_real && !hroots_enc[choice[t]].is_real) admissible = false;
      v[static_cast<std::size_t>(i)] = val;
      if (!e.is_real) v[static_cast<std::size_t>(e.conj_index - 1)] = hroots[nearest(std::conj(val))];
    }
    if (admissible) {
      std::vector<Rational> coords(static_cast<std::size_t>(d));
      bool plausible = true;
      for (int k = 0; k < d && plausible; ++k) {
        C s = 0;
        for (int i = 0; i < d; ++i) s += a[static_cast<std::size_t>(k)][static_cast<std::size_t>(d + i)] * v[static_cast<std::size_t>(i)];
        long double scaled = s.real() * dscale;
        long double r = std::round(scaled);
        if (std::fabs(s.imag()) > 1e-6L || std::fabs(scaled - r) > 1e-4L || std::fabs(r) > 1e18L) {
          plausible = false;
          break;
        }
        coords[static_cast<std::size_t>(k)] = make_rational(Integer(static_cast<long>(std::llround(r))), denom);
      }
      if (plausible) add(FieldElement(field, coords));
    }
    std::size_t t = 0;
    while (t < choice.size() && ++choice[t] == hroots.size()) choice[t++] = 0;
    if (t == choice.size()) break;
  }
  return found;
}

}  // namespace toruscm
