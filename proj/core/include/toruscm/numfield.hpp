#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toruscm/interval.hpp"
#include "toruscm/poly.hpp"
#include "toruscm/rational.hpp"
#include "toruscm/roots.hpp"

namespace toruscm {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

struct Embedding {
  int index = 0;       // 1-based
  Box enclosure;       // contains the image of the generator
  bool is_real = false;
  int conj_index = 0;  // index of the complex-conjugate embedding (itself when real)
};

enum class Irreducibility { Irreducible, Reducible, Assumed };
std::string_view irreducibility_name(Irreducibility v);

// Q[x]/(m) for a monic squarefree integer polynomial m, optionally with an involution conj.
class NumberField {
 public:
  // Degree-1 fields are all identified with Q.
  static FieldPtr make(const std::vector<Integer>& minpoly,
                       std::optional<std::vector<Rational>> conj_image = std::nullopt);
  static FieldPtr rationals();

  int degree() const { return degree_; }
  const Poly& minpoly() const { return minpoly_; }
  bool has_conj() const { return conj_.has_value(); }
  const std::vector<Rational>& conj_image() const { return *conj_; }
  // True when conj agrees with complex conjugation under every embedding.
  bool conj_is_complex_conjugation() const { return conj_compatible_; }
  bool is_rationals() const { return degree_ == 1; }

  const std::vector<Embedding>& embeddings() const { return embeddings_; }
  // All embeddings with enclosures of side < width (same indices as embeddings()).
  std::vector<Embedding> embeddings(const Rational& width) const;
  Embedding embedding(int index) const;
  Embedding refine(const Embedding& e, const Rational& width) const;

  bool same_as(const NumberField& o) const;

  // x^k mod m for k = d .. 2d-2, as coordinate vectors.
  const std::vector<std::vector<Rational>>& reduction_table() const { return reduction_; }
  // Tr(x^k), k = 0 .. d-1.
  const std::vector<Rational>& power_traces() const { return power_traces_; }

  Irreducibility irreducibility(int degree_bound = 8) const;

  std::string describe() const;

 private:
  NumberField() = default;
  int degree_ = 0;
  Poly minpoly_;
  std::optional<std::vector<Rational>> conj_;
  bool conj_compatible_ = false;
  std::vector<Embedding> embeddings_;
  std::vector<std::vector<Rational>> reduction_;
  std::vector<Rational> power_traces_;
};

class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(FieldPtr field);  // zero
  FieldElement(FieldPtr field, std::vector<Rational> coords);
  FieldElement(FieldPtr field, const Rational& value);
  static FieldElement generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return c_; }
  bool valid() const { return field_ != nullptr; }
  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // throws unless is_rational()
  Poly as_poly() const { return Poly(c_); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator*(const Rational& s) const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  FieldElement inverse() const;  // throws Singular for zero divisors
  FieldElement pow(unsigned e) const;
  FieldElement conj() const;     // throws InvalidArgument without conj

  // Moves a rational element into another field.
  FieldElement in_field(const FieldPtr& target) const;

  std::string to_string() const;

 private:
  FieldPtr field_;
  std::vector<Rational> c_;
};

FieldElement operator*(const Rational& s, const FieldElement& x);

// p(x) computed in x's field.
FieldElement evaluate(const Poly& p, const FieldElement& x);

// Enclosure of sigma_e(x).
Box evaluate(const FieldElement& x, const Embedding& e);
// Enclosure of sigma_e(x) with the embedding refined to side < width first.
Box evaluate(const FieldElement& x, const Embedding& e, const Rational& width);

// Sign of the real number sigma_e(x). Throws NotRealUnderEmbedding when sigma_e(x) is not real.
int exact_sign(const FieldElement& x, const Embedding& e);
// Sign of Im sigma_e(x).
int imag_sign(const FieldElement& x, const Embedding& e);
// True iff sigma_e(x) is real.
bool is_real_under(const FieldElement& x, const Embedding& e);

Rational trace_q(const FieldElement& x);
std::pair<Rational, FieldElement> rational_part(const FieldElement& x);

// Matrix of multiplication by x in the power basis; column k holds x * gen^k.
std::vector<std::vector<Rational>> multiplication_matrix(const FieldElement& x);

// Monic minimal polynomial of x over Q.
Poly minimal_polynomial(const FieldElement& x);

// Coordinates e_0..e_{k-1} with x = sum e_i gen^i, if they exist.
std::optional<std::vector<Rational>> power_coordinates(const FieldElement& x, const FieldElement& gen, int k);

// True iff the root of field->minpoly() at embedding `index` is a root of g.
bool is_root_at(const Poly& g, const NumberField& field, int index);

// Smallest-degree monic rational factor of the monic integer polynomial p that
// vanishes at roots[root_index]. Roots must come from isolate_roots(p, ...).
Poly factor_containing_root(const Poly& p, int root_index);

// Irreducibility of a monic integer polynomial by root-subset trial factorisation up to degree_bound.
Irreducibility trial_irreducibility(const Poly& p, int degree_bound);

// All roots of the monic integer polynomial h that lie in the field (exactly verified).
std::vector<FieldElement> roots_in_field(const Poly& h, const FieldPtr& field);

// Initial enclosure width, from TORUSCM_PRECISION (bits) if set.
Rational default_width();

}  // namespace toruscm
