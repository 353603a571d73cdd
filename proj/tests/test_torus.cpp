#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "toruscm/errors.hpp"
#include "toruscm/torus.hpp"

using namespace toruscm;
using namespace testing_support;

namespace {

FieldMatrix scalar1(const Rational& v) { return FieldMatrix::from_rationals({{v}}); }

ComplexTorus tau_i(FieldPtr f = NumberField::rationals(), int emb = 1) {
  return ComplexTorus::make(rat({{0, -1}, {1, 0}}).in_field(f), emb);
}

}  // namespace

TEST_CASE("complex structure from a period matrix") {
  auto t = complex_structure_from_period(scalar1(0), scalar1(1));
  CHECK(t.I == rat({{0, -1}, {1, 0}}));
  auto t2 = complex_structure_from_period(scalar1(q(1, 2)), scalar1(1));
  CHECK(t2.I == FieldMatrix::from_rationals({{q(-1, 2), q(-5, 4)}, {q(1), q(1, 2)}}));
  CHECK(t2.I * t2.I == -FieldMatrix::identity(t2.field, 2));
  CHECK_THROWS_AS(complex_structure_from_period(scalar1(0), scalar1(0)), Error);
  try {
    ComplexTorus::make(rat({{0, 1}, {1, 0}}));
    FAIL("expected NotComplexStructure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotComplexStructure);
  }
}

TEST_CASE("induced pair for tau = i, G = Id, B = 0") {
  auto t = tau_i();
  KahlerData k{FieldMatrix::identity(t.field, 2), FieldMatrix(t.field, 2, 2)};
  auto p = induce_gks(t, k);
  auto omega = rat({{0, -1}, {1, 0}});
  auto winv = rat({{0, 1}, {-1, 0}});
  FieldMatrix z(t.field, 2, 2);
  CHECK(p.calJ == FieldMatrix::blocks(z, -winv, omega, z));
  CHECK(p.calI == FieldMatrix::blocks(t.I, z, z, -t.I.transpose()));
  auto id2 = FieldMatrix::identity(t.field, 2);
  CHECK(p.ij() == FieldMatrix::blocks(z, -id2, -id2, z));
  CHECK(p.metric() == FieldMatrix::identity(t.field, 4));
  CHECK(verify_gks(p).all());

  auto es = eigenspace_graphs(p, k);
  // C+ = {(v, -v)}, C- = {(v, v)}.
  CHECK(*es.graph_plus == FieldMatrix::blocks(id2, z, -id2, z).block(0, 0, 4, 2));
  FieldMatrix v(t.field, 4, 1);
  v(0, 0) = FieldElement(t.field, Rational(1));
  v(2, 0) = FieldElement(t.field, Rational(-1));
  CHECK(es.p_plus * v == v);
  CHECK((v.transpose() * p.q * v)(0, 0) == FieldElement(t.field, Rational(2)));
  CHECK(es.p_plus + es.p_minus == FieldMatrix::identity(t.field, 4));
  CHECK(es.p_plus * es.p_plus == es.p_plus);
  CHECK((es.p_plus * es.p_minus).is_zero());
  CHECK(ij_rational(p));
  CHECK(charge_isometry_check(k));
}

TEST_CASE("induce_gks rejects incompatible or indefinite metrics") {
  auto t = complex_structure_from_period(scalar1(q(1, 2)), scalar1(1));
  try {
    induce_gks(t, {FieldMatrix::identity(t.field, 2), FieldMatrix(t.field, 2, 2)});
    FAIL("expected IncompatibleMetric");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IncompatibleMetric);
  }
  auto ti = tau_i();
  try {
    induce_gks(ti, {-FieldMatrix::identity(ti.field, 2), FieldMatrix(ti.field, 2, 2)});
    FAIL("expected NotPositiveDefinite");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPositiveDefinite);
  }
}

TEST_CASE("irrational B field breaks rationality of IJ") {
  auto s5 = sqrt5();
  auto t = tau_i(s5, 2);
  FieldElement inv = FieldElement::generator(s5).inverse();
  FieldMatrix b(s5, 2, 2);
  b(0, 1) = inv;
  b(1, 0) = -inv;
  KahlerData k{FieldMatrix::identity(s5, 2), b};
  auto p = induce_gks(t, k);
  CHECK_FALSE(ij_rational(p));
  CHECK(verify_gks(p).all());
  CHECK(charge_isometry_check(k));
  auto es = eigenspace_graphs(p, k);
  CHECK(es.graph_plus.has_value());
}

TEST_CASE("B = 0 gives block-diagonal calI; q is definite on the eigenspaces") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> d(1, 9);
  auto t = complex_structure_from_period(scalar1(q(1, 3)), scalar1(q(2)));
  // G = E(., I.) style metric compatible with I: solve via symmetric part of I^T G I = G.
  for (int s = 0; s < 10; ++s) {
    // For this I, compatible metrics are multiples of [[2, ...]]; obtain one from omega0 = [[0,1],[-1,0]].
    auto omega0 = rat({{0, 1}, {-1, 0}});
    FieldMatrix g = omega0 * t.I * Rational(d(rng));
    // g = Omega0 I is symmetric and compatible; fix sign to be positive definite.
    auto e = t.embedding();
    if (!positive_definite(g, e).positive) g = -g;
    KahlerData k{g, FieldMatrix(t.field, 2, 2)};
    auto p = induce_gks(t, k);
    FieldMatrix z(t.field, 2, 2);
    CHECK(p.calI == FieldMatrix::blocks(t.I, z, z, -t.I.transpose()));
    auto es = eigenspace_graphs(p, k);
    auto restricted_plus = es.graph_plus->transpose() * p.q * *es.graph_plus;
    auto restricted_minus = es.graph_minus->transpose() * p.q * *es.graph_minus;
    CHECK(restricted_plus == g * Rational(2));
    CHECK(restricted_minus == g * Rational(-2));
    CHECK(positive_definite(restricted_plus, e).positive);
    CHECK(positive_definite(-restricted_minus, e).positive);
  }
}

TEST_CASE("charge isometry on random rational data") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int s = 0; s < 20; ++s) {
    Rational a = q(std::abs(d(rng)) + 1), c = q(std::abs(d(rng)) + 6), b = q(d(rng), 2);
    Rational bb = q(d(rng), 3);
    KahlerData k{FieldMatrix::from_rationals({{a, b}, {b, c}}), FieldMatrix::from_rationals({{q(0), bb}, {-bb, q(0)}})};
    CHECK(charge_isometry_check(k));
  }
  CHECK_THROWS_AS(charge_isometry_check({rat({{1, 1}, {1, 1}}), rat({{0, 0}, {0, 0}})}), Error);
}
