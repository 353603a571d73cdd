#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "helpers.hpp"
#include "toruscm/errors.hpp"
#include "toruscm/exactla.hpp"

using namespace toruscm;
using namespace testing_support;

TEST_CASE("solve_linear") {
  auto id = rat({{1, 0}, {0, 1}});
  auto b = rat({{3}, {-4}});
  auto s = solve_linear(id, b);
  REQUIRE(s.particular);
  CHECK(*s.particular == b);
  CHECK(s.kernel.rows() == 0);

  auto ones = rat({{1, 1}, {1, 1}});
  auto h = solve_linear(ones, rat({{0}, {0}}));
  CHECK_FALSE(h.particular);
  REQUIRE(h.kernel.rows() == 1);
  CHECK(h.kernel == rat({{-1, 1}}));
  CHECK_THROWS_AS(solve_linear(ones, rat({{1}, {2}})), Error);

  // Commutation MI = IM for I = [[0,-1],[1,0]]: unknowns (a,b,c,d) row-major.
  auto comm = rat({{0, 1, 1, 0}, {-1, 0, 0, 1}, {-1, 0, 0, 1}, {0, -1, -1, 0}});
  auto k = kernel(comm);
  CHECK(k.rows() == 2);
  // Oracle: a 2x2 matrix commutes with I iff it is [[a,-c],[c,a]].
  for (int r = 0; r < k.rows(); ++r) {
    CHECK(k(r, 0) == k(r, 3));
    CHECK(k(r, 1) == -k(r, 2));
  }
}

TEST_CASE("random systems verified by substitution") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int t = 0; t < 30; ++t) {
    int n = 2 + t % 4;
    std::vector<std::vector<long>> a(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n)));
    std::vector<std::vector<long>> b(static_cast<std::size_t>(n), std::vector<long>(1));
    for (auto& row : a)
      for (auto& v : row) v = d(rng);
    for (auto& row : b) row[0] = d(rng);
    auto A = rat(a), B = rat(b);
    auto det = determinant(A);
    if (det.is_zero()) {
      CHECK_THROWS_AS(inverse(A), Error);
      continue;
    }
    auto s = solve_linear(A, B);
    if (B.is_zero()) {
      CHECK_FALSE(s.particular);
    } else {
      REQUIRE(s.particular);
      CHECK(A * *s.particular == B);
    }
    auto inv = inverse(A);
    CHECK(A * inv == FieldMatrix::identity(A.field(), n));
    // Bareiss agrees with the integer determinant.
    CHECK(det.rational_value() == Rational(determinant(IntMatrix::from_field(A))));
  }
}

TEST_CASE("hnf and snf") {
  auto s = snf(IntMatrix{{2, 0}, {0, 2}});
  CHECK(s.diag == std::vector<Integer>{2, 2});
  CHECK(lattice_index(IntMatrix{{2, 0}, {0, 1}}, 2) == Integer(2));
  auto s2 = snf(IntMatrix{{1, 1}, {1, -1}});
  CHECK(s2.diag == std::vector<Integer>{1, 2});
  CHECK(lattice_index(IntMatrix{{1, 1}, {1, -1}}, 2) == Integer(2));
  // Oracle: cosets of Z^2 / span{(1,1),(1,-1)} are classified by parity of a+b.
  std::set<int> cosets;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) cosets.insert((a + b) % 2);
  CHECK(cosets.size() == 2);
  CHECK_FALSE(lattice_index(IntMatrix{{1, 2}}, 2).has_value());

  auto h = hnf(IntMatrix{{4, 6}, {2, 3}, {0, 5}});
  // Lower triangular, positive pivots, entries below a pivot reduced.
  REQUIRE(h.rows() == 2);
  CHECK(h(0, 1) == 0);
  CHECK(h(0, 0) > 0);
  CHECK(h(1, 1) > 0);
  CHECK(h(1, 0) >= 0);
  CHECK(h(1, 0) < h(0, 0));
}

TEST_CASE("hnf/snf invariants on random integer matrices") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int t = 0; t < 40; ++t) {
    int r = 1 + t % 4, c = 1 + (t / 4) % 4;
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = d(rng);
    auto s = snf(m);
    IntMatrix dm = s.u * m * s.v;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (i != j) CHECK(dm(i, j) == 0);
    for (std::size_t k = 0; k < s.diag.size(); ++k) {
      CHECK(dm(static_cast<int>(k), static_cast<int>(k)) == s.diag[k]);
      CHECK(s.diag[k] >= 0);
      if (k + 1 < s.diag.size() && s.diag[k] != 0) CHECK(s.diag[k + 1] % s.diag[k] == 0);
    }
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(abs(determinant(s.v)) == 1);
    if (r == c) {
      Integer prod = 1;
      for (const auto& x : s.diag) prod *= x;
      CHECK(abs(determinant(m)) == prod);
    }
    auto hr = hnf_with_transform(m);
    IntMatrix um = hr.u * m;
    CHECK(abs(determinant(hr.u)) == 1);
    for (int i = 0; i < hr.h.rows(); ++i)
      for (int j = 0; j < c; ++j) CHECK(um(i, j) == hr.h(i, j));
    for (int i = hr.h.rows(); i < r; ++i)
      for (int j = 0; j < c; ++j) CHECK(um(i, j) == 0);
    CHECK(hnf(hr.h) == hr.h);
  }
}

namespace {

// Brute-force oracle: members of the box [-4,4]^n satisfying the integrality test.
template <class Pred>
IntMatrix enumerate_box(int n, Pred member) {
  std::vector<std::vector<long>> found;
  std::vector<long> x(static_cast<std::size_t>(n), -4);
  while (true) {
    if (member(x)) found.push_back(x);
    int i = 0;
    while (i < n && ++x[static_cast<std::size_t>(i)] > 4) x[static_cast<std::size_t>(i++)] = -4;
    if (i == n) break;
  }
  IntMatrix m(static_cast<int>(found.size()), n);
  for (std::size_t r = 0; r < found.size(); ++r)
    for (int j = 0; j < n; ++j) m(static_cast<int>(r), j) = found[r][static_cast<std::size_t>(j)];
  return m;
}

}  // namespace

TEST_CASE("saturate_integer_solutions") {
  auto half = FieldMatrix::from_rationals({{q(1, 2), q(0)}});
  auto l = saturate_integer_solutions(half);
  CHECK(lattice_index(l, 2) == Integer(2));
  CHECK(same_lattice(l, IntMatrix{{2, 0}, {0, 1}}));

  auto s5 = sqrt5();
  FieldMatrix c(s5, 1, 2);
  c(0, 0) = FieldElement::generator(s5);
  c(0, 1) = FieldElement(s5, Rational(1));
  auto l2 = saturate_integer_solutions(c);
  CHECK(l2.rows() == 1);
  CHECK(same_lattice(l2, IntMatrix{{0, 1}}));
}

TEST_CASE("saturation equals brute-force enumeration") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 4);
  for (int t = 0; t < 12; ++t) {
    int n = 2 + t % 3;
    int k = 1 + t % 2;
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(k), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (auto& row : rows)
      for (auto& v : row) v = q(num(rng), 1L << (den(rng) % 3));
    auto c = FieldMatrix::from_rationals(rows);
    auto l = saturate_integer_solutions(c);
    auto oracle = enumerate_box(n, [&](const std::vector<long>& x) {
      for (const auto& row : rows) {
        Rational s = 0;
        for (int j = 0; j < n; ++j) s += row[static_cast<std::size_t>(j)] * Rational(x[static_cast<std::size_t>(j)]);
        if (s.get_den() != 1) return false;
      }
      return true;
    });
    // Denominators divide 4, so the lattice contains 4Z^n and its HNF basis lies in the box.
    INFO("rows " << c.to_string() << " got " << l.to_string() << " oracle " << hnf(oracle).to_string());
    CHECK(same_lattice(l, oracle));
  }
}

TEST_CASE("integer kernel") {
  auto k = integer_kernel(IntMatrix{{1, 1, 1}});
  CHECK(k.rows() == 2);
  CHECK(same_lattice(k, IntMatrix{{1, -1, 0}, {0, 1, -1}}));
}

TEST_CASE("positive_definite") {
  auto q1 = NumberField::rationals();
  auto e = q1->embedding(1);
  auto id = FieldMatrix::identity(q1, 4);
  auto c = positive_definite(id, e);
  CHECK(c.positive);
  CHECK(c.pivots.size() == 4);
  auto c2 = positive_definite(rat({{1, 2}, {2, 1}}), e);
  CHECK_FALSE(c2.positive);
  REQUIRE(c2.pivots.size() == 2);
  CHECK(c2.pivots[1].rational_value() == -3);
  CHECK_THROWS_AS(positive_definite(rat({{1, 2}, {0, 1}}), e), Error);

  auto s5 = sqrt5();
  FieldElement r5 = FieldElement::generator(s5);
  auto one = [&](long v) { return FieldElement(s5, Rational(v)); };
  FieldMatrix g(s5, 2, 2);
  g(0, 0) = one(5) + r5 * Rational(2, 5);
  g(0, 1) = one(2) - r5 * Rational(1, 5);
  g(1, 0) = g(0, 1);
  g(1, 1) = one(3) - r5 * Rational(2, 5);
  CHECK(positive_definite(g, s5->embedding(2)).positive);
}

TEST_CASE("positive_definite agrees with leading principal minors") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> d(-4, 4);
  auto e = NumberField::rationals()->embedding(1);
  for (int t = 0; t < 60; ++t) {
    int n = 1 + t % 6;
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) {
        Rational v = q(d(rng), 1 + (t + i + j) % 3);
        if (i == j) v += 3;
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
      }
    auto m = FieldMatrix::from_rationals(a);
    bool minors = true;
    for (int k = 1; k <= n; ++k)
      if (determinant(m.block(0, 0, k, k)).rational_value() <= 0) minors = false;
    CHECK(positive_definite(m, e).positive == minors);
  }
}

TEST_CASE("matrix minimal polynomial") {
  auto i = rat({{0, -1}, {1, 0}});
  CHECK(minimal_polynomial(i) == Poly(std::vector<Rational>{1, 0, 1}));
  CHECK(minimal_polynomial(rat({{2, 0}, {0, 2}})) == Poly(std::vector<Rational>{-2, 1}));
}
