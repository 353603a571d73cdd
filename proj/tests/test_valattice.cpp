#include <doctest.h>

#include <functional>
#include <random>

#include "helpers.hpp"
#include "toruscm/errors.hpp"
#include "toruscm/section4.hpp"
#include "toruscm/valattice.hpp"

using namespace toruscm;
using namespace testing_support;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

ComplexTorus tau_i(FieldPtr f = NumberField::rationals(), int emb = 1) {
  return ComplexTorus::make(rat({{0, -1}, {1, 0}}).in_field(f), emb);
}

// G = a Id, B = b J on the tau = i torus.
KahlerData tau_i_metric(const FieldElement& a, const FieldElement& b) {
  const FieldPtr& f = a.field();
  FieldMatrix G(f, 2, 2), B(f, 2, 2);
  G(0, 0) = G(1, 1) = a;
  B(0, 1) = b;
  B(1, 0) = -b;
  return {G, B};
}

bool integral(const FieldMatrix& v) {
  for (int i = 0; i < v.rows(); ++i)
    for (int j = 0; j < v.cols(); ++j)
      if (!v(i, j).is_rational() || v(i, j).rational_value().get_den() != 1) return false;
  return true;
}

FieldMatrix column(const IntMatrix& rows, int r) { return FieldMatrix::from_ints(rows.block(r, 0, 1, rows.cols()).transpose()); }

// Brute-force chiral members in [-b, b]^n: lambda with P lambda integral.
IntMatrix brute_force_members(const PairingLattice& L, long b) {
  const int n = L.n;
  std::vector<std::vector<long>> members;
  std::vector<long> v(static_cast<std::size_t>(n), -b);
  for (;;) {
    FieldMatrix x(L.p_plus.field(), n, 1);
    for (int i = 0; i < n; ++i) x(i, 0) = FieldElement(L.p_plus.field(), Rational(v[static_cast<std::size_t>(i)]));
    if (integral(L.p_plus * x)) members.push_back(v);
    int i = 0;
    while (i < n && v[static_cast<std::size_t>(i)] == b) v[static_cast<std::size_t>(i++)] = -b;
    if (i == n) break;
    ++v[static_cast<std::size_t>(i)];
  }
  IntMatrix m(static_cast<int>(members.size()), n);
  for (std::size_t r = 0; r < members.size(); ++r)
    for (int c = 0; c < n; ++c) m(static_cast<int>(r), c) = members[r][static_cast<std::size_t>(c)];
  return m;
}

IntMatrix stack(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix s(a.rows() + b.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) s(r, c) = a(r, c);
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) s(a.rows() + r, c) = b(r, c);
  return s;
}

IntMatrix random_unimodular(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> pick(0, n - 1), coef(-2, 2);
  IntMatrix u = IntMatrix::identity(n);
  for (int step = 0; step < 3 * n; ++step) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    long c = coef(rng);
    for (int k = 0; k < n; ++k) u(i, k) += c * u(j, k);
  }
  return u;
}

}  // namespace

TEST_CASE("pairing lattice for tau = i, G = Id") {
  auto L = build_pairing_lattice(tau_i(), {rat({{1, 0}, {0, 1}}), rat({{0, 0}, {0, 0}})});
  auto id = rat({{1, 0}, {0, 1}});
  CHECK(L.p_plus == FieldMatrix::blocks(id, -id, -id, id) * q(1, 2));
  FieldMatrix v = rat({{1}, {2}, {-1}, {-2}});
  CHECK(L.p_plus * v == v);
  CHECK(code_of([&] { PairingLattice::make(rat({{2, 0}, {0, 1}}), rat({{1, 0}, {0, 0}})); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([&] { PairingLattice::make(rat({{0, 1}, {1, 0}}), rat({{1, 1}, {0, 0}})); }) ==
        ErrorCode::GraphConditionFails);
}

TEST_CASE("chiral sublattice for tau = i, G = Id") {
  auto L = build_pairing_lattice(tau_i(), {rat({{1, 0}, {0, 1}}), rat({{0, 0}, {0, 0}})});
  auto r = chiral_sublattice(L);
  CHECK(r.rank == 4);
  REQUIRE(r.index);
  CHECK(*r.index == 4);
  CHECK(va_rational(r));
  CHECK(*module_count(r) == 4);
  // {(a, m) : a = m mod 2}
  IntMatrix expected{{1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 2, 0}, {0, 0, 0, 2}};
  CHECK(same_lattice(r.basis, expected));
  CHECK(same_lattice(r.basis, brute_force_members(L, 4)));
  CHECK(r.zpart_rank + r.zbarpart_rank == 4);
  CHECK(r.zpart_rank == 2);
}

TEST_CASE("chiral sublattice for G = 2 Id") {
  auto L = build_pairing_lattice(tau_i(), {rat({{2, 0}, {0, 2}}), rat({{0, 0}, {0, 0}})});
  auto r = chiral_sublattice(L);
  CHECK(r.rational);
  CHECK(*r.index == 16);
  CHECK(same_lattice(r.basis, brute_force_members(L, 4)));
}

TEST_CASE("rational metrics give rational lattices, irrational ones do not") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(1, 8), den_exp(0, 2), bnum(-6, 6);
  auto Q = NumberField::rationals();
  for (int trial = 0; trial < 20; ++trial) {
    FieldElement a(Q, q(num(rng), 1L << den_exp(rng)));
    FieldElement b(Q, q(bnum(rng), 2));
    auto t = tau_i();
    auto k = tau_i_metric(a, b);
    auto L = build_pairing_lattice(t, k);
    auto r = chiral_sublattice(L);
    CHECK(va_rational(r) == ij_rational(induce_gks(t, k)));
    CHECK(r.rational);
    CHECK(r.zpart_rank + r.zbarpart_rank == 4);
    // Every basis vector is chiral, and every chiral vector in the box lies in the lattice.
    for (int i = 0; i < r.rank; ++i) CHECK(integral(L.p_plus * column(r.basis, i)));
    auto members = brute_force_members(L, 3);
    CHECK(same_lattice(stack(r.basis, members), r.basis));
  }
  auto F = sqrt5();
  auto s5 = FieldElement::generator(F);
  for (int trial = 0; trial < 6; ++trial) {
    FieldElement a = s5 + FieldElement(F, q(num(rng)));
    FieldElement b = trial % 2 ? s5 * q(1, 3) : FieldElement(F, q(bnum(rng), 2));
    auto t = tau_i(F, 2);
    auto k = tau_i_metric(a, b);
    auto L = build_pairing_lattice(t, k);
    auto r = chiral_sublattice(L);
    CHECK(va_rational(r) == ij_rational(induce_gks(t, k)));
    CHECK(!r.rational);
    CHECK(!module_count(r));
  }
}

TEST_CASE("chiral sublattice is invariant under unimodular changes of basis") {
  std::mt19937 rng(11);
  auto L = build_pairing_lattice(tau_i(), {rat({{3, 0}, {0, 3}}), rat({{0, 1}, {-1, 0}})});
  auto base = chiral_sublattice(L);
  for (int trial = 0; trial < 5; ++trial) {
    auto u = random_unimodular(rng, 4);
    auto U = FieldMatrix::from_ints(u);
    auto L2 = PairingLattice::make(U.transpose() * L.q * U, inverse(U) * L.p_plus * U);
    auto r = chiral_sublattice(L2);
    CHECK(r.rank == base.rank);
    CHECK(r.index == base.index);
    // lambda = U lambda' maps the new chiral lattice onto the old one.
    CHECK(same_lattice(r.basis * u.transpose(), base.basis));
  }
}

TEST_CASE("cyclotomic example is not rational") {
  auto d = cyclotomic_data();
  auto p = cyclotomic_mirror(d);
  for (const auto* side : {&p.left, &p.right}) {
    auto L = build_pairing_lattice(side->torus, side->kahler);
    auto r = chiral_sublattice(L);
    CHECK(!va_rational(r));
    CHECK(!ij_rational(side->gks));
    CHECK(r.rank == 4);
    CHECK(!module_count(r));
    for (int i = 0; i < r.rank; ++i) CHECK(integral(L.p_plus * column(r.basis, i)));
    CHECK(r.zpart_rank + r.zbarpart_rank <= r.rank);
  }
  // By hand: B = 0 and G = diag(2, 1, H) with H irrational. lambda = (a, m) is chiral iff
  // a - G^-1 m and G a - m lie in 2Z^4. H kills coordinates 3, 4; coordinate 1 needs m even
  // and a = m/2 mod 2; coordinate 2 needs a = m mod 2.
  auto L = build_pairing_lattice(p.left.torus, p.left.kahler);
  IntMatrix expected{{1, 0, 0, 0, 2, 0, 0, 0}, {2, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 1, 0, 0}, {0, 2, 0, 0, 0, 0, 0, 0}};
  CHECK(same_lattice(chiral_sublattice(L).basis, expected));
}

TEST_CASE("dual bases") {
  auto L = build_pairing_lattice(tau_i(), {rat({{1, 0}, {0, 1}}), rat({{0, 0}, {0, 0}})});
  auto ez = rat({{1, 0, -1, 0}, {0, 1, 0, -1}});
  auto dz = dual_basis(ez, L, 1);
  CHECK(dz == ez * q(1, 2));
  CHECK((ez * L.q * dz.transpose()).is_identity());
  auto ezb = rat({{1, 0, 1, 0}, {0, 1, 0, 1}});
  auto dzb = dual_basis(ezb, L, -1);
  CHECK(ezb * L.q * dzb.transpose() == -FieldMatrix::identity(NumberField::rationals(), 2));
  CHECK(code_of([&] { dual_basis(rat({{1, 0, 0, 0}}), L, 1); }) == ErrorCode::DegenerateRestriction);
  // q restricted to the span is Id: the dual basis is the basis itself.
  auto L2 = PairingLattice::make(rat({{1, 0}, {0, -1}}), rat({{1, 0}, {0, 0}}));
  CHECK(dual_basis(rat({{1, 0}}), L2, 1) == rat({{1, 0}}));
}

TEST_CASE("supercommutator structure constants") {
  auto L = build_pairing_lattice(tau_i(), {rat({{1, 0}, {0, 1}}), rat({{0, 0}, {0, 0}})});
  auto h = rat({{1}, {0}, {-1}, {0}});   // z side, q(h, h) = 2
  auto hb = rat({{1}, {0}, {1}, {0}});   // zbar side, q = -2
  auto hb2 = rat({{0}, {1}, {0}, {1}});
  CHECK(supercommutator(L, ModeKind::Boson, h, 3, h, -3) == FieldElement(NumberField::rationals(), Rational(6)));
  CHECK(supercommutator(L, ModeKind::Boson, h, 3, h, 2).is_zero());
  CHECK(supercommutator(L, ModeKind::Boson, h, 1, hb, -1).is_zero());
  CHECK(supercommutator(L, ModeKind::Boson, hb, 2, hb, -2) == FieldElement(NumberField::rationals(), Rational(4)));
  // zbar fermions with q(h, h') = -1 give +1.
  auto f1 = rat({{1}, {0}, {1}, {0}}) * q(1, 2);
  auto f2 = rat({{1}, {0}, {1}, {0}});
  CHECK((f1.transpose() * L.q * f2)(0, 0) == FieldElement(NumberField::rationals(), Rational(-1)));
  CHECK(supercommutator(L, ModeKind::Fermion, f1, q(1, 2), f2, q(-1, 2)) ==
        FieldElement(NumberField::rationals(), Rational(1)));
  CHECK(supercommutator(L, ModeKind::Fermion, hb, q(1, 2), hb2, q(-1, 2)).is_zero());
  CHECK(code_of([&] { supercommutator(L, ModeKind::Boson, h, q(1, 2), h, q(-1, 2)); }) == ErrorCode::ModeParityMismatch);
  CHECK(code_of([&] { supercommutator(L, ModeKind::Fermion, h, 1, h, -1); }) == ErrorCode::ModeParityMismatch);

  // Graded antisymmetry.
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> m(-4, 4), c(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    auto pick = [&](const FieldMatrix& p) {
      FieldMatrix v(NumberField::rationals(), 4, 1);
      for (int i = 0; i < 4; ++i) v(i, 0) = FieldElement(NumberField::rationals(), Rational(c(rng)));
      return FieldMatrix(p * v);
    };
    bool zside = trial % 2 == 0;
    auto P = zside ? L.p_plus : L.p_minus();
    auto a = pick(P), b = pick(P);
    Rational n = m(rng), k = trial % 3 == 0 ? -n : Rational(m(rng));
    CHECK(supercommutator(L, ModeKind::Boson, a, n, b, k) == -supercommutator(L, ModeKind::Boson, b, k, a, n));
    Rational r = n + Rational(1, 2), s = k - Rational(1, 2);
    CHECK(supercommutator(L, ModeKind::Fermion, a, r, b, s) == supercommutator(L, ModeKind::Fermion, b, s, a, r));
  }
}
