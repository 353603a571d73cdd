// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "toruscm/cm.hpp"
#include "toruscm/errors.hpp"
#include "toruscm/exactla.hpp"
#include "toruscm/mirror.hpp"
#include "toruscm/random.hpp"
#include "toruscm/section4.hpp"
#include "toruscm/torus.hpp"
#include "toruscm/valattice.hpp"

using namespace toruscm;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = "failed: " + what;
    ok = ok && cond;
  }
};

FieldMatrix rat(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (long v : row) r.back().emplace_back(v);
  }
  return FieldMatrix::from_rationals(r);
}

FieldPtr gaussian() { return NumberField::make({1, 0, 1}, std::vector<Rational>{0, -1}); }
FieldPtr quadratic5() { return NumberField::make({-5, 0, 1}, std::vector<Rational>{0, 1}); }

ComplexTorus tau_i(const FieldPtr& f = NumberField::rationals(), int embedding = 1) {
  return ComplexTorus::make(rat({{0, -1}, {1, 0}}).in_field(f), embedding);
}

// The elliptic curve with tau = 2^{1/4} i, which has no complex multiplication.
ComplexTorus tau_2pow14() {
  auto F = NumberField::make({-2, 0, 0, 0, 1});
  auto t = FieldElement::generator(F);
  FieldMatrix I(F, 2, 2);
  I(0, 1) = -t;
  I(1, 0) = t * t * t * Rational(1, 2);
  for (int e = 1; e <= F->degree(); ++e) {
    try {
      auto torus = ComplexTorus::make(I, e);
      if (torus.embedding().enclosure.re.lo > 0) return torus;
    } catch (const Error&) {
    }
  }
  throw Error(ErrorCode::InvalidArgument, "no positive real embedding of 2^{1/4}");
}

KahlerData scalar_metric(const FieldElement& a, const FieldElement& b) {
  const FieldPtr& f = a.field();
  FieldMatrix G(f, 2, 2), B(f, 2, 2);
  G(0, 0) = G(1, 1) = a;
  B(0, 1) = b;
  B(1, 0) = -b;
  return {G, B};
}

struct Sample {
  std::string name;
  ComplexTorus torus;
  KahlerData kahler;
};

// 60 rational pairs and 20 Q(sqrt5) pairs on tau = i, then both sides of the cyclotomic mirror pair.
std::vector<Sample> gks_samples() {
  std::vector<Sample> out;
  SeededRng rng(314159);
  auto Q = NumberField::rationals();
  for (int s = 0; s < 60; ++s) {
    Rational a = rng.small_rational();
    while (sgn(a) == 0) a = rng.small_rational();
    if (sgn(a) < 0) a = -a;
    out.push_back({"rational " + std::to_string(s), tau_i(), scalar_metric(FieldElement(Q, a), FieldElement(Q, rng.small_rational()))});
  }
  auto F = quadratic5();
  auto root5 = FieldElement::generator(F);
  auto t5 = tau_i(F, 2);  // sqrt5 > 0 here
  for (int s = 0; s < 20; ++s) {
    // a = r + c sqrt5 with r > 3|c|, so a > 0 and irrational unless c = 0.
    Rational c = rng.small_rational(), d = rng.small_rational(), e = rng.small_rational();
    Rational r = Rational(3 * abs(c) + 1 + abs(d));
    FieldElement a = FieldElement(F, r) + root5 * c;
    FieldElement b = FieldElement(F, e) + root5 * (s % 3 == 0 ? d : Rational(0));
    out.push_back({"sqrt5 " + std::to_string(s), t5, scalar_metric(a, b)});
  }
  auto p = cyclotomic_mirror(cyclotomic_data());
  out.push_back({"cyclotomic left", p.left.torus, p.left.kahler});
  out.push_back({"cyclotomic right", p.right.torus, p.right.kahler});
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome criterion1() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto r = section4_demo(20, 1);
  double dt = seconds_since(t0);
  const std::vector<std::vector<std::pair<Rational, Rational>>> expected = {
      {{Rational(5), Rational(2, 5)}, {Rational(2), Rational(-1, 5)}},
      {{Rational(2), Rational(-1, 5)}, {Rational(3), Rational(-2, 5)}}};
  o.require(r.g_lower == expected, "G block differs from 5+2/sqrt5, 2-1/sqrt5, 3-2/sqrt5");
  // Independent check of the block: (a + b sqrt5) for each entry recomputed from G itself.
  const auto& G = r.pair.left.kahler.G;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      auto& [a, b] = expected[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      FieldElement want = r.data.sqrt5 * b + FieldElement(G.field(), a);
      o.require(G(2 + i, 2 + j) == want, "G entry as a field element");
    }
  o.require(r.data.sqrt5 * r.data.sqrt5 == FieldElement(G.field(), Rational(5)), "sqrt5 squares to 5");
  o.require(!r.ij_rational_left && !r.ij_rational_right, "ij_rational should be false");
  o.require(!va_rational(r.chiral_left) && !va_rational(r.chiral_right), "va_rational should be false");
  o.require(r.cm_left.verdict == CmVerdict::CM && r.cm_right.verdict == CmVerdict::CM, "CM certificates");
  o.require(r.mirror.all(), "verify_mirror");
  o.require(dt < 5.0, "runtime " + std::to_string(dt) + " s");
  std::ostringstream s;
  s << "G lower block exact in Q(sqrt5), both sides CM, mirror verified, " << dt << " s";
  if (o.ok) o.detail = s.str();
  return o;
}

bool metric_valid(const ComplexTorus& t, const FieldMatrix& G) {
  return G.is_symmetric() && t.I.transpose() * G * t.I == G && positive_definite(G, t.embedding()).positive;
}

Outcome criterion2() {
  Outcome o;
  std::ostringstream s;
  auto timed = [&](const char* name, const std::function<void()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    double dt = seconds_since(t0);
    o.require(dt < 1.0, std::string(name) + " took " + std::to_string(dt) + " s");
    s << (s.tellp() > 0 ? ", " : "") << name << " " << dt << " s";
  };
  timed("tau=i", [&] {
    auto t = tau_i();
    auto m = rational_kahler_search(t, 20, 1);
    o.require(m.G && metric_valid(t, *m.G), "tau=i metric");
  });
  auto z = cyclotomic_data().cm.torus;
  timed("zeta5", [&] {
    auto m = rational_kahler_search(z, 20, 1);
    o.require(m.G && m.G->is_rational() && metric_valid(z, *m.G), "zeta5 metric");
  });
  timed("2^(1/4)", [&] {
    auto t = tau_2pow14();
    auto m = rational_kahler_search(t, 20, 1);
    o.require(!m.G && m.solution_dim == 0 && m.solution_basis.empty(), "2^(1/4) solution space should be {0}");
    auto c = cm_certificate(t, 20, 1);
    o.require(c.verdict == CmVerdict::NotCM && c.end_dim < 2 * t.g, "2^(1/4) should be NotCM by dimension");
  });
  if (o.ok) o.detail = s.str();
  return o;
}

Outcome criterion3(const std::vector<Sample>& samples) {
  Outcome o;
  for (const auto& smp : samples) {
    validate_kahler(smp.torus, smp.kahler);
    auto p = induce_gks(smp.torus, smp.kahler);
    o.require(verify_gks(p).all(), smp.name + " GKS axioms");
    try {
      auto e = eigenspace_graphs(p, smp.kahler);
      o.require(e.graph_plus && e.graph_minus, smp.name + " graphs");
      // C+ and C- are complementary: the projectors sum to Id and annihilate each other.
      o.require(e.p_plus * e.p_minus == FieldMatrix(p.field, p.calI.rows(), p.calI.rows()), smp.name + " projectors");
    } catch (const Error& err) {
      o.require(false, smp.name + " graph identities: " + err.what());
    }
  }
  if (o.ok) o.detail = std::to_string(samples.size()) + " samples satisfy the GKS axioms and graph identities";
  return o;
}

Outcome criterion4(const std::vector<Sample>& samples) {
  Outcome o;
  int rational = 0;
  for (const auto& smp : samples) {
    bool data_rational = smp.kahler.G.is_rational() && smp.kahler.B.is_rational();
    bool ij = ij_rational(induce_gks(smp.torus, smp.kahler));
    bool va = va_rational(chiral_sublattice(build_pairing_lattice(smp.torus, smp.kahler)));
    o.require(ij == data_rational && va == data_rational, smp.name + " rationality disagreement");
    rational += data_rational;
  }
  if (o.ok)
    o.detail = std::to_string(samples.size()) + " samples agree (" + std::to_string(rational) + " rational, " +
               std::to_string(samples.size() - static_cast<std::size_t>(rational)) + " irrational)";
  return o;
}

// Independent oracle: lambda is chiral iff P+ lambda is integral, since q is unimodular.
IntMatrix enumerate_chiral(const PairingLattice& L, long b) {
  std::vector<std::vector<long>> members;
  std::vector<long> v(static_cast<std::size_t>(L.n), -b);
  for (;;) {
    FieldMatrix x(L.p_plus.field(), L.n, 1);
    for (int i = 0; i < L.n; ++i) x(i, 0) = FieldElement(L.p_plus.field(), Rational(v[static_cast<std::size_t>(i)]));
    FieldMatrix y = L.p_plus * x;
    bool integral = true;
    for (int i = 0; i < L.n && integral; ++i) integral = y(i, 0).is_rational() && y(i, 0).rational_value().get_den() == 1;
    if (integral) members.push_back(v);
    int i = 0;
    while (i < L.n && v[static_cast<std::size_t>(i)] == b) v[static_cast<std::size_t>(i++)] = -b;
    if (i == L.n) break;
    ++v[static_cast<std::size_t>(i)];
  }
  IntMatrix m(static_cast<int>(members.size()), L.n);
  for (std::size_t r = 0; r < members.size(); ++r)
    for (int c = 0; c < L.n; ++c) m(static_cast<int>(r), c) = members[r][static_cast<std::size_t>(c)];
  return m;
}

// Cosets of the chiral lattice are the distinct values of P+ lambda mod Z^n. Shifting lambda by
// D e_i, D the common denominator of P+, does not change the class, so [0, D)^n covers them all.
std::size_t enumerate_cosets(const PairingLattice& L) {
  std::vector<Rational> entries;
  for (int r = 0; r < L.n; ++r)
    for (int c = 0; c < L.n; ++c) entries.push_back(L.p_plus(r, c).rational_value());
  const long b = common_denominator(entries).get_si() - 1;
  std::set<std::string> seen;
  std::vector<long> v(static_cast<std::size_t>(L.n), 0);
  for (;;) {
    FieldMatrix x(L.p_plus.field(), L.n, 1);
    for (int i = 0; i < L.n; ++i) x(i, 0) = FieldElement(L.p_plus.field(), Rational(v[static_cast<std::size_t>(i)]));
    FieldMatrix y = L.p_plus * x;
    std::string key;
    for (int i = 0; i < L.n; ++i) {
      Rational r = y(i, 0).rational_value();
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
      key += to_string(Rational(r - fl)) + ",";
    }
    seen.insert(key);
    int i = 0;
    while (i < L.n && v[static_cast<std::size_t>(i)] == b) v[static_cast<std::size_t>(i++)] = 0;
    if (i == L.n) break;
    ++v[static_cast<std::size_t>(i)];
  }
  return seen.size();
}

Outcome criterion5() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto Q = NumberField::rationals();
  std::vector<std::pair<std::string, KahlerData>> fixtures = {
      {"G=Id", scalar_metric(FieldElement(Q, Rational(1)), FieldElement(Q, Rational(0)))},
      {"G=2Id", scalar_metric(FieldElement(Q, Rational(2)), FieldElement(Q, Rational(0)))},
      {"G=Id,B=J/2", scalar_metric(FieldElement(Q, Rational(1)), FieldElement(Q, Rational(1, 2)))},
      {"G=3Id/2,B=J", scalar_metric(FieldElement(Q, Rational(3, 2)), FieldElement(Q, Rational(1)))}};
  std::ostringstream s;
  for (const auto& [name, k] : fixtures) {
    auto L = build_pairing_lattice(tau_i(), k);
    auto r = chiral_sublattice(L);
    auto oracle = enumerate_chiral(L, 4);
    o.require(r.rank == 4 && same_lattice(r.basis, oracle), name + " chiral lattice differs from enumeration");
    auto cosets = enumerate_cosets(L);
    auto count = module_count(r);
    o.require(count && *count == static_cast<long>(cosets), name + " module count differs from coset enumeration");
    s << name << ": " << cosets << " modules; ";
  }
  auto identity = chiral_sublattice(build_pairing_lattice(tau_i(), fixtures[0].second));
  o.require(module_count(identity) == Integer(4), "module count for G=Id, B=0 should be 4");
  double dt = seconds_since(t0);
  o.require(dt < 10.0, "runtime " + std::to_string(dt) + " s");
  if (o.ok) o.detail = s.str() + std::to_string(dt) + " s";
  return o;
}

Outcome criterion6() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  SeededRng rng(271828);
  auto Q = NumberField::rationals();
  int n = 0, isogenies = 0;
  for (int g = 1; g <= 3; ++g) {
    for (int s = 0; s < 8; ++s, ++n) {
      FieldMatrix A(Q, g, g);
      do {
        for (int i = 0; i < g; ++i)
          for (int j = 0; j < g; ++j) A(i, j) = FieldElement(Q, rng.small_rational());
      } while (determinant(A).is_zero());
      // rho = -(M^T M + Id) is negative definite.
      IntMatrix m(g, g);
      for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) m(i, j) = rng.uniform(-2, 2);
      IntMatrix rho = -(m.transpose() * m + IntMatrix::identity(g));
      auto p = construct_mirror(A, rho);
      o.require(verify_mirror(p).all(), "mirror " + std::to_string(n) + " fails verification");
      auto iso = isogeny_from_mirror(p);
      if (ij_rational(p.left.gks)) {
        o.require(iso.hypothesis_met && iso.gamma.has_value(), "mirror " + std::to_string(n) + " has no isogeny");
        if (iso.gamma) {
          auto gamma = FieldMatrix::from_ints(*iso.gamma);
          o.require(verify_isogeny_certificate(p.right.torus, p.left.torus, gamma),
                    "mirror " + std::to_string(n) + " certificate");
          // The intertwining identity itself.
          o.require(p.right.torus.I * gamma == gamma * p.left.torus.I, "I' gamma = gamma I");
          ++isogenies;
        }
      }
    }
  }
  // The cyclotomic pair has irrational IJ, so no isogeny is claimed.
  auto cp = cyclotomic_mirror(cyclotomic_data());
  o.require(verify_mirror(cp).all(), "cyclotomic mirror");
  o.require(!isogeny_from_mirror(cp).hypothesis_met, "cyclotomic pair should not meet the rationality hypothesis");
  double dt = seconds_since(t0);
  o.require(dt < 10.0, "runtime " + std::to_string(dt) + " s");
  if (o.ok)
    o.detail = std::to_string(n) + " random mirrors verified, " + std::to_string(isogenies) + " isogenies certified, " +
               std::to_string(dt) + " s";
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto K = gaussian();
  auto i = FieldElement::generator(K);
  auto gauss = cm_torus({K, {FieldElement(K, Rational(1)), i}, {1}, i});
  auto cyclo = cyclotomic_data();
  for (const auto* c : {&gauss, &cyclo.cm}) {
    auto r = eta_checks(c->torus, c->G, c->E, endomorphism_algebra(c->torus));
    o.require(r.commutes_with_I, "eta commutes with I");
    o.require(r.rosati_negates, "Rosati negates eta");
    o.require(r.conjugates_involutions, "eta conjugates the involutions");
  }
  if (o.ok) o.detail = "tau=i and cyclotomic CM tori with the Riemann form from the CM data";
  return o;
}

Outcome criterion8(const std::vector<Sample>& samples) {
  Outcome o;
  for (const auto& smp : samples) o.require(charge_isometry_check(smp.kahler), smp.name);
  if (o.ok) o.detail = std::to_string(samples.size()) + " samples";
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  std::vector<Sample> samples;
  auto report = [&](int n, const std::function<Outcome()>& f) {
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %d: %s (%s)\n", n, o.ok ? "PASS" : "FAIL", o.detail.c_str());
    failures += !o.ok;
  };
  report(1, criterion1);
  report(2, criterion2);
  try {
    samples = gks_samples();
  } catch (const std::exception& e) {
    std::printf("sample generation failed: %s\n", e.what());
  }
  report(3, [&] { return criterion3(samples); });
  report(4, [&] { return criterion4(samples); });
  report(5, criterion5);
  report(6, criterion6);
  report(7, criterion7);
  report(8, [&] { return criterion8(samples); });
  return failures;
}
