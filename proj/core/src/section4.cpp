#include "toruscm/section4.hpp"

#include "toruscm/errors.hpp"

namespace toruscm {

CmInput zeta5_cm_input() {
  auto K = NumberField::make({1, 1, 1, 1, 1}, std::vector<Rational>{-1, -1, -1, -1});
  auto x = FieldElement::generator(K);
  auto xinv = x.inverse();
  FieldElement one(K, Rational(1));
  return {K, {one, x + xinv, x - xinv, x * x - xinv * xinv}, {1, 2}, x - xinv};
}

CyclotomicData cyclotomic_data() {
  CyclotomicData d{zeta5_cm_input(), {}, {}, {}, {}, {}};
  d.cm = cm_torus(d.input);
  const int g = 2;
  if (!d.cm.period_re.block(0, g, g, g).is_zero() || !d.cm.period_im.block(0, 0, g, g).is_zero())
    throw Error(ErrorCode::InvalidArgument, "period matrix is not of the form (Z, A i)");
  d.Z = d.cm.period_re.block(0, 0, g, g);
  d.A = d.cm.period_im.block(0, g, g, g);
  d.A_normal = inverse(d.Z) * d.A;
  const FieldPtr& F = d.cm.torus.field;
  // Z_01 = 2 cos 72 = (sqrt5 - 1) / 2.
  d.sqrt5 = d.Z(0, 1) * Rational(2) + FieldElement(F, Rational(1));
  if (d.sqrt5 * d.sqrt5 != FieldElement(F, Rational(5)))
    throw Error(ErrorCode::InvalidArgument, "unexpected period matrix entries");
  return d;
}

MirrorPair cyclotomic_mirror(const CyclotomicData& d) {
  return construct_mirror(d.A_normal, IntMatrix{{-2, 0}, {0, -1}}, d.cm.torus.embedding_index);
}

std::optional<std::pair<Rational, Rational>> sqrt5_coordinates(const FieldElement& x, const FieldElement& sqrt5) {
  auto c = power_coordinates(x, sqrt5, 2);
  if (!c) return std::nullopt;
  return std::pair{(*c)[0], (*c)[1]};
}

Section4Report section4_demo(int trials, std::uint64_t seed) {
  Section4Report r{cyclotomic_data(), {}, {}, {}, true, true, {}, {}, {}, {}, {}, false, false};
  r.pair = cyclotomic_mirror(r.data);
  r.mirror = verify_mirror(r.pair);
  const auto& G = r.pair.left.kahler.G;
  for (int i = 2; i < 4; ++i) {
    r.g_lower.emplace_back();
    for (int j = 2; j < 4; ++j) {
      auto c = sqrt5_coordinates(G(i, j), r.data.sqrt5);
      if (!c) throw Error(ErrorCode::InvalidArgument, "metric entry outside Q(sqrt5)");
      r.g_lower.back().push_back(*c);
    }
  }
  r.ij_rational_left = ij_rational(r.pair.left.gks);
  r.ij_rational_right = ij_rational(r.pair.right.gks);
  r.cm_left = cm_certificate(r.pair.left.torus, trials, seed);
  r.cm_right = cm_certificate(r.pair.right.torus, trials, seed);
  r.chiral_left = chiral_sublattice(build_pairing_lattice(r.pair.left.torus, r.pair.left.kahler));
  r.chiral_right = chiral_sublattice(build_pairing_lattice(r.pair.right.torus, r.pair.right.kahler));
  r.isogeny = isogeny_from_mirror(r.pair);
  auto Q = NumberField::rationals();
  FieldMatrix gamma = FieldMatrix::identity(Q, 4);
  gamma(0, 0) = FieldElement(Q, Rational(-1, 2));
  gamma(1, 1) = FieldElement(Q, Rational(-1));
  r.rho_isogeny = verify_isogeny_certificate(r.pair.left.torus, r.pair.right.torus, gamma);
  r.simple = simplicity_check(r.data.input, subfield_generators(r.data.input.K));
  return r;
}

}  // namespace toruscm
