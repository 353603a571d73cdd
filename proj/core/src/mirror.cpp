#include "toruscm/mirror.hpp"

#include "toruscm/errors.hpp"

namespace toruscm {

namespace {

// Returns the (+) or (-) map: phi11 + phi12 (-+G + B).
FieldMatrix psi_from_phi(const FieldMatrix& phi, const KahlerData& k, int sign) {
  const int n = k.G.rows();
  FieldMatrix graph = k.B - k.G * Rational(sign);
  return phi.block(0, 0, n, n) + phi.block(0, n, n, n) * graph;
}

}  // namespace

IntMatrix standard_mirror_map(int g) {
  IntMatrix phi(4 * g, 4 * g);
  for (int i = 0; i < g; ++i) {
    phi(i, 2 * g + i) = 1;
    phi(g + i, g + i) = -1;
    phi(2 * g + i, i) = 1;
    phi(3 * g + i, 3 * g + i) = -1;
  }
  return phi;
}

MirrorSide make_side(const ComplexTorus& t, const KahlerData& k) { return {t, k, induce_gks(t, k)}; }

MirrorReport verify_mirror(const MirrorPair& p) {
  const int n = p.left.gks.calI.rows();
  if (p.right.gks.calI.rows() != n || p.phi.rows() != n || p.phi.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "mirror map and both sides must be " + std::to_string(n) + "x" +
                                                  std::to_string(n));
  MirrorReport r;
  Integer det = determinant(p.phi);
  r.unimodular = det == 1 || det == -1;
  FieldMatrix phi = FieldMatrix::from_ints(p.phi);
  FieldMatrix q = pairing_matrix(n / 4);
  r.q_compatible = phi.transpose() * q * phi == q;
  if (det == 0) return r;
  FieldMatrix phi_inv = inverse(phi);
  r.i_matches_j = p.right.gks.calI == phi * p.left.gks.calJ * phi_inv;
  r.j_matches_i = p.right.gks.calJ == phi * p.left.gks.calI * phi_inv;
  return r;
}

MirrorPair construct_mirror(const FieldMatrix& A, const IntMatrix& rho_int, int embedding_index) {
  const int g = A.rows();
  if (!A.is_square() || rho_int.rows() != g || rho_int.cols() != g)
    throw Error(ErrorCode::DimensionMismatch, "A and rho must be g x g");
  FieldMatrix rho = FieldMatrix::from_ints(rho_int);
  if (!rho.is_symmetric()) throw Error(ErrorCode::RhoNotNegativeDefinite, "rho is not symmetric");
  if (!positive_definite(-rho, NumberField::rationals()->embedding(1)).positive)
    throw Error(ErrorCode::RhoNotNegativeDefinite, "rho is not negative definite");
  if (determinant(A).is_zero()) throw Error(ErrorCode::SingularA, "A is singular");
  const FieldPtr& F = A.field();
  FieldMatrix a_inv = inverse(A);
  FieldMatrix rho_inv = inverse(rho);
  FieldMatrix z(F, g, g);
  FieldMatrix lower = -(A.transpose() * rho * A);

  auto left_t = ComplexTorus::make(FieldMatrix::blocks(z, -A, a_inv, z), embedding_index);
  KahlerData left_k{FieldMatrix::blocks(-rho.in_field(F), z, z, lower), FieldMatrix(F, 2 * g, 2 * g)};
  auto right_t = ComplexTorus::make(FieldMatrix::blocks(z, -(rho * A), a_inv * rho_inv, z), embedding_index);
  KahlerData right_k{FieldMatrix::blocks(-rho_inv.in_field(F), z, z, lower), FieldMatrix(F, 2 * g, 2 * g)};
  validate_kahler(left_t, left_k);
  validate_kahler(right_t, right_k);
  MirrorPair p{make_side(left_t, left_k), make_side(right_t, right_k), standard_mirror_map(g)};
  if (!verify_mirror(p).all()) throw Error(ErrorCode::InvalidArgument, "constructed pair fails verification");
  return p;
}

PsiMaps psi_maps(const MirrorPair& p) {
  const int n = p.left.kahler.G.rows();
  FieldMatrix phi = FieldMatrix::from_ints(p.phi);
  const auto& k = p.left.kahler;
  const auto& kp = p.right.kahler;
  const auto& I = p.left.torus.I;
  const auto& Ip = p.right.torus.I;
  auto build = [&](int sign) {
    PsiMap m{psi_from_phi(phi, k, sign)};
    FieldMatrix graph = k.B - k.G * Rational(sign);
    FieldMatrix graph_p = kp.B - kp.G * Rational(sign);
    FieldMatrix lower = phi.block(n, 0, n, n) + phi.block(n, n, n, n) * graph;
    if (lower != graph_p * m.psi)
      throw Error(ErrorCode::GraphConditionFails,
                  std::string("phi does not map C") + (sign > 0 ? "+" : "-") + " onto the mirror graph");
    m.isometry = m.psi.transpose() * kp.G * m.psi == k.G;
    m.holomorphic = Ip * m.psi == m.psi * I;
    m.antiholomorphic = Ip * m.psi == -(m.psi * I);
    return m;
  };
  return {build(+1), build(-1)};
}

IsogenyOutcome isogeny_from_mirror(const MirrorPair& p) {
  IsogenyOutcome out;
  out.hypothesis_met = ij_rational(p.left.gks);
  if (!out.hypothesis_met) {
    out.diagnosis = "HypothesisNotMet: calI calJ is not rational";
    return out;
  }
  auto maps = psi_maps(p);
  auto note = [&](const std::string& msg) { out.diagnosis += (out.diagnosis.empty() ? "" : "; ") + msg; };
  for (auto [name, m] : {std::pair{"psi+", &maps.plus}, std::pair{"psi-", &maps.minus}}) {
    if (!m->psi.is_rational()) {
      note(std::string(name) + " is irrational");
      continue;
    }
    auto r = m->psi.to_rationals();
    std::vector<Rational> all;
    for (const auto& row : r) all.insert(all.end(), row.begin(), row.end());
    Integer n = common_denominator(all);
    FieldMatrix gamma = FieldMatrix::from_rationals(r) * Rational(n);
    if (determinant(gamma).is_zero()) {
      note(std::string(name) + " is singular");
      continue;
    }
    if (!verify_isogeny_certificate(p.right.torus, p.left.torus, gamma)) {
      note(std::string(name) + " does not intertwine I and I'");
      continue;
    }
    out.gamma = IntMatrix::from_field(gamma);
    out.n = n;
    out.used = name;
    return out;
  }
  return out;
}

bool verify_isogeny_certificate(const ComplexTorus& t, const ComplexTorus& t_prime, const FieldMatrix& gamma) {
  if (gamma.rows() != t.I.rows() || t.I.rows() != t_prime.I.rows() || !gamma.is_square())
    throw Error(ErrorCode::DimensionMismatch, "gamma must match both tori");
  if (determinant(gamma).is_zero()) throw Error(ErrorCode::SingularGamma, "gamma is singular");
  return t.I * gamma == gamma * t_prime.I;
}

}  // namespace toruscm
