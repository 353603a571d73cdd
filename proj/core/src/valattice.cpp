#include "toruscm/valattice.hpp"

#include "toruscm/errors.hpp"

namespace toruscm {

namespace {

// Integer combinations of `rows` lying in ker(m), as a lattice basis in Z^n.
IntMatrix meet_kernel(const IntMatrix& rows, const FieldMatrix& m) {
  const int n = rows.cols();
  if (rows.rows() == 0) return IntMatrix(0, n);
  FieldMatrix r = FieldMatrix::from_ints(rows.transpose());
  IntMatrix y = integer_kernel(m * r);
  if (y.rows() == 0) return IntMatrix(0, n);
  return hnf(y * rows);
}

enum class Side { Z, Zbar, Zero, Neither };

Side side_of(const PairingLattice& L, const FieldMatrix& h) {
  if (h.is_zero()) return Side::Zero;
  if (L.p_plus * h == h) return Side::Z;
  if ((L.p_plus * h).is_zero()) return Side::Zbar;
  return Side::Neither;
}

}  // namespace

PairingLattice PairingLattice::make(const FieldMatrix& q, const FieldMatrix& p_plus) {
  const int n = q.rows();
  if (!q.is_square() || p_plus.rows() != n || p_plus.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "q and the projector must be square of equal size");
  if (!q.is_rational() || !q.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "q must be rational symmetric");
  auto qi = IntMatrix::from_field(q);
  Integer det = determinant(qi);
  if (det != 1 && det != -1) throw Error(ErrorCode::InvalidArgument, "q is not unimodular");
  if (p_plus * p_plus != p_plus) throw Error(ErrorCode::NotInvolution, "projector is not idempotent");
  PairingLattice L{n, q, p_plus};
  if (!(p_plus.transpose() * q * L.p_minus()).is_zero())
    throw Error(ErrorCode::GraphConditionFails, "image and kernel of the projector are not q-orthogonal");
  return L;
}

PairingLattice build_pairing_lattice(const ComplexTorus& t, const KahlerData& k) {
  auto gks = induce_gks(t, k);
  auto es = eigenspace_graphs(gks, k);
  return PairingLattice::make(gks.q, es.p_plus);
}

ChiralReport chiral_sublattice(const PairingLattice& L) {
  ChiralReport r;
  // q unimodular: q(P lambda, e_i) in Z for all i is equivalent to P lambda in Lambda.
  r.basis = saturate_integer_solutions(L.q * L.p_plus);
  r.rank = r.basis.rows();
  r.index = lattice_index(r.basis, L.n);
  r.rational = r.rank == L.n;
  r.zpart = meet_kernel(r.basis, L.p_minus());
  r.zbarpart = meet_kernel(r.basis, L.p_plus);
  r.zpart_rank = r.zpart.rows();
  r.zbarpart_rank = r.zbarpart.rows();
  return r;
}

bool va_rational(const ChiralReport& r) { return r.rational; }

std::optional<Integer> module_count(const ChiralReport& r) { return r.index; }

FieldMatrix dual_basis(const FieldMatrix& basis, const PairingLattice& L, int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidArgument, "sign must be +1 or -1");
  if (basis.cols() != L.n) throw Error(ErrorCode::DimensionMismatch, "basis rows must have length " + std::to_string(L.n));
  FieldMatrix gram = basis * L.q * basis.transpose();
  if (determinant(gram).is_zero()) throw Error(ErrorCode::DegenerateRestriction, "q restricted to the span is degenerate");
  return inverse(gram) * basis * Rational(sign);
}

FieldElement supercommutator(const PairingLattice& L, ModeKind kind, const FieldMatrix& h, const Rational& mode_a,
                             const FieldMatrix& h2, const Rational& mode_b) {
  if (h.rows() != L.n || h2.rows() != L.n || h.cols() != 1 || h2.cols() != 1)
    throw Error(ErrorCode::DimensionMismatch, "vectors must be columns of length " + std::to_string(L.n));
  auto is_integer = [](const Rational& x) { return x.get_den() == 1; };
  if (kind == ModeKind::Boson && !(is_integer(mode_a) && is_integer(mode_b)))
    throw Error(ErrorCode::ModeParityMismatch, "bosonic modes must be integers");
  if (kind == ModeKind::Fermion &&
      !(is_integer(Rational(mode_a - Rational(1, 2))) && is_integer(Rational(mode_b - Rational(1, 2)))))
    throw Error(ErrorCode::ModeParityMismatch, "fermionic modes must lie in 1/2 + Z");
  Side a = side_of(L, h), b = side_of(L, h2);
  if (a == Side::Neither || b == Side::Neither)
    throw Error(ErrorCode::InvalidArgument, "vectors must lie in Lambda_z or Lambda_zbar");
  FieldElement zero(L.p_plus.field());
  if (a == Side::Zero || b == Side::Zero || a != b) return zero;
  if (mode_a + mode_b != 0) return zero;
  FieldElement pairing = (h.transpose() * L.q * h2)(0, 0);
  if (a == Side::Zbar) pairing = -pairing;
  return kind == ModeKind::Boson ? pairing * mode_a : pairing;
}

}  // namespace toruscm
