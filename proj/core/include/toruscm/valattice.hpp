#pragma once

#include <optional>

#include "toruscm/torus.hpp"

namespace toruscm {

// Lambda = Gamma + Gamma^* with the pairing q and the projector onto Lambda_z.
struct PairingLattice {
  int n = 0;
  FieldMatrix q;
  FieldMatrix p_plus;

  // Checks that q is symmetric unimodular, p_plus is idempotent and its image and kernel are q-orthogonal.
  static PairingLattice make(const FieldMatrix& q, const FieldMatrix& p_plus);
  FieldMatrix p_minus() const { return FieldMatrix::identity(p_plus.field(), n) - p_plus; }
};

// p_plus = (Id + IJ) / 2, checked against the graph of -G + B.
PairingLattice build_pairing_lattice(const ComplexTorus& t, const KahlerData& k);

struct ChiralReport {
  IntMatrix basis;                // rows span Lambda_ch (HNF)
  int rank = 0;
  std::optional<Integer> index;   // |Lambda / Lambda_ch|, nullopt when infinite
  bool rational = false;
  IntMatrix zpart, zbarpart;      // Lambda_ch meet Lambda_z, Lambda_ch meet Lambda_zbar
  int zpart_rank = 0, zbarpart_rank = 0;
};

ChiralReport chiral_sublattice(const PairingLattice& L);
bool va_rational(const ChiralReport& r);
// Number of irreducible summands V_alpha; nullopt stands for infinitely many.
std::optional<Integer> module_count(const ChiralReport& r);

// Rows of the result are dual to the rows of `basis`: q(E^i, E~^j) = sign delta_ij. Throws DegenerateRestriction.
FieldMatrix dual_basis(const FieldMatrix& basis, const PairingLattice& L, int sign);

enum class ModeKind { Boson, Fermion };

// Structure constant of [h_a, h'_b] (bosons) or {h_a, h'_b} (fermions); h, h' are column vectors.
// Bosonic modes are integers, fermionic ones lie in 1/2 + Z; otherwise ModeParityMismatch.
FieldElement supercommutator(const PairingLattice& L, ModeKind kind, const FieldMatrix& h, const Rational& mode_a,
                             const FieldMatrix& h2, const Rational& mode_b);

}  // namespace toruscm
