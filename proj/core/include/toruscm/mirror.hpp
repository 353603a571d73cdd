#pragma once

#include <optional>
#include <string>

#include "toruscm/torus.hpp"

namespace toruscm {

struct MirrorSide {
  ComplexTorus torus;
  KahlerData kahler;
  GksPair gks;
};

// phi : Gamma + Gamma^* -> Gamma' + Gamma'^*, integral 4g x 4g.
struct MirrorPair {
  MirrorSide left, right;
  IntMatrix phi;
};

struct MirrorReport {
  bool unimodular = false;     // det phi = +-1
  bool q_compatible = false;   // phi^T q' phi = q
  bool i_matches_j = false;    // calI' = phi calJ phi^-1
  bool j_matches_i = false;    // calJ' = phi calI phi^-1
  bool all() const { return unimodular && q_compatible && i_matches_j && j_matches_i; }
};

MirrorSide make_side(const ComplexTorus& t, const KahlerData& k);

// Throws DimensionMismatch when the sides or phi disagree in size.
MirrorReport verify_mirror(const MirrorPair& p);

// Mirror of the torus with period matrix (1, A i). rho is symmetric negative definite.
// A's field must have a real embedding `embedding_index`.
MirrorPair construct_mirror(const FieldMatrix& A, const IntMatrix& rho, int embedding_index = 1);

// [[0, 0, Id, 0], [0, -Id, 0, 0], [Id, 0, 0, 0], [0, 0, 0, -Id]] with g x g blocks.
IntMatrix standard_mirror_map(int g);

struct PsiMap {
  FieldMatrix psi;
  bool isometry = false;          // G(a, b) = G'(psi a, psi b)
  bool holomorphic = false;       // I' psi = psi I
  bool antiholomorphic = false;   // I' psi = -psi I
};

struct PsiMaps {
  PsiMap plus, minus;
};

// Throws GraphConditionFails when phi does not carry C+- onto the graphs of -+G' + B'.
PsiMaps psi_maps(const MirrorPair& p);

struct IsogenyOutcome {
  bool hypothesis_met = false;  // calI calJ rational on the left
  std::optional<IntMatrix> gamma;
  Integer n = 0;
  std::string used;        // "psi+" or "psi-"
  std::string diagnosis;
};

IsogenyOutcome isogeny_from_mirror(const MirrorPair& p);

// True iff I' = gamma^-1 I gamma. Throws SingularGamma.
bool verify_isogeny_certificate(const ComplexTorus& t, const ComplexTorus& t_prime, const FieldMatrix& gamma);

}  // namespace toruscm
