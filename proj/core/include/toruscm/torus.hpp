#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toruscm/exactla.hpp"
#include "toruscm/matrix.hpp"

namespace toruscm {

// Lattice Gamma = Z^{2g} with a complex structure I over a field with a designated real embedding.
struct ComplexTorus {
  int g = 0;
  FieldPtr field;
  int embedding_index = 1;
  FieldMatrix I;

  // Checks I^2 = -Id, that the embedding is real and that I is real under it.
  static ComplexTorus make(const FieldMatrix& I, int embedding_index = 1);
  Embedding embedding() const { return field->embedding(embedding_index); }
};

// Bilinear forms are u^T F v throughout; omega = G I.
struct KahlerData {
  FieldMatrix G;
  FieldMatrix B;
};

// q = [[0, -Id], [-Id, 0]] on Gamma + Gamma^*.
FieldMatrix pairing_matrix(int g);

struct GksPair {
  FieldMatrix calI, calJ, q;
  int embedding_index = 1;
  FieldPtr field;

  FieldMatrix ij() const { return calI * calJ; }
  FieldMatrix metric() const { return q * ij(); }
  Embedding embedding() const { return field->embedding(embedding_index); }
};

struct GksReport {
  bool i_squared = false;    // calI^2 = -Id
  bool j_squared = false;    // calJ^2 = -Id
  bool commute = false;      // calI calJ = calJ calI
  bool i_preserves_q = false;
  bool j_preserves_q = false;
  bool ij_q_symmetric = false;   // q(IJ u, v) = q(u, IJ v)
  bool metric_positive = false;  // q IJ symmetric positive definite
  bool all() const {
    return i_squared && j_squared && commute && i_preserves_q && j_preserves_q && ij_q_symmetric && metric_positive;
  }
};

// I = [[-T1 T2^-1, -T1 T2^-1 T1 - T2], [T2^-1, T2^-1 T1]] for the period matrix (1, T1 + i T2).
ComplexTorus complex_structure_from_period(const FieldMatrix& t1, const FieldMatrix& t2, int embedding_index = 1);

// Throws NotSymmetric, NotAntisymmetric, IncompatibleMetric or NotPositiveDefinite.
void validate_kahler(const ComplexTorus& t, const KahlerData& k);

GksPair induce_gks(const ComplexTorus& t, const KahlerData& k);
GksReport verify_gks(const GksPair& p);

struct Eigenspaces {
  FieldMatrix p_plus, p_minus;               // (Id +- IJ)/2
  std::optional<FieldMatrix> graph_plus;     // columns (e_k, (-G+B) e_k)
  std::optional<FieldMatrix> graph_minus;    // columns (e_k, (G+B) e_k)
};

// Throws NotInvolution when (IJ)^2 != Id, GraphConditionFails when the graphs disagree.
Eigenspaces eigenspace_graphs(const GksPair& p, const std::optional<KahlerData>& induced_by = std::nullopt);

bool ij_rational(const GksPair& p);

// M^T q M = 2 diag(G^-1, -G^-1) for M = [[-G^-1, G^-1], [Id - B G^-1, Id + B G^-1]].
bool charge_isometry_check(const KahlerData& k);

}  // namespace toruscm
