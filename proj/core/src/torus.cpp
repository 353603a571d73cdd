#include "toruscm/torus.hpp"

#include "toruscm/errors.hpp"

namespace toruscm {

namespace {

bool real_under(const FieldMatrix& m, const Embedding& e) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!is_real_under(m(i, j), e)) return false;
  return true;
}

FieldMatrix zeros(const FieldPtr& f, int n) { return FieldMatrix(f, n, n); }

}  // namespace

ComplexTorus ComplexTorus::make(const FieldMatrix& I, int embedding_index) {
  if (!I.is_square() || I.rows() % 2 != 0 || I.rows() == 0)
    throw Error(ErrorCode::DimensionMismatch, "complex structure must be 2g x 2g");
  ComplexTorus t;
  t.g = I.rows() / 2;
  t.field = I.field();
  t.embedding_index = embedding_index;
  t.I = I;
  Embedding e = t.field->embedding(embedding_index);
  if (!e.is_real) throw Error(ErrorCode::NotRealUnderEmbedding, "designated embedding must be real");
  if (I * I != -FieldMatrix::identity(t.field, I.rows()))
    throw Error(ErrorCode::NotComplexStructure, "I^2 != -Id");
  if (!real_under(I, e)) throw Error(ErrorCode::NotRealUnderEmbedding, "I is not real");
  return t;
}

FieldMatrix pairing_matrix(int g) {
  auto f = NumberField::rationals();
  auto id = FieldMatrix::identity(f, 2 * g);
  return FieldMatrix::blocks(zeros(f, 2 * g), -id, -id, zeros(f, 2 * g));
}

ComplexTorus complex_structure_from_period(const FieldMatrix& t1, const FieldMatrix& t2, int embedding_index) {
  if (!t1.is_square() || !t2.is_square() || t1.rows() != t2.rows())
    throw Error(ErrorCode::DimensionMismatch, "T1 and T2 must be g x g");
  FieldMatrix t2inv;
  try {
    t2inv = inverse(t2);
  } catch (const Error&) {
    throw Error(ErrorCode::Singular, "T2 is singular");
  }
  FieldMatrix a = -(t1 * t2inv);
  FieldMatrix b = a * t1 - t2;
  FieldMatrix c = t2inv;
  FieldMatrix d = t2inv * t1;
  return ComplexTorus::make(FieldMatrix::blocks(a, b, c, d), embedding_index);
}

void validate_kahler(const ComplexTorus& t, const KahlerData& k) {
  const int n = 2 * t.g;
  if (k.G.rows() != n || k.G.cols() != n || k.B.rows() != n || k.B.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "G and B must be 2g x 2g");
  for (const auto* m : {&k.G, &k.B})
    if (!m->field()->is_rationals() && !m->field()->same_as(*t.field))
      throw Error(ErrorCode::FieldMismatch, "G and B must lie in the torus field " + t.field->describe());
  if (!k.G.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "G is not symmetric");
  if (!k.B.is_antisymmetric()) throw Error(ErrorCode::NotAntisymmetric, "B is not antisymmetric");
  if (t.I.transpose() * k.G * t.I != k.G) throw Error(ErrorCode::IncompatibleMetric, "I^T G I != G");
  Embedding e = t.embedding();
  if (!real_under(k.B, e)) throw Error(ErrorCode::NotRealUnderEmbedding, "B is not real");
  if (!positive_definite(k.G, e).positive) throw Error(ErrorCode::NotPositiveDefinite, "G is not positive definite");
}

GksPair induce_gks(const ComplexTorus& t, const KahlerData& k) {
  validate_kahler(t, k);
  const FieldMatrix& I = t.I;
  const FieldMatrix& G = k.G;
  const FieldMatrix& B = k.B;
  FieldMatrix omega = G * I;
  FieldMatrix winv = inverse(omega);
  GksPair p;
  p.field = t.field;
  p.embedding_index = t.embedding_index;
  p.q = pairing_matrix(t.g);
  p.calI = FieldMatrix::blocks(I, zeros(I.field(), 2 * t.g), B * I + I.transpose() * B, -I.transpose());
  p.calJ = FieldMatrix::blocks(winv * B, -winv, omega + B * winv * B, -(B * winv));
  // Alternative closed form through G^-1.
  FieldMatrix ginv = inverse(G);
  FieldMatrix alt = FieldMatrix::blocks(-(I * ginv * B), I * ginv, G * I - B * I * ginv * B, B * I * ginv);
  if (alt != p.calJ) throw Error(ErrorCode::InvalidArgument, "calJ disagrees with its alternative form");
  GksReport r = verify_gks(p);
  if (!r.metric_positive) throw Error(ErrorCode::NotPositiveDefinite, "q IJ is not positive definite");
  if (!r.all()) throw Error(ErrorCode::InvalidArgument, "induced pair violates a generalized Kaehler axiom");
  return p;
}

GksReport verify_gks(const GksPair& p) {
  GksReport r;
  const int n = p.calI.rows();
  FieldMatrix id = FieldMatrix::identity(p.field, n);
  r.i_squared = p.calI * p.calI == -id;
  r.j_squared = p.calJ * p.calJ == -id;
  FieldMatrix ij = p.calI * p.calJ;
  r.commute = ij == p.calJ * p.calI;
  r.i_preserves_q = p.calI.transpose() * p.q * p.calI == p.q;
  r.j_preserves_q = p.calJ.transpose() * p.q * p.calJ == p.q;
  r.ij_q_symmetric = ij.transpose() * p.q == p.q * ij;
  FieldMatrix metric = p.q * ij;
  if (metric.is_symmetric()) {
    try {
      r.metric_positive = positive_definite(metric, p.embedding()).positive;
    } catch (const Error&) {
      r.metric_positive = false;
    }
  }
  return r;
}

Eigenspaces eigenspace_graphs(const GksPair& p, const std::optional<KahlerData>& induced_by) {
  const int n = p.calI.rows();
  FieldMatrix ij = p.ij();
  FieldMatrix id = FieldMatrix::identity(ij.field(), n);
  if (ij * ij != id) throw Error(ErrorCode::NotInvolution, "(IJ)^2 != Id");
  Eigenspaces out;
  out.p_plus = (id + ij) * Rational(1, 2);
  out.p_minus = (id - ij) * Rational(1, 2);
  if (induced_by) {
    const int m = n / 2;
    FieldMatrix idm = FieldMatrix::identity(ij.field(), m);
    FieldMatrix gp(ij.field(), n, m), gm(ij.field(), n, m);
    gp.set_block(0, 0, idm);
    gp.set_block(m, 0, -induced_by->G + induced_by->B);
    gm.set_block(0, 0, idm);
    gm.set_block(m, 0, induced_by->G + induced_by->B);
    if (ij * gp != gp || ij * gm != -gm)
      throw Error(ErrorCode::GraphConditionFails, "eigenspaces are not the graphs of -+G+B");
    out.graph_plus = gp;
    out.graph_minus = gm;
  }
  return out;
}

bool ij_rational(const GksPair& p) { return p.ij().is_rational(); }

bool charge_isometry_check(const KahlerData& k) {
  if (!k.G.is_square() || k.G.rows() % 2 != 0) throw Error(ErrorCode::DimensionMismatch, "G must be 2g x 2g");
  const int n = k.G.rows();
  FieldMatrix ginv;
  try {
    ginv = inverse(k.G);
  } catch (const Error&) {
    throw Error(ErrorCode::Singular, "G is singular");
  }
  FieldMatrix id = FieldMatrix::identity(ginv.field(), n);
  FieldMatrix m = FieldMatrix::blocks(-ginv, ginv, id - k.B * ginv, id + k.B * ginv);
  FieldMatrix z(ginv.field(), n, n);
  FieldMatrix rhs = FieldMatrix::blocks(ginv, z, z, -ginv) * Rational(2);
  return m.transpose() * pairing_matrix(n / 2) * m == rhs;
}

}  // namespace toruscm
