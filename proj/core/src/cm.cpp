#include "toruscm/cm.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "toruscm/errors.hpp"
#include "toruscm/random.hpp"

namespace toruscm {

namespace {

constexpr int kMaxHalvings = 200;

FieldElement into(const FieldElement& x, const FieldPtr& K) {
  if (x.field()->same_as(*K)) return x;
  if (x.is_rational()) return x.in_field(K);
  throw Error(ErrorCode::FieldMismatch, "element " + x.to_string() + " is not in " + K->describe());
}

// Index into `roots` of the unique root box meeting sigma_e(x); roots belong to p with p(x) = 0.
int root_label(const Poly& p, std::vector<RootEnclosure>& roots, const FieldElement& x, int emb_index) {
  const NumberField& K = *x.field();
  Rational w = default_width();
  Embedding e = K.embedding(emb_index);
  for (int it = 0; it < kMaxHalvings; ++it, w /= 2) {
    e = K.refine(e, w);
    Box v = evaluate(x, e);
    int hit = -1, count = 0;
    for (std::size_t k = 0; k < roots.size(); ++k)
      if (roots[k].box.overlaps(v)) {
        hit = static_cast<int>(k);
        ++count;
      }
    if (count == 1) return hit;
    roots = refine_roots(p, roots, w);
  }
  throw Error(ErrorCode::InvalidArgument, "could not separate conjugates of " + x.to_string());
}

// True iff sigma_i(x) = sigma_j(x).
bool same_image(const FieldElement& x, int i, int j) {
  if (i == j || x.is_rational()) return true;
  Poly mu = minimal_polynomial(x);
  auto roots = isolate_roots(mu, default_width());
  return root_label(mu, roots, x, i) == root_label(mu, roots, x, j);
}

// Power-basis coordinates of the basis elements as columns of a rational d x n matrix.
FieldMatrix coordinate_matrix(const std::vector<FieldElement>& elems, int d) {
  FieldMatrix c(NumberField::rationals(), d, static_cast<int>(elems.size()));
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (int i = 0; i < d; ++i)
      c(i, static_cast<int>(k)) = FieldElement(NumberField::rationals(), elems[k].coords()[static_cast<std::size_t>(i)]);
  return c;
}

std::vector<FieldElement> basis_in(const CmInput& in) {
  std::vector<FieldElement> out;
  for (const auto& a : in.basis) out.push_back(into(a, in.K));
  return out;
}

void validate_field(const FieldPtr& K) {
  if (!K->has_conj()) throw Error(ErrorCode::UnsupportedField, "field has no conj");
  if (K->degree() % 2 != 0) throw Error(ErrorCode::UnsupportedField, "CM fields have even degree");
  for (const auto& e : K->embeddings())
    if (e.is_real) throw Error(ErrorCode::UnsupportedField, "CM fields are totally imaginary");
  if (!K->conj_is_complex_conjugation())
    throw Error(ErrorCode::UnsupportedField, "conj is not complex conjugation under every embedding");
  if (K->irreducibility() == Irreducibility::Reducible)
    throw Error(ErrorCode::UnsupportedField, "minimal polynomial is reducible");
}

void validate_phi(const FieldPtr& K, const std::vector<int>& phi) {
  const int d = K->degree();
  if (static_cast<int>(phi.size()) * 2 != d)
    throw Error(ErrorCode::NotCMType, "a CM-type has " + std::to_string(d / 2) + " embeddings");
  std::set<int> seen;
  for (int j : phi) {
    if (j < 1 || j > d) throw Error(ErrorCode::NotCMType, "embedding index " + std::to_string(j) + " out of range");
    if (!seen.insert(j).second) throw Error(ErrorCode::NotCMType, "repeated embedding " + std::to_string(j));
  }
  for (int j : phi)
    if (seen.count(K->embedding(j).conj_index))
      throw Error(ErrorCode::NotCMType,
                  "embeddings " + std::to_string(j) + " and " + std::to_string(K->embedding(j).conj_index) +
                      " are conjugate");
}

void validate_basis(const FieldPtr& K, const std::vector<FieldElement>& basis) {
  const int n = static_cast<int>(basis.size());
  if (n != K->degree())
    throw Error(ErrorCode::DimensionMismatch, "basis has " + std::to_string(n) + " elements, field degree is " +
                                                  std::to_string(K->degree()));
  FieldMatrix gram(NumberField::rationals(), n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      gram(k, l) = FieldElement(NumberField::rationals(), trace_q(basis[static_cast<std::size_t>(k)] *
                                                                   basis[static_cast<std::size_t>(l)]));
  if (determinant(gram).is_zero()) throw Error(ErrorCode::BasisDependent, "trace form is degenerate");
}

// Empty string when beta is admissible for phi, otherwise the reason.
std::string beta_problem(const FieldElement& beta, const std::vector<int>& phi) {
  const NumberField& K = *beta.field();
  if (beta.is_zero()) return "beta is zero";
  if (beta.conj() != -beta) return "conj(beta) != -beta";
  FieldElement lambda = -(beta * beta);
  for (const auto& e : K.embeddings())
    if (exact_sign(lambda, e) <= 0) return "-beta^2 is not totally positive";
  for (int j : phi)
    if (imag_sign(beta, K.embedding(j)) <= 0) return "Im sigma_" + std::to_string(j) + "(beta) <= 0";
  return {};
}

// Field generated by theta = sqrt(sigma(lambda)) for the real embedding of Q(theta) matching sigma.
struct ThetaField {
  FieldPtr F;
  int embedding_index = 1;
  FieldElement theta;
};

ThetaField theta_field(const FieldElement& lambda, const Poly& mu, int phi0) {
  const NumberField& K = *lambda.field();
  const int e = mu.degree();
  Integer c = common_denominator(mu.coeffs());
  // h(x) = c^{2e} mu(x^2 / c^2) is monic integral with root c * theta.
  std::vector<Rational> hc(static_cast<std::size_t>(2 * e + 1));
  Rational c2 = Rational(c * c);
  Rational scale = 1;
  for (int k = e; k >= 0; --k) {
    hc[static_cast<std::size_t>(2 * k)] = mu.coeff(k) * scale;
    scale *= c2;
  }
  Poly h(hc);
  Rational w = default_width();
  auto roots = isolate_roots(h, w);
  Embedding emb = K.embedding(phi0);
  int idx = -1;
  for (int it = 0; it < kMaxHalvings && idx < 0; ++it, w /= 2) {
    emb = K.refine(emb, w);
    Box target = evaluate(lambda, emb) * c2;
    int hit = -1, count = 0;
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const auto& r = roots[k];
      if (!r.is_real || r.box.re.hi <= 0) continue;
      if ((r.box * r.box).overlaps(target)) {
        hit = static_cast<int>(k);
        ++count;
      }
    }
    if (count == 1 && roots[static_cast<std::size_t>(hit)].box.re.lo > 0) idx = hit;
    else roots = refine_roots(h, roots, w);
  }
  if (idx < 0) throw Error(ErrorCode::InvalidArgument, "could not locate theta among the roots");
  Poly f = factor_containing_root(h, idx);
  std::vector<Integer> fi;
  for (const auto& a : f.coeffs()) fi.push_back(a.get_num());
  ThetaField out;
  out.F = NumberField::make(fi);
  if (out.F->is_rationals()) {
    out.theta = FieldElement(out.F, -f.coeff(0) / Rational(c));
    return out;
  }
  Box target = roots[static_cast<std::size_t>(idx)].box;
  for (int it = 0; it < kMaxHalvings; ++it, w /= 2) {
    int hit = -1, count = 0;
    for (const auto& fe : out.F->embeddings(w))
      if (fe.is_real && fe.enclosure.overlaps(target)) {
        hit = fe.index;
        ++count;
      }
    if (count == 1) {
      out.embedding_index = hit;
      out.theta = FieldElement::generator(out.F) * (Rational(1) / Rational(c));
      return out;
    }
    roots = refine_roots(h, roots, w);
    target = roots[static_cast<std::size_t>(idx)].box;
  }
  throw Error(ErrorCode::InvalidArgument, "could not match theta with an embedding of Q(theta)");
}

FieldElement apply_automorphism(const FieldElement& x, const FieldElement& image_of_gen) {
  return evaluate(x.as_poly(), image_of_gen);
}

FieldMatrix from_int_row(const IntMatrix& rows, int r, int n) {
  FieldMatrix m(NumberField::rationals(), n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m(a, b) = FieldElement(NumberField::rationals(), Rational(rows(r, a * n + b)));
  return m;
}

std::vector<FieldMatrix> random_combinations(const std::vector<FieldMatrix>& basis, SeededRng& rng) {
  FieldMatrix m(NumberField::rationals(), basis[0].rows(), basis[0].cols());
  for (const auto& b : basis) m = m + b * rng.small_rational();
  return {m};
}

// Integer polynomial c^n p(x / c) with the same roots up to scaling, for irreducibility tests.
Poly integral_scaling(const Poly& p) {
  Integer c = common_denominator(p.coeffs());
  const int n = p.degree();
  std::vector<Rational> out(static_cast<std::size_t>(n + 1));
  Rational s = 1;
  for (int k = n; k >= 0; --k) {
    out[static_cast<std::size_t>(k)] = p.coeff(k) * s;
    s *= Rational(c);
  }
  return Poly(out);
}

}  // namespace

std::string_view verdict_name(CmVerdict v) {
  switch (v) {
    case CmVerdict::CM: return "CM";
    case CmVerdict::NotCM: return "NotCM";
    case CmVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

void validate_cm_input(const CmInput& in) {
  if (!in.K) throw Error(ErrorCode::InvalidArgument, "missing field");
  validate_field(in.K);
  auto basis = basis_in(in);
  validate_basis(in.K, basis);
  validate_phi(in.K, in.phi);
  if (in.beta) {
    auto problem = beta_problem(into(*in.beta, in.K), in.phi);
    if (!problem.empty()) throw Error(ErrorCode::BetaNotAdmissible, problem);
  }
}

std::vector<FieldElement> automorphisms_by_embedding(const FieldPtr& K, int reference_embedding) {
  const int d = K->degree();
  auto roots = roots_in_field(K->minpoly(), K);
  if (static_cast<int>(roots.size()) != d)
    throw Error(ErrorCode::UnsupportedField, "field is not Galois (" + std::to_string(roots.size()) + " of " +
                                                 std::to_string(d) + " conjugates lie in it)");
  std::vector<FieldElement> out(static_cast<std::size_t>(d));
  Embedding ref = K->embedding(reference_embedding);
  Rational w = default_width();
  std::vector<bool> done(roots.size(), false);
  std::size_t remaining = roots.size();
  for (int it = 0; it < kMaxHalvings && remaining > 0; ++it, w /= 2) {
    ref = K->refine(ref, w);
    auto embs = K->embeddings(w);
    for (std::size_t r = 0; r < roots.size(); ++r) {
      if (done[r]) continue;
      Box v = evaluate(roots[r], ref);
      int hit = -1, count = 0;
      for (const auto& e : embs)
        if (e.enclosure.overlaps(v)) {
          hit = e.index;
          ++count;
        }
      if (count == 1) {
        out[static_cast<std::size_t>(hit - 1)] = roots[r];
        done[r] = true;
        --remaining;
      }
    }
  }
  if (remaining > 0) throw Error(ErrorCode::InvalidArgument, "could not label automorphisms");
  return out;
}

FieldElement find_beta(const FieldPtr& K, const std::vector<FieldElement>& basis_in_, const std::vector<int>& phi,
                       int budget) {
  validate_field(K);
  std::vector<FieldElement> basis;
  for (const auto& a : basis_in_) basis.push_back(into(a, K));
  validate_basis(K, basis);
  validate_phi(K, phi);
  const int n = static_cast<int>(basis.size());
  std::vector<FieldElement> sym;
  for (const auto& a : basis) sym.push_back(a + a.conj());
  IntMatrix ker = integer_kernel(coordinate_matrix(sym, K->degree()));
  std::vector<FieldElement> anti;
  for (int r = 0; r < ker.rows(); ++r) {
    FieldElement b(K);
    for (int k = 0; k < n; ++k) b += basis[static_cast<std::size_t>(k)] * Rational(ker(r, k));
    anti.push_back(b);
  }
  const int m = static_cast<int>(anti.size());
  // Coordinates ordered 0, 1, -1, 2, -2, ... within each sup-norm shell.
  auto rank_of = [](long v) { return v == 0 ? 0 : (v > 0 ? 2 * v - 1 : -2 * v); };
  std::vector<std::vector<long>> cands;
  std::vector<long> t(static_cast<std::size_t>(m), -budget);
  if (m > 0)
    for (;;) {
      cands.push_back(t);
      int i = 0;
      while (i < m && t[static_cast<std::size_t>(i)] == budget) t[static_cast<std::size_t>(i++)] = -budget;
      if (i == m) break;
      ++t[static_cast<std::size_t>(i)];
    }
  auto key = [&](const std::vector<long>& v) {
    long sup = 0, l1 = 0;
    std::vector<long> ranks;
    for (long x : v) {
      sup = std::max(sup, std::labs(x));
      l1 += std::labs(x);
      ranks.push_back(rank_of(x));
    }
    return std::make_tuple(sup, l1, ranks);
  };
  std::sort(cands.begin(), cands.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  for (const auto& c : cands) {
    FieldElement beta(K);
    for (int i = 0; i < m; ++i) beta += anti[static_cast<std::size_t>(i)] * Rational(c[static_cast<std::size_t>(i)]);
    if (beta_problem(beta, phi).empty()) return beta;
  }
  throw Error(ErrorCode::NotFoundWithinBudget, "no admissible beta with coordinates bounded by " + std::to_string(budget));
}

CmTorus cm_torus(const CmInput& raw) {
  CmInput in = raw;
  validate_cm_input(in);
  const FieldPtr& K = in.K;
  const int d = K->degree(), g = d / 2;
  auto basis = basis_in(in);
  FieldElement beta = in.beta ? into(*in.beta, K) : find_beta(K, basis, in.phi, 3);

  FieldElement lambda = -(beta * beta);
  Poly mu = minimal_polynomial(lambda);
  if (mu.degree() != g)
    throw Error(ErrorCode::UnsupportedField, "-beta^2 does not generate the totally real subfield");
  const int phi0 = in.phi.front();
  auto tf = theta_field(lambda, mu, phi0);

  auto aut = automorphisms_by_embedding(K, phi0);
  // Rows: Phi, then the conjugates of Phi.
  std::vector<int> order = in.phi;
  for (int j : in.phi) order.push_back(K->embedding(j).conj_index);
  FieldMatrix N(K, d, d), S(K, d, d);
  for (int r = 0; r < d; ++r) {
    const auto& tau = aut[static_cast<std::size_t>(order[static_cast<std::size_t>(r)] - 1)];
    for (int k = 0; k < d; ++k) N(r, k) = apply_automorphism(basis[static_cast<std::size_t>(k)], tau);
    S(r, r) = FieldElement(K, Rational(r < g ? 1 : -1));
  }
  FieldMatrix X = inverse(N) * S * N;
  FieldElement theta2 = tf.theta * tf.theta;
  FieldElement beta_inv = beta.inverse();
  // sigma_phi0 of an element of Q(lambda) as an element of F.
  auto real_image = [&](const FieldElement& y) {
    auto e = power_coordinates(y, lambda, g);
    if (!e) throw Error(ErrorCode::UnsupportedField, "entry outside Q(-beta^2)");
    FieldElement out(tf.F);
    FieldElement p(tf.F, Rational(1));
    for (int k = 0; k < g; ++k) {
      out += p * (*e)[static_cast<std::size_t>(k)];
      p = p * theta2;
    }
    return out;
  };
  // Im sigma_phi0(x) for conj(x) = -x.
  auto imag_image = [&](const FieldElement& x) { return tf.theta * real_image(x * beta_inv); };

  FieldMatrix I(tf.F, d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      const FieldElement& x = X(r, c);
      if (x.conj() != -x) throw Error(ErrorCode::UnsupportedField, "period matrix entry is not purely imaginary");
      I(r, c) = -imag_image(x);
    }
  FieldMatrix pre(tf.F, g, d), pim(tf.F, g, d);
  for (int r = 0; r < g; ++r)
    for (int k = 0; k < d; ++k) {
      FieldElement v = N(r, k), cv = v.conj();
      pre(r, k) = real_image((v + cv) * Rational(1, 2));
      pim(r, k) = imag_image((v - cv) * Rational(1, 2));
    }

  auto Q = NumberField::rationals();
  FieldMatrix E(Q, d, d), G(Q, d, d);
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) {
      FieldElement p = basis[static_cast<std::size_t>(k)] * basis[static_cast<std::size_t>(l)].conj();
      E(k, l) = FieldElement(Q, trace_q(beta * p));
      G(k, l) = FieldElement(Q, trace_q(lambda * p));
    }
  std::vector<FieldElement> scaled;
  for (const auto& a : basis) scaled.push_back(beta * a);
  auto sol = solve_linear(coordinate_matrix(basis, d), coordinate_matrix(scaled, d));
  FieldMatrix Mb = *sol.particular;

  CmTorus out{ComplexTorus::make(I, tf.embedding_index), E, G, Mb, beta, tf.theta, pre, pim, K->irreducibility()};
  const FieldMatrix& It = out.torus.I;
  if (It.transpose() * E * It != E.in_field(It.field()))
    throw Error(ErrorCode::IncompatiblePolarization, "I^T E I != E");
  if (It.transpose() * G * It != G.in_field(It.field()))
    throw Error(ErrorCode::IncompatibleMetric, "I^T G I != G");
  if (E * Mb != G) throw Error(ErrorCode::InvalidArgument, "G != E * (multiplication by beta)");
  if (!positive_definite(G, Q->embedding(1)).positive)
    throw Error(ErrorCode::NotPositiveDefinite, "trace metric is not positive definite");
  return out;
}

EndAlgebra endomorphism_algebra(const ComplexTorus& t) {
  const FieldMatrix& I = t.I;
  const int n = I.rows();
  FieldMatrix c(t.field, n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int row = i * n + j;
      // (M I - I M)_{ij} = sum_b M_ib I_bj - sum_a I_ia M_aj.
      for (int b = 0; b < n; ++b) c(row, i * n + b) += I(b, j);
      for (int a = 0; a < n; ++a) c(row, a * n + j) -= I(i, a);
    }
  IntMatrix ker = integer_kernel(c);
  EndAlgebra out;
  for (int r = 0; r < ker.rows(); ++r) out.basis.push_back(from_int_row(ker, r, n));
  out.dim = static_cast<int>(out.basis.size());
  return out;
}

CmCertificate cm_certificate(const ComplexTorus& t, int trials, std::uint64_t seed) {
  CmCertificate out;
  auto end = endomorphism_algebra(t);
  out.end_dim = end.dim;
  const int n = 2 * t.g;
  if (end.dim < n) {
    out.verdict = CmVerdict::NotCM;
    return out;
  }
  SeededRng rng(seed);
  auto attempt = [&](const FieldMatrix& m) {
    ++out.candidates_tried;
    Poly p = minimal_polynomial(m);
    if (p.degree() != n || !is_squarefree(p)) return false;
    out.verdict = CmVerdict::CM;
    out.witness = m;
    out.minpoly = p;
    out.minpoly_irreducibility = trial_irreducibility(integral_scaling(p), n);
    return true;
  };
  for (const auto& b : end.basis)
    if (attempt(b)) return out;
  for (int k = 0; k < trials; ++k)
    if (attempt(random_combinations(end.basis, rng).front())) return out;
  out.verdict = CmVerdict::Inconclusive;
  return out;
}

MetricSearch rational_kahler_search(const ComplexTorus& t, int trials, std::uint64_t seed) {
  const FieldMatrix& I = t.I;
  const int n = I.rows();
  std::vector<std::pair<int, int>> unknowns;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) unknowns.emplace_back(a, b);
  const int u = static_cast<int>(unknowns.size());
  FieldMatrix c(t.field, n * n, u);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int row = i * n + j;
      for (int k = 0; k < u; ++k) {
        auto [a, b] = unknowns[static_cast<std::size_t>(k)];
        // (I^T G I)_{ij} = sum I_ai G_ab I_bj.
        FieldElement v = I(a, i) * I(b, j);
        if (a != b) v += I(b, i) * I(a, j);
        if ((a == i && b == j) || (a == j && b == i)) v -= FieldElement(t.field, Rational(1));
        c(row, k) = v;
      }
    }
  IntMatrix ker = integer_kernel(c);
  MetricSearch out;
  auto Q = NumberField::rationals();
  for (int r = 0; r < ker.rows(); ++r) {
    FieldMatrix s(Q, n, n);
    for (int k = 0; k < u; ++k) {
      auto [a, b] = unknowns[static_cast<std::size_t>(k)];
      s(a, b) = s(b, a) = FieldElement(Q, Rational(ker(r, k)));
    }
    out.solution_basis.push_back(s);
  }
  out.solution_dim = static_cast<int>(out.solution_basis.size());
  if (out.solution_dim == 0) return out;
  auto attempt = [&](const FieldMatrix& m) {
    ++out.candidates_tried;
    if (!positive_definite(m, Q->embedding(1)).positive) return false;
    out.G = m;
    return true;
  };
  FieldMatrix sum(Q, n, n);
  for (const auto& s : out.solution_basis) {
    if (attempt(s) || attempt(-s)) return out;
    sum = sum + s;
  }
  if (attempt(sum)) return out;
  SeededRng rng(seed);
  for (int k = 0; k < trials; ++k)
    if (attempt(random_combinations(out.solution_basis, rng).front())) return out;
  return out;
}

EtaReport eta_checks(const ComplexTorus& t, const FieldMatrix& G, const FieldMatrix& omega0, const EndAlgebra& end) {
  if (!omega0.is_antisymmetric()) throw Error(ErrorCode::NotAntisymmetric, "polarization must be antisymmetric");
  if (!G.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "metric must be symmetric");
  const FieldMatrix& I = t.I;
  if (I.transpose() * omega0 * I != omega0.in_field(I.field()))
    throw Error(ErrorCode::IncompatiblePolarization, "I^T Omega0 I != Omega0");
  if (I.transpose() * G * I != G.in_field(I.field())) throw Error(ErrorCode::IncompatibleMetric, "I^T G I != G");
  FieldMatrix winv = inverse(omega0);
  FieldMatrix ginv = inverse(G);
  // G = eta^T Omega0 with Omega0 antisymmetric gives eta = -Omega0^-1 G.
  EtaReport r{-(winv * G)};
  auto rosati = [&](const FieldMatrix& f) { return winv * f.transpose() * omega0; };
  r.commutes_with_I = r.eta * I == I * r.eta;
  r.rosati_negates = rosati(r.eta) == -r.eta;
  FieldMatrix eta_inv = inverse(r.eta);
  r.conjugates_involutions = std::all_of(end.basis.begin(), end.basis.end(), [&](const FieldMatrix& f) {
    return ginv * f.transpose() * G == eta_inv * rosati(f) * r.eta;
  });
  return r;
}

namespace {

// Generator of the conj-fixed part of Q(gamma), degree `target`.
FieldElement real_part_generator(const FieldElement& gamma, int ell, int target) {
  const FieldPtr& K = gamma.field();
  if (target == 1) return FieldElement(K, Rational(1));
  std::vector<FieldElement> s;
  FieldElement p = gamma;
  for (int k = 1; k < ell; ++k, p = p * gamma) s.push_back(p + p.conj());
  for (const auto& x : s)
    if (minimal_polynomial(x).degree() == target) return x;
  SeededRng rng(0x5eed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    FieldElement x(K);
    for (const auto& y : s) x += y * Rational(rng.uniform(-4, 4));
    if (minimal_polynomial(x).degree() == target) return x;
  }
  throw Error(ErrorCode::InvalidArgument, "no primitive element found for the real subfield");
}

}  // namespace

SimplicityReport simplicity_report(const CmInput& in, const std::vector<FieldElement>& subfield_generators) {
  validate_field(in.K);
  validate_phi(in.K, in.phi);
  const int d = in.K->degree();
  for (std::size_t idx = 0; idx < subfield_generators.size(); ++idx) {
    const FieldElement& raw = subfield_generators[idx];
    if (!raw.valid() || (!raw.field()->same_as(*in.K) && !raw.is_rational()))
      throw Error(ErrorCode::SubfieldDataNotClosed, "generator " + std::to_string(idx) + " is not in the field");
    FieldElement gamma = raw.in_field(in.K);
    const int ell = minimal_polynomial(gamma).degree();
    if (ell == d) continue;                // not proper
    if (gamma.conj() == gamma) continue;   // (a) fails: L is totally real
    FieldElement delta = real_part_generator(gamma, ell, ell / 2);
    bool restriction_holds = true;
    for (std::size_t i = 0; i < in.phi.size() && restriction_holds; ++i)
      for (std::size_t j = i + 1; j < in.phi.size() && restriction_holds; ++j)
        if (same_image(delta, in.phi[i], in.phi[j]) && !same_image(gamma, in.phi[i], in.phi[j]))
          restriction_holds = false;
    if (restriction_holds) return {false, idx};
  }
  return {};
}

bool simplicity_check(const CmInput& in, const std::vector<FieldElement>& subfield_generators) {
  return simplicity_report(in, subfield_generators).simple;
}

std::vector<FieldElement> subfield_generators(const FieldPtr& K) {
  const int d = K->degree();
  auto aut = automorphisms_by_embedding(K, 1);
  auto compose = [&](int a, int b) {
    // index of aut[a] o aut[b]
    FieldElement img = apply_automorphism(aut[static_cast<std::size_t>(b)], aut[static_cast<std::size_t>(a)]);
    for (int k = 0; k < d; ++k)
      if (aut[static_cast<std::size_t>(k)] == img) return k;
    throw Error(ErrorCode::InvalidArgument, "automorphisms are not closed under composition");
  };
  std::vector<std::vector<int>> table(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(d)));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = compose(a, b);
  int identity = -1;
  for (int k = 0; k < d; ++k)
    if (aut[static_cast<std::size_t>(k)] == FieldElement::generator(K)) identity = k;
  auto closure = [&](std::set<int> h) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a : std::vector<int>(h.begin(), h.end()))
        for (int b : std::vector<int>(h.begin(), h.end()))
          grew |= h.insert(table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]).second;
    }
    return h;
  };
  std::set<std::set<int>> subgroups{{identity}};
  std::vector<std::set<int>> frontier{{identity}};
  while (!frontier.empty()) {
    std::vector<std::set<int>> next;
    for (const auto& h : frontier)
      for (int k = 0; k < d; ++k) {
        if (h.count(k)) continue;
        auto bigger = h;
        bigger.insert(k);
        bigger = closure(bigger);
        if (subgroups.insert(bigger).second) next.push_back(bigger);
      }
    frontier = std::move(next);
  }
  std::vector<FieldElement> out;
  FieldElement gen = FieldElement::generator(K);
  SeededRng rng(0x5eed);
  for (const auto& h : subgroups) {
    if (static_cast<int>(h.size()) == 1) continue;  // K itself
    const int target = d / static_cast<int>(h.size());
    auto orbit_sum = [&](const FieldElement& x) {
      FieldElement s(K);
      for (int k : h) s += apply_automorphism(x, aut[static_cast<std::size_t>(k)]);
      return s;
    };
    std::optional<FieldElement> found;
    FieldElement p = gen;
    for (int k = 1; k < d && !found; ++k, p = p * gen) {
      FieldElement s = orbit_sum(p);
      if (minimal_polynomial(s).degree() == target) found = s;
    }
    for (int attempt = 0; attempt < 200 && !found; ++attempt) {
      FieldElement x(K);
      FieldElement q = gen;
      for (int k = 1; k < d; ++k, q = q * gen) x += q * Rational(rng.uniform(-4, 4));
      FieldElement s = orbit_sum(x);
      if (minimal_polynomial(s).degree() == target) found = s;
    }
    if (!found) throw Error(ErrorCode::InvalidArgument, "no generator found for a fixed field");
    out.push_back(*found);
  }
  return out;
}

}  // namespace toruscm
