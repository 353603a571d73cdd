#include "toruscm/exactla.hpp"

#include <algorithm>

#include "toruscm/errors.hpp"

namespace toruscm {

RrefResult rref(const FieldMatrix& a) {
  FieldMatrix r = a;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < r.cols() && row < r.rows(); ++col) {
    int p = -1;
    for (int i = row; i < r.rows(); ++i)
      if (!r(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < r.cols(); ++j) std::swap(r(p, j), r(row, j));
    FieldElement inv = r(row, col).inverse();
    for (int j = col; j < r.cols(); ++j) r(row, j) = r(row, j) * inv;
    for (int i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col).is_zero()) continue;
      FieldElement f = r(i, col);
      for (int j = col; j < r.cols(); ++j)
        if (!r(row, j).is_zero()) r(i, j) -= f * r(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {r, pivots};
}

int rank(const FieldMatrix& a) { return static_cast<int>(rref(a).pivots.size()); }

FieldMatrix kernel(const FieldMatrix& a) {
  auto [r, pivots] = rref(a);
  std::vector<int> free_cols;
  for (int j = 0, p = 0; j < a.cols(); ++j) {
    if (p < static_cast<int>(pivots.size()) && pivots[static_cast<std::size_t>(p)] == j) {
      ++p;
      continue;
    }
    free_cols.push_back(j);
  }
  FieldMatrix k(a.field(), static_cast<int>(free_cols.size()), a.cols());
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    int fc = free_cols[t];
    k(static_cast<int>(t), fc) = FieldElement(a.field(), Rational(1));
    for (std::size_t i = 0; i < pivots.size(); ++i) k(static_cast<int>(t), pivots[i]) = -r(static_cast<int>(i), fc);
  }
  return k;
}

LinearSolution solve_linear(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "solve_linear: row counts differ");
  LinearSolution out;
  out.kernel = kernel(a);
  if (b.is_zero()) return out;
  FieldMatrix aug(a.field(), a.rows(), a.cols() + b.cols());
  aug.set_block(0, 0, a);
  aug.set_block(0, a.cols(), b);
  auto [r, pivots] = rref(aug);
  for (int pc : pivots)
    if (pc >= a.cols()) throw Error(ErrorCode::Inconsistent, "linear system has no solution");
  FieldMatrix x(r.field(), a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (int j = 0; j < b.cols(); ++j) x(pivots[i], j) = r(static_cast<int>(i), a.cols() + j);
  out.particular = x;
  return out;
}

FieldMatrix inverse(const FieldMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const int n = a.rows();
  FieldMatrix aug(a.field(), n, 2 * n);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, FieldMatrix::identity(a.field(), n));
  auto [r, pivots] = rref(aug);
  if (static_cast<int>(pivots.size()) < n || pivots[static_cast<std::size_t>(n - 1)] != n - 1)
    throw Error(ErrorCode::Singular, "matrix is singular");
  return r.block(0, n, n, n);
}

FieldElement determinant(const FieldMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const int n = a.rows();
  if (n == 0) return FieldElement(a.field(), Rational(1));
  FieldMatrix m = a;
  FieldElement prev(a.field(), Rational(1));
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k).is_zero()) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m(i, k).is_zero()) {
          p = i;
          break;
        }
      if (p < 0) return FieldElement(a.field());
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      negate = !negate;
    }
    // Bareiss step: every division is exact.
    FieldElement inv_prev = prev.inverse();
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) * inv_prev;
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const int n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return negate ? Integer(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

namespace {

void row_axpy(IntMatrix& m, int dst, const Integer& q, int src) {
  if (q == 0) return;
  for (int j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Upper echelon HNF (pivot = first nonzero, entries above pivots reduced); returns rank.
int upper_hnf(IntMatrix& h, IntMatrix& u, bool track) {
  const int m = h.rows(), n = h.cols();
  int r = 0;
  for (int col = 0; col < n && r < m; ++col) {
    while (true) {
      int p = -1;
      for (int i = r; i < m; ++i)
        if (h(i, col) != 0 && (p < 0 || abs(h(i, col)) < abs(h(p, col)))) p = i;
      if (p < 0) break;
      h.swap_rows(r, p);
      if (track) u.swap_rows(r, p);
      bool clean = true;
      for (int i = r + 1; i < m; ++i) {
        if (h(i, col) == 0) continue;
        Integer q = floor_div(h(i, col), h(r, col));
        row_axpy(h, i, q, r);
        if (track) row_axpy(u, i, q, r);
        if (h(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, col) == 0) continue;
    if (h(r, col) < 0) {
      for (int j = 0; j < n; ++j) h(r, j) = -h(r, j);
      if (track)
        for (int j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
    }
    for (int i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, col), h(r, col));
      row_axpy(h, i, q, r);
      if (track) row_axpy(u, i, q, r);
    }
    ++r;
  }
  return r;
}

IntMatrix reverse_cols(const IntMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, m.cols() - 1 - j);
  return out;
}

}  // namespace

namespace {

HnfResult hnf_impl(const IntMatrix& m, bool track) {
  IntMatrix h = reverse_cols(m);
  IntMatrix u = track ? IntMatrix::identity(m.rows()) : IntMatrix(0, 0);
  int r = upper_hnf(h, u, track);
  // Undo the column reversal and reverse the nonzero rows so pivot columns increase.
  IntMatrix hr = reverse_cols(h);
  IntMatrix out_h(r, m.cols());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m.cols(); ++j) out_h(i, j) = hr(r - 1 - i, j);
  if (!track) return {out_h, IntMatrix(0, 0)};
  IntMatrix out_u(m.rows(), m.rows());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m.rows(); ++j) out_u(i, j) = u(r - 1 - i, j);
  for (int i = r; i < m.rows(); ++i)
    for (int j = 0; j < m.rows(); ++j) out_u(i, j) = u(i, j);
  return {out_h, out_u};
}

}  // namespace

HnfResult hnf_with_transform(const IntMatrix& m) { return hnf_impl(m, true); }

IntMatrix hnf(const IntMatrix& m) { return hnf_impl(m, false).h; }

SnfResult snf(const IntMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);
  const int t_max = std::min(rows, cols);
  for (int t = 0; t < t_max; ++t) {
    bool any = true;
    while (true) {
      int pi = -1, pj = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pi < 0 || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) {
        any = false;
        break;
      }
      a.swap_rows(t, pi);
      u.swap_rows(t, pi);
      a.swap_cols(t, pj);
      v.swap_cols(t, pj);
      bool done = true;
      for (int i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        row_axpy(a, i, q, t);
        row_axpy(u, i, q, t);
        if (a(i, t) != 0) done = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        for (int i = 0; i < rows; ++i) a(i, j) -= q * a(i, t);
        for (int i = 0; i < cols; ++i) v(i, j) -= q * v(i, t);
        if (a(t, j) != 0) done = false;
      }
      if (!done) continue;
      int bad = -1;
      for (int i = t + 1; i < rows && bad < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (int j = 0; j < cols; ++j) a(t, j) += a(bad, j);
      for (int j = 0; j < rows; ++j) u(t, j) += u(bad, j);
    }
    if (!any) break;
    if (a(t, t) < 0) {
      for (int j = 0; j < cols; ++j) a(t, j) = -a(t, j);
      for (int j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
  }
  SnfResult out;
  for (int t = 0; t < t_max; ++t) out.diag.push_back(a(t, t));
  out.u = u;
  out.v = v;
  return out;
}

int lattice_rank(const IntMatrix& basis_rows) { return hnf(basis_rows).rows(); }

std::optional<Integer> lattice_index(const IntMatrix& basis_rows, int n) {
  if (basis_rows.cols() != n) throw Error(ErrorCode::DimensionMismatch, "lattice dimension");
  if (basis_rows.rows() < n) return std::nullopt;
  auto s = snf(basis_rows);
  Integer idx = 1;
  for (int t = 0; t < n; ++t) {
    if (s.diag[static_cast<std::size_t>(t)] == 0) return std::nullopt;
    idx *= s.diag[static_cast<std::size_t>(t)];
  }
  return idx;
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  return a.cols() == b.cols() && hnf(a) == hnf(b);
}

IntMatrix integer_kernel(const IntMatrix& m) {
  // Left kernel of m^T: rows of the transform matching zero rows of the HNF.
  IntMatrix t = m.transpose();
  auto res = hnf_with_transform(t);
  int r = res.h.rows();
  int n = m.cols();
  IntMatrix k(n - r, n);
  for (int i = r; i < n; ++i)
    for (int j = 0; j < n; ++j) k(i - r, j) = res.u(i, j);
  if (k.rows() == 0) return k;
  return hnf(k);
}

namespace {

// Rational rows scaled to primitive integer rows (same kernel).
IntMatrix clear_denominators(const std::vector<std::vector<Rational>>& rows, int n) {
  IntMatrix m(static_cast<int>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Integer d = common_denominator(rows[i]);
    for (int j = 0; j < n; ++j) {
      Rational v = rows[i][static_cast<std::size_t>(j)] * Rational(d);
      m(static_cast<int>(i), j) = v.get_num();
    }
  }
  return m;
}

std::vector<std::vector<Rational>> coordinate_rows(const FieldMatrix& c, int first_coord) {
  std::vector<std::vector<Rational>> rows;
  const int d = c.rows() ? c.field()->degree() : 1;
  for (int i = 0; i < c.rows(); ++i)
    for (int t = first_coord; t < d; ++t) {
      std::vector<Rational> row(static_cast<std::size_t>(c.cols()));
      bool nonzero = false;
      for (int j = 0; j < c.cols(); ++j) {
        const auto& coords = c(i, j).coords();
        row[static_cast<std::size_t>(j)] = static_cast<int>(coords.size()) > t ? coords[static_cast<std::size_t>(t)] : Rational(0);
        if (row[static_cast<std::size_t>(j)] != 0) nonzero = true;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  return rows;
}

IntMatrix kernel_of_rows(const std::vector<std::vector<Rational>>& rows, int n) {
  if (rows.empty()) return IntMatrix::identity(n);
  return integer_kernel(clear_denominators(rows, n));
}

}  // namespace

IntMatrix integer_kernel(const FieldMatrix& c) { return kernel_of_rows(coordinate_rows(c, 0), c.cols()); }

IntMatrix saturate_integer_solutions(const FieldMatrix& conditions) {
  const int n = conditions.cols();
  const int k = conditions.rows();
  // Irrational coordinates must vanish.
  IntMatrix kb = kernel_of_rows(coordinate_rows(conditions, 1), n);
  const int s = kb.rows();
  if (s == 0 || k == 0) return kb;
  // Rational parts restricted to the kernel: Q = C0 * K^T must map y into Z^k.
  std::vector<std::vector<Rational>> q(static_cast<std::size_t>(k), std::vector<Rational>(static_cast<std::size_t>(s), Rational(0)));
  for (int i = 0; i < k; ++i)
    for (int t = 0; t < s; ++t) {
      Rational acc = 0;
      for (int j = 0; j < n; ++j) acc += conditions(i, j).coords()[0] * Rational(kb(t, j));
      q[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] = acc;
    }
  Integer den = 1;
  for (const auto& row : q) den = lcm(den, common_denominator(row));
  if (den == 1) return kb;
  // Kernel of [D Q | -D I] projected to the y coordinates.
  IntMatrix sys(k, s + k);
  for (int i = 0; i < k; ++i) {
    for (int t = 0; t < s; ++t) sys(i, t) = Rational(q[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] * Rational(den)).get_num();
    sys(i, s + i) = -den;
  }
  IntMatrix ker = integer_kernel(sys);
  IntMatrix y = ker.block(0, 0, ker.rows(), s);
  IntMatrix ybasis = hnf(y);
  if (ybasis.rows() == 0) return IntMatrix(0, n);
  return hnf(ybasis * kb);
}

PdCertificate positive_definite(const FieldMatrix& m, const Embedding& e) {
  if (!m.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "positive_definite needs a symmetric matrix");
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i; j < m.cols(); ++j)
      if (!is_real_under(m(i, j), e))
        throw Error(ErrorCode::NotRealUnderEmbedding, "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
  PdCertificate cert;
  FieldMatrix a = m;
  const int n = m.rows();
  for (int k = 0; k < n; ++k) {
    FieldElement pivot = a(k, k);
    cert.pivots.push_back(pivot);
    if (exact_sign(pivot, e) <= 0) return cert;
    FieldElement inv = pivot.inverse();
    for (int i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      FieldElement f = a(i, k) * inv;
      for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  cert.positive = true;
  return cert;
}

Poly minimal_polynomial(const FieldMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "minimal polynomial of non-square matrix");
  const int n = m.rows();
  auto flatten = [&](const FieldMatrix& p) {
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v.push_back(p(i, j).rational_value());
    return v;
  };
  // Echelon basis of I, M, M^2, ... with recorded combinations.
  std::vector<std::vector<Rational>> rows, combos;
  std::vector<std::size_t> pivots;
  FieldMatrix power = FieldMatrix::identity(NumberField::rationals(), n);
  for (int k = 0; k <= n; ++k) {
    std::vector<Rational> v = flatten(power);
    std::vector<Rational> combo(static_cast<std::size_t>(k) + 1, Rational(0));
    combo[static_cast<std::size_t>(k)] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rational a = v[pivots[r]];
      if (a == 0) continue;
      Rational f = a / rows[r][pivots[r]];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
      for (std::size_t j = 0; j < combos[r].size(); ++j) combo[j] -= f * combos[r][j];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (it == v.end()) return Poly(combo).monic();
    pivots.push_back(static_cast<std::size_t>(it - v.begin()));
    rows.push_back(std::move(v));
    combos.push_back(std::move(combo));
    power = power * m;
  }
  throw Error(ErrorCode::InvalidArgument, "minimal polynomial degree exceeded dimension");
}

}  // namespace toruscm
