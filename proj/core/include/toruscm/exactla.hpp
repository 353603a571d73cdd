#pragma once

#include <optional>
#include <vector>

#include "toruscm/matrix.hpp"

namespace toruscm {

struct RrefResult {
  FieldMatrix reduced;
  std::vector<int> pivots;  // pivot column per nonzero row
};

RrefResult rref(const FieldMatrix& a);
int rank(const FieldMatrix& a);

// Rows form a basis of {x : A x = 0} (one row per free column, reduced form).
FieldMatrix kernel(const FieldMatrix& a);

struct LinearSolution {
  std::optional<FieldMatrix> particular;  // X with A X = B; absent for homogeneous systems
  FieldMatrix kernel;                     // rows span {x : A x = 0}
};

// Solves A X = B. A zero right-hand side yields only the kernel. Throws Inconsistent.
LinearSolution solve_linear(const FieldMatrix& a, const FieldMatrix& b);

FieldMatrix inverse(const FieldMatrix& a);  // throws Singular
FieldElement determinant(const FieldMatrix& a);
Integer determinant(const IntMatrix& a);

struct HnfResult {
  IntMatrix h;  // nonzero rows only
  IntMatrix u;  // unimodular, u * m = [h; 0]
};

// Row-style Hermite normal form: each row's last nonzero entry (its pivot) is positive,
// pivot columns increase down the rows, and entries below a pivot lie in [0, pivot).
IntMatrix hnf(const IntMatrix& m);
HnfResult hnf_with_transform(const IntMatrix& m);

struct SnfResult {
  std::vector<Integer> diag;  // d1 | d2 | ...; length min(rows, cols), trailing zeros allowed
  IntMatrix u, v;             // u * m * v is diagonal
};
SnfResult snf(const IntMatrix& m);

// |Z^n / L| for the row lattice L, or nullopt when rank L < n.
std::optional<Integer> lattice_index(const IntMatrix& basis_rows, int n);
int lattice_rank(const IntMatrix& basis_rows);
bool same_lattice(const IntMatrix& a, const IntMatrix& b);

// Basis rows (HNF) of {x in Z^n : C x = 0}; every power-basis coordinate must vanish.
IntMatrix integer_kernel(const FieldMatrix& c);
IntMatrix integer_kernel(const IntMatrix& m);

// Basis rows (HNF) of {x in Z^n : C x in Z^k}.
IntMatrix saturate_integer_solutions(const FieldMatrix& conditions);

struct PdCertificate {
  bool positive = false;
  std::vector<FieldElement> pivots;  // LDL^T pivots computed before the decision
};

PdCertificate positive_definite(const FieldMatrix& m, const Embedding& e);

// Monic minimal polynomial of a square rational matrix.
Poly minimal_polynomial(const FieldMatrix& rational_square);

}  // namespace toruscm
