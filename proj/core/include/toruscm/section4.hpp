#pragma once

#include "toruscm/cm.hpp"
#include "toruscm/mirror.hpp"
#include "toruscm/valattice.hpp"

namespace toruscm {

// The Q(zeta5) CM torus with Phi = {1, 2} and basis {1, x + x^-1, x - x^-1, x^2 - x^-2}.
struct CyclotomicData {
  CmInput input;
  CmTorus cm;
  FieldMatrix Z, A;  // period matrix (Z, A i)
  FieldMatrix A_normal;  // Z^-1 A
  FieldElement sqrt5;    // positive square root of 5 in the torus field
};

CmInput zeta5_cm_input();
CyclotomicData cyclotomic_data();

// The mirror pair with rho = diag(-2, -1).
MirrorPair cyclotomic_mirror(const CyclotomicData& d);

// a + b sqrt5 with rational a, b, when x lies in Q(sqrt5).
std::optional<std::pair<Rational, Rational>> sqrt5_coordinates(const FieldElement& x, const FieldElement& sqrt5);

struct Section4Report {
  CyclotomicData data;
  MirrorPair pair;
  MirrorReport mirror;
  // Lower 2 x 2 block of G as a + b sqrt5.
  std::vector<std::vector<std::pair<Rational, Rational>>> g_lower;
  bool ij_rational_left = true, ij_rational_right = true;
  CmCertificate cm_left, cm_right;
  ChiralReport chiral_left, chiral_right;
  IsogenyOutcome isogeny;
  bool rho_isogeny = false;  // gamma = diag(rho^-1, Id) intertwines I and I'
  bool simple = false;
};

Section4Report section4_demo(int trials, std::uint64_t seed);

}  // namespace toruscm
