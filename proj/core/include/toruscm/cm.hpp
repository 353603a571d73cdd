#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toruscm/torus.hpp"

namespace toruscm {

struct CmInput {
  FieldPtr K;                          // CM field with conj
  std::vector<FieldElement> basis;     // 2g elements, Z-basis of an order
  std::vector<int> phi;                // g embedding indices (CM-type)
  std::optional<FieldElement> beta;    // found by find_beta when absent
};

struct CmTorus {
  ComplexTorus torus;      // over F = Q(theta), theta = Im sigma_phi0(beta) > 0
  FieldMatrix E;           // rational, E_kl = Tr(beta a_k conj a_l)
  FieldMatrix G;           // rational, G_kl = Tr(-beta^2 a_k conj a_l)
  FieldMatrix beta_action; // rational, column l = coordinates of beta a_l in the basis
  FieldElement beta;
  FieldElement theta;      // element of the torus field
  // Period matrix sigma_{phi_j}(a_k) = period_re + i period_im, g x 2g over the torus field.
  FieldMatrix period_re, period_im;
  Irreducibility field_irreducibility = Irreducibility::Assumed;
};

// Checks the field, basis, CM-type and (when present) beta; throws the matching error.
void validate_cm_input(const CmInput& in);

CmTorus cm_torus(const CmInput& in);

FieldElement find_beta(const FieldPtr& K, const std::vector<FieldElement>& basis, const std::vector<int>& phi,
                       int budget);

struct EndAlgebra {
  std::vector<FieldMatrix> basis;  // rational 2g x 2g matrices commuting with I
  int dim = 0;
};

EndAlgebra endomorphism_algebra(const ComplexTorus& t);

enum class CmVerdict { CM, NotCM, Inconclusive };
std::string_view verdict_name(CmVerdict v);

struct CmCertificate {
  CmVerdict verdict = CmVerdict::Inconclusive;
  std::optional<FieldMatrix> witness;
  std::optional<Poly> minpoly;
  Irreducibility minpoly_irreducibility = Irreducibility::Assumed;
  int end_dim = 0;
  int candidates_tried = 0;
};

CmCertificate cm_certificate(const ComplexTorus& t, int trials, std::uint64_t seed);

struct MetricSearch {
  std::optional<FieldMatrix> G;
  std::vector<FieldMatrix> solution_basis;  // rational symmetric solutions of I^T G I = G
  int solution_dim = 0;
  int candidates_tried = 0;
};

MetricSearch rational_kahler_search(const ComplexTorus& t, int trials, std::uint64_t seed);

struct EtaReport {
  FieldMatrix eta;                // G = eta^T Omega0
  bool commutes_with_I = false;   // (i)
  bool rosati_negates = false;    // (ii) eta' = -eta
  bool conjugates_involutions = false;  // (iv) f^G = eta^-1 f' eta for every basis element
  bool all() const { return commutes_with_I && rosati_negates && conjugates_involutions; }
};

EtaReport eta_checks(const ComplexTorus& t, const FieldMatrix& G, const FieldMatrix& omega0, const EndAlgebra& end);

struct SimplicityReport {
  bool simple = true;
  std::optional<std::size_t> witness;  // index into the supplied generators
};

SimplicityReport simplicity_report(const CmInput& in, const std::vector<FieldElement>& subfield_generators);
bool simplicity_check(const CmInput& in, const std::vector<FieldElement>& subfield_generators);

// Generators of the fixed fields of all automorphism subgroups (Galois fields only).
std::vector<FieldElement> subfield_generators(const FieldPtr& K);

// Automorphisms as images of the generator, indexed so that sigma_ref o tau_j = sigma_j.
std::vector<FieldElement> automorphisms_by_embedding(const FieldPtr& K, int reference_embedding);

}  // namespace toruscm
