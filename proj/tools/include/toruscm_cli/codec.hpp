#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "toruscm/cm.hpp"
#include "toruscm/mirror.hpp"
#include "toruscm/valattice.hpp"

namespace toruscm::cli {

using nlohmann::json;

// Malformed documents; mapped to exit code 2 together with toruscm::Error.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational parse_rational_json(const json& j);
json to_json(const Rational& r);

FieldPtr parse_field(const json& j);  // null or absent means Q
json to_json(const NumberField& f);

// Array of power-basis coordinates, or a scalar rational.
FieldElement parse_element(const json& j, const FieldPtr& f);
json to_json(const FieldElement& x);

FieldMatrix parse_matrix(const json& j, const FieldPtr& f);
json to_json(const FieldMatrix& m);
IntMatrix parse_int_matrix(const json& j);
json to_json(const IntMatrix& m);
json to_json(const Poly& p);
json to_json(const std::optional<Integer>& index);  // "infinity" when absent, a string beyond 64 bits

struct TorusDocument {
  ComplexTorus torus;
  std::optional<KahlerData> kahler;
  std::optional<FieldMatrix> polarization;
  std::optional<CmInput> cm;
};

TorusDocument parse_torus_document(const json& j);
json torus_document(const ComplexTorus& t, const std::optional<KahlerData>& k,
                    const std::optional<FieldMatrix>& polarization = std::nullopt);

CmInput parse_cm_block(const json& j);
json to_json(const CmInput& in);

MirrorPair parse_pair_document(const json& j);
json pair_document(const MirrorPair& p);

json to_json(const GksReport& r);
json to_json(const MirrorReport& r);
json to_json(const CmCertificate& c);
json to_json(const ChiralReport& r);
json to_json(const IsogenyOutcome& o);

// Reads a file, or parses the argument itself when it starts with '{' or '['.
json load_json(const std::string& path_or_inline);

}  // namespace toruscm::cli
