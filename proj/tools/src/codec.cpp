#include "toruscm_cli/codec.hpp"

#include <fstream>
#include <sstream>

#include "toruscm/errors.hpp"

namespace toruscm::cli {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

Rational parse_rational_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("bad rational \"" + j.get<std::string>() + "\"");
    }
  }
  throw ParseError("rationals are integers or \"p/q\" strings, got " + j.dump());
}

json to_json(const Rational& r) { return to_string(r); }

FieldPtr parse_field(const json& j) {
  if (j.is_null()) return NumberField::rationals();
  const json& mp = require(j, "minpoly");
  if (!mp.is_array() || mp.size() < 2) throw ParseError("minpoly must list at least two coefficients");
  std::vector<Integer> coeffs;
  for (const auto& c : mp) {
    Rational r = parse_rational_json(c);
    if (r.get_den() != 1) throw ParseError("minpoly coefficients must be integers");
    coeffs.push_back(r.get_num());
  }
  std::optional<std::vector<Rational>> conj;
  if (j.contains("conj") && !j.at("conj").is_null()) {
    conj.emplace();
    for (const auto& c : j.at("conj")) conj->push_back(parse_rational_json(c));
  }
  return NumberField::make(coeffs, conj);
}

json to_json(const NumberField& f) {
  json mp = json::array();
  for (const auto& c : f.minpoly().coeffs()) mp.push_back(to_json(c));
  json conj = nullptr;
  if (f.has_conj() && !f.is_rationals()) {
    conj = json::array();
    for (const auto& c : f.conj_image()) conj.push_back(to_json(c));
  }
  return {{"minpoly", mp}, {"conj", conj}};
}

FieldElement parse_element(const json& j, const FieldPtr& f) {
  if (!j.is_array()) return FieldElement(f, parse_rational_json(j));
  if (static_cast<int>(j.size()) > f->degree())
    throw ParseError("element " + j.dump() + " has more coordinates than the field degree");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(parse_rational_json(x));
  c.resize(static_cast<std::size_t>(f->degree()));
  return FieldElement(f, c);
}

json to_json(const FieldElement& x) {
  if (x.is_rational()) return to_json(x.rational_value());
  json a = json::array();
  for (const auto& c : x.coords()) a.push_back(to_json(c));
  return a;
}

FieldMatrix parse_matrix(const json& j, const FieldPtr& f) {
  if (!j.is_array() || j.empty() || !j.at(0).is_array()) throw ParseError("matrices are non-empty arrays of rows");
  const int rows = static_cast<int>(j.size()), cols = static_cast<int>(j.at(0).size());
  FieldMatrix m(f, rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = j.at(static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<int>(row.size()) != cols) throw ParseError("ragged matrix");
    for (int c = 0; c < cols; ++c) m(r, c) = parse_element(row.at(static_cast<std::size_t>(c)), f);
  }
  return m;
}

json to_json(const FieldMatrix& m) {
  json a = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    a.push_back(row);
  }
  return a;
}

IntMatrix parse_int_matrix(const json& j) {
  auto m = parse_matrix(j, NumberField::rationals());
  try {
    return IntMatrix::from_field(m);
  } catch (const Error&) {
    throw ParseError("expected an integer matrix");
  }
}

json to_json(const IntMatrix& m) {
  json a = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    a.push_back(row);
  }
  return a;
}

json to_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

json to_json(const std::optional<Integer>& index) {
  if (!index) return "infinity";
  if (index->fits_slong_p()) return index->get_si();
  return index->get_str();
}

TorusDocument parse_torus_document(const json& j) {
  if (!j.is_object()) throw ParseError("torus document must be an object");
  FieldPtr f = parse_field(j.value("field", json(nullptr)));
  int emb = j.contains("embedding") ? as_int(j.at("embedding"), "embedding") : 1;
  FieldMatrix I = parse_matrix(require(j, "I"), f);
  if (j.contains("g") && as_int(j.at("g"), "g") * 2 != I.rows())
    throw Error(ErrorCode::DimensionMismatch, "I is not 2g x 2g");
  TorusDocument doc{ComplexTorus::make(I, emb), std::nullopt, std::nullopt, std::nullopt};
  if (j.contains("G")) {
    FieldMatrix G = parse_matrix(j.at("G"), f);
    FieldMatrix B = j.contains("B") ? parse_matrix(j.at("B"), f) : FieldMatrix(f, G.rows(), G.cols());
    if (G.rows() != I.rows() || G.cols() != I.cols() || B.rows() != I.rows() || B.cols() != I.cols())
      throw Error(ErrorCode::DimensionMismatch, "G and B must match I");
    doc.kahler = KahlerData{G, B};
  }
  if (j.contains("polarization")) {
    FieldMatrix w = parse_matrix(j.at("polarization"), NumberField::rationals());
    if (w.rows() != I.rows() || w.cols() != I.cols()) throw Error(ErrorCode::DimensionMismatch, "polarization must match I");
    doc.polarization = w;
  }
  if (j.contains("cm")) doc.cm = parse_cm_block(j.at("cm"));
  return doc;
}

json torus_document(const ComplexTorus& t, const std::optional<KahlerData>& k,
                    const std::optional<FieldMatrix>& polarization) {
  json j = {{"g", t.g}, {"field", to_json(*t.field)}, {"embedding", t.embedding_index}, {"I", to_json(t.I)}};
  if (k) {
    j["G"] = to_json(k->G.in_field(t.field));
    j["B"] = to_json(k->B.in_field(t.field));
  }
  if (polarization) j["polarization"] = to_json(*polarization);
  return j;
}

CmInput parse_cm_block(const json& j) {
  FieldPtr K = parse_field(require(j, "field"));
  CmInput in{K, {}, {}, std::nullopt};
  for (const auto& a : require(j, "basis")) in.basis.push_back(parse_element(a, K));
  for (const auto& p : require(j, "Phi")) in.phi.push_back(as_int(p, "Phi entries"));
  if (j.contains("beta") && !j.at("beta").is_null()) in.beta = parse_element(j.at("beta"), K);
  return in;
}

json to_json(const CmInput& in) {
  json basis = json::array();
  for (const auto& a : in.basis) basis.push_back(to_json(a));
  return {{"field", to_json(*in.K)},
          {"basis", basis},
          {"Phi", in.phi},
          {"beta", in.beta ? to_json(*in.beta) : json(nullptr)}};
}

MirrorPair parse_pair_document(const json& j) {
  auto left = parse_torus_document(require(j, "left"));
  auto right = parse_torus_document(require(j, "right"));
  if (!left.kahler || !right.kahler) throw ParseError("both sides of a pair need G and B");
  return {make_side(left.torus, *left.kahler), make_side(right.torus, *right.kahler), parse_int_matrix(require(j, "phi"))};
}

json pair_document(const MirrorPair& p) {
  return {{"left", torus_document(p.left.torus, p.left.kahler)},
          {"right", torus_document(p.right.torus, p.right.kahler)},
          {"phi", to_json(p.phi)}};
}

json to_json(const GksReport& r) {
  return {{"i_squared", r.i_squared},         {"j_squared", r.j_squared},
          {"commute", r.commute},             {"i_preserves_q", r.i_preserves_q},
          {"j_preserves_q", r.j_preserves_q}, {"ij_q_symmetric", r.ij_q_symmetric},
          {"metric_positive", r.metric_positive}, {"all", r.all()}};
}

json to_json(const MirrorReport& r) {
  return {{"unimodular", r.unimodular},
          {"q_compatible", r.q_compatible},
          {"i_matches_j", r.i_matches_j},
          {"j_matches_i", r.j_matches_i},
          {"verified", r.all()}};
}

json to_json(const CmCertificate& c) {
  return {{"verdict", std::string(verdict_name(c.verdict))},
          {"witness", c.witness ? to_json(*c.witness) : json(nullptr)},
          {"minpoly", c.minpoly ? to_json(*c.minpoly) : json(nullptr)},
          {"minpoly_irreducibility",
           c.minpoly ? json(std::string(irreducibility_name(c.minpoly_irreducibility))) : json(nullptr)},
          {"end_dim", c.end_dim},
          {"candidates_tried", c.candidates_tried}};
}

json to_json(const ChiralReport& r) {
  return {{"basis", to_json(r.basis)},
          {"rank", r.rank},
          {"index", to_json(r.index)},
          {"module_count", to_json(module_count(r))},
          {"va_rational", va_rational(r)},
          {"zpart_rank", r.zpart_rank},
          {"zbarpart_rank", r.zbarpart_rank}};
}

json to_json(const IsogenyOutcome& o) {
  return {{"hypothesis_met", o.hypothesis_met},
          {"gamma", o.gamma ? to_json(*o.gamma) : json(nullptr)},
          {"n", o.gamma ? json(o.n.get_str()) : json(nullptr)},
          {"used", o.used.empty() ? json(nullptr) : json(o.used)},
          {"diagnosis", o.diagnosis}};
}

json load_json(const std::string& path_or_inline) {
  std::string text;
  auto first = path_or_inline.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (path_or_inline[first] == '{' || path_or_inline[first] == '[')) {
    text = path_or_inline;
  } else {
    std::ifstream in(path_or_inline);
    if (!in) throw ParseError("cannot read " + path_or_inline);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace toruscm::cli
