#include "toruscm_cli/run.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>

#include "toruscm/errors.hpp"
#include "toruscm/section4.hpp"
#include "toruscm_cli/codec.hpp"

namespace toruscm::cli {

namespace {

struct Options {
  std::string torus, cm, a, rho, pair, out_file, expect, kind, h, h2, mode_a, mode_b;
  int trials = 20;
  std::uint64_t seed = 1;
  int budget = 3;
  int embedding = 0;
};

struct Outcome {
  json report;
  std::string verdict;  // compared with --expect when given
  bool failed = false;  // verification failure independent of --expect
};

TorusDocument load_torus(const std::string& path) { return parse_torus_document(load_json(path)); }

KahlerData require_kahler(const TorusDocument& d) {
  if (!d.kahler) throw ParseError("torus document has no metric G");
  return *d.kahler;
}

FieldMatrix parse_vector(const std::string& text, const FieldPtr& f) {
  json j = load_json(text);
  if (!j.is_array()) throw ParseError("vectors are JSON arrays");
  FieldMatrix v(f, static_cast<int>(j.size()), 1);
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<int>(i), 0) = parse_element(j.at(i), f);
  return v;
}

Outcome torus_validate(const Options& o) {
  auto d = load_torus(o.torus);
  if (d.kahler) validate_kahler(d.torus, *d.kahler);
  json r = {{"valid", true}, {"g", d.torus.g}, {"has_metric", d.kahler.has_value()},
            {"field_degree", d.torus.field->degree()}};
  return {r, "valid"};
}

Outcome gks_induce(const Options& o) {
  auto d = load_torus(o.torus);
  auto k = require_kahler(d);
  auto p = induce_gks(d.torus, k);
  auto rep = verify_gks(p);
  auto es = eigenspace_graphs(p, k);
  json r = {{"calI", to_json(p.calI)},
            {"calJ", to_json(p.calJ)},
            {"metric", to_json(p.metric())},
            {"checks", to_json(rep)},
            {"p_plus", to_json(es.p_plus)},
            {"p_minus", to_json(es.p_minus)},
            {"graph_plus", to_json(*es.graph_plus)},
            {"graph_minus", to_json(*es.graph_minus)},
            {"charge_isometry", charge_isometry_check(k)}};
  return {r, rep.all() ? "valid" : "invalid", !rep.all()};
}

Outcome gks_rationality(const Options& o) {
  auto d = load_torus(o.torus);
  auto k = require_kahler(d);
  bool ij = ij_rational(induce_gks(d.torus, k));
  json r = {{"ij_rational", ij}, {"G_rational", k.G.is_rational()}, {"B_rational", k.B.is_rational()}};
  return {r, ij ? "rational" : "not-rational"};
}

Outcome cm_build(const Options& o) {
  json j = load_json(o.cm);
  CmInput in = parse_cm_block(j.contains("cm") ? j.at("cm") : j);
  if (!in.beta) in.beta = find_beta(in.K, in.basis, in.phi, o.budget);
  auto t = cm_torus(in);
  json r = torus_document(t.torus, KahlerData{t.G, FieldMatrix(NumberField::rationals(), t.G.rows(), t.G.cols())}, t.E);
  r["cm"] = to_json(in);
  r["E"] = to_json(t.E);
  r["theta"] = to_json(t.theta);
  r["beta_action"] = to_json(t.beta_action);
  r["field_irreducibility"] = std::string(irreducibility_name(t.field_irreducibility));
  return {r, "built"};
}

Outcome cm_certificate_cmd(const Options& o) {
  auto d = load_torus(o.torus);
  auto c = cm_certificate(d.torus, o.trials, o.seed);
  return {to_json(c), std::string(verdict_name(c.verdict))};
}

Outcome cm_metric_search(const Options& o) {
  auto d = load_torus(o.torus);
  auto m = rational_kahler_search(d.torus, o.trials, o.seed);
  json basis = json::array();
  for (const auto& s : m.solution_basis) basis.push_back(to_json(s));
  json r = {{"found", m.G.has_value()},
            {"G", m.G ? to_json(*m.G) : json(nullptr)},
            {"solution_dim", m.solution_dim},
            {"solution_basis", basis},
            {"candidates_tried", m.candidates_tried}};
  return {r, m.G ? "found" : "none"};
}

Outcome cm_eta(const Options& o) {
  auto d = load_torus(o.torus);
  auto k = require_kahler(d);
  if (!d.polarization) throw ParseError("torus document has no polarization");
  auto end = endomorphism_algebra(d.torus);
  auto r = eta_checks(d.torus, k.G, *d.polarization, end);
  json j = {{"eta", to_json(r.eta)},
            {"commutes_with_I", r.commutes_with_I},
            {"rosati_negates", r.rosati_negates},
            {"conjugates_involutions", r.conjugates_involutions},
            {"all", r.all()}};
  return {j, r.all() ? "pass" : "fail", !r.all()};
}

Outcome mirror_construct(const Options& o) {
  json a = load_json(o.a);
  FieldPtr f = NumberField::rationals();
  int emb = 1;
  json mat = a;
  if (a.is_object()) {
    f = parse_field(a.value("field", json(nullptr)));
    emb = a.value("embedding", 1);
    mat = a.at("A");
  }
  if (o.embedding > 0) emb = o.embedding;
  auto p = construct_mirror(parse_matrix(mat, f), parse_int_matrix(load_json(o.rho)), emb);
  json r = pair_document(p);
  r["verify"] = to_json(verify_mirror(p));
  return {r, "verified"};
}

Outcome mirror_verify(const Options& o) {
  auto p = parse_pair_document(load_json(o.pair));
  auto rep = verify_mirror(p);
  return {to_json(rep), rep.all() ? "verified" : "failed", !rep.all()};
}

Outcome mirror_isogeny(const Options& o) {
  auto p = parse_pair_document(load_json(o.pair));
  auto iso = isogeny_from_mirror(p);
  json r = to_json(iso);
  if (iso.gamma) r["certificate_verified"] = verify_isogeny_certificate(p.right.torus, p.left.torus, FieldMatrix::from_ints(*iso.gamma));
  return {r, iso.gamma ? "found" : (iso.hypothesis_met ? "none" : "hypothesis-not-met")};
}

Outcome va_chiral(const Options& o) {
  auto d = load_torus(o.torus);
  auto r = chiral_sublattice(build_pairing_lattice(d.torus, require_kahler(d)));
  return {to_json(r), r.rational ? "rational" : "not-rational"};
}

Outcome va_commutator(const Options& o) {
  auto d = load_torus(o.torus);
  auto L = build_pairing_lattice(d.torus, require_kahler(d));
  ModeKind kind;
  if (o.kind == "boson") kind = ModeKind::Boson;
  else if (o.kind == "fermion") kind = ModeKind::Fermion;
  else throw ParseError("--kind must be boson or fermion");
  const FieldPtr& f = L.p_plus.field();
  auto parse_mode = [](const std::string& s) {
    try {
      return parse_rational(s);
    } catch (const std::exception&) {
      throw ParseError("bad mode \"" + s + "\"");
    }
  };
  auto v = supercommutator(L, kind, parse_vector(o.h, f), parse_mode(o.mode_a), parse_vector(o.h2, f), parse_mode(o.mode_b));
  return {{{"value", to_json(v)}}, "computed"};
}

Outcome demo_section4(const Options& o) {
  auto r = section4_demo(o.trials, o.seed);
  const std::vector<std::vector<std::pair<Rational, Rational>>> expected = {
      {{Rational(5), Rational(2, 5)}, {Rational(2), Rational(-1, 5)}},
      {{Rational(2), Rational(-1, 5)}, {Rational(3), Rational(-2, 5)}}};
  json lower = json::array();
  for (const auto& row : r.g_lower) {
    json jr = json::array();
    for (const auto& [a, b] : row) jr.push_back({{"rational", to_json(a)}, {"sqrt5", to_json(b)}});
    lower.push_back(jr);
  }
  bool g_ok = r.g_lower == expected;
  bool va = va_rational(r.chiral_left) || va_rational(r.chiral_right);
  bool ij = r.ij_rational_left || r.ij_rational_right;
  bool pass = g_ok && !ij && !va && r.cm_left.verdict == CmVerdict::CM && r.cm_right.verdict == CmVerdict::CM &&
              r.mirror.all();
  json j = {{"field", to_json(*r.data.cm.torus.field)},
            {"embedding", r.data.cm.torus.embedding_index},
            {"cm", to_json(r.data.input)},
            {"Z", to_json(r.data.Z)},
            {"A", to_json(r.data.A)},
            {"A_normal", to_json(r.data.A_normal)},
            {"sqrt5", to_json(r.data.sqrt5)},
            {"G", to_json(r.pair.left.kahler.G)},
            {"G_lower_sqrt5", lower},
            {"G_lower_matches", g_ok},
            {"ij_rational", ij},
            {"ij_rational_left", r.ij_rational_left},
            {"ij_rational_right", r.ij_rational_right},
            {"cm_left", std::string(verdict_name(r.cm_left.verdict))},
            {"cm_right", std::string(verdict_name(r.cm_right.verdict))},
            {"cm_left_certificate", to_json(r.cm_left)},
            {"cm_right_certificate", to_json(r.cm_right)},
            {"va_rational", va},
            {"chiral_left", to_json(r.chiral_left)},
            {"chiral_right", to_json(r.chiral_right)},
            {"verify_mirror", r.mirror.all()},
            {"mirror_report", to_json(r.mirror)},
            {"isogeny", to_json(r.isogeny)},
            {"rho_isogeny", r.rho_isogeny},
            {"simple", r.simple},
            {"pair", pair_document(r.pair)},
            {"pass", pass}};
  return {j, pass ? "pass" : "fail", !pass};
}

json error_json(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for complex tori, CM abelian varieties, mirror pairs and lattice vertex algebras",
               "toruscm"};
  app.require_subcommand(1);
  Options o;
  std::function<Outcome(const Options&)> action;

  auto seeded = [&](CLI::App* c) {
    c->add_option("--trials", o.trials, "Random candidates to try")->check(CLI::NonNegativeNumber);
    c->add_option("--seed", o.seed, "Seed for the random candidates");
  };
  auto expect = [&](CLI::App* c, std::vector<std::string> values) {
    c->add_option("--expect", o.expect, "Exit 1 unless the verdict matches")->check(CLI::IsMember(values));
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc,
                  std::function<Outcome(const Options&)> f) {
    auto* c = parent->add_subcommand(name, desc);
    c->callback([&action, f] { action = f; });
    return c;
  };

  auto* torus = app.add_subcommand("torus", "Complex tori")->require_subcommand(1);
  auto* tv = leaf(torus, "validate", "Check I (and G, B when present)", torus_validate);
  tv->add_option("--torus", o.torus, "Torus document")->required();
  expect(tv, {"valid"});

  auto* gks = app.add_subcommand("gks", "Induced generalized Kahler structures")->require_subcommand(1);
  auto* gi = leaf(gks, "induce", "Build and check (calI, calJ)", gks_induce);
  gi->add_option("--torus", o.torus, "Torus document with G and B")->required();
  expect(gi, {"valid", "invalid"});
  auto* gr = leaf(gks, "rationality", "Is calI calJ defined over Q", gks_rationality);
  gr->add_option("--torus", o.torus, "Torus document with G and B")->required();
  expect(gr, {"rational", "not-rational"});

  auto* cm = app.add_subcommand("cm", "Complex multiplication")->require_subcommand(1);
  auto* cb = leaf(cm, "build", "Torus of CM type from (K, basis, Phi, beta)", cm_build);
  cb->add_option("--cm", o.cm, "CM document")->required();
  cb->add_option("--budget", o.budget, "Coordinate bound when searching for beta")->check(CLI::NonNegativeNumber);
  auto* cc = leaf(cm, "certificate", "Certificate of CM type", cm_certificate_cmd);
  cc->add_option("--torus", o.torus, "Torus document")->required();
  seeded(cc);
  expect(cc, {"CM", "NotCM", "Inconclusive"});
  auto* cs = leaf(cm, "metric-search", "Search for a rational Kahler metric", cm_metric_search);
  cs->add_option("--torus", o.torus, "Torus document")->required();
  seeded(cs);
  expect(cs, {"found", "none"});
  auto* ce = leaf(cm, "eta", "Check the eta involution against the polarization", cm_eta);
  ce->add_option("--torus", o.torus, "Torus document with G and polarization")->required();
  expect(ce, {"pass", "fail"});

  auto* mirror = app.add_subcommand("mirror", "Mirror pairs")->require_subcommand(1);
  auto* mc = leaf(mirror, "construct", "Mirror of the torus with period matrix (1, A i)", mirror_construct);
  mc->add_option("--A", o.a, "Matrix A, or {field, embedding, A}")->required();
  mc->add_option("--rho", o.rho, "Symmetric negative definite integer matrix")->required();
  mc->add_option("--embedding", o.embedding, "Real embedding of A's field");
  auto* mv = leaf(mirror, "verify", "Check a mirror pair", mirror_verify);
  mv->add_option("--pair", o.pair, "Pair document")->required();
  expect(mv, {"verified", "failed"});
  auto* mi = leaf(mirror, "isogeny", "Isogeny extracted from a mirror pair", mirror_isogeny);
  mi->add_option("--pair", o.pair, "Pair document")->required();
  expect(mi, {"found", "none", "hypothesis-not-met"});

  auto* va = app.add_subcommand("va", "Lattice vertex algebras")->require_subcommand(1);
  auto* vc = leaf(va, "chiral", "Chiral sublattice and rationality", va_chiral);
  vc->add_option("--torus", o.torus, "Torus document with G and B")->required();
  expect(vc, {"rational", "not-rational"});
  auto* vm = leaf(va, "commutator", "Supercommutator structure constant", va_commutator);
  vm->add_option("--torus", o.torus, "Torus document with G and B")->required();
  vm->add_option("--kind", o.kind, "boson or fermion")->required();
  vm->add_option("--h1", o.h, "First vector (JSON array)")->required();
  vm->add_option("--mode-a", o.mode_a, "Mode of the first vector")->required();
  vm->add_option("--h2", o.h2, "Second vector (JSON array)")->required();
  vm->add_option("--mode-b", o.mode_b, "Mode of the second vector")->required();

  auto* demo = app.add_subcommand("demo", "Worked examples")->require_subcommand(1);
  auto* d4 = leaf(demo, "section4", "The cyclotomic mirror pair over Q(zeta5)", demo_section4);
  d4->add_option("--out", o.out_file, "Also write the report to this file");
  seeded(d4);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Outcome r = action(o);
    out << r.report.dump(2) << "\n";
    if (!o.out_file.empty()) {
      std::ofstream f(o.out_file);
      if (!f) throw ParseError("cannot write " + o.out_file);
      f << r.report.dump(2) << "\n";
    }
    if (!o.expect.empty()) {
      if (o.expect != r.verdict) {
        err << "expected " << o.expect << ", got " << r.verdict << "\n";
        return 1;
      }
      return 0;
    }
    return r.failed ? 1 : 0;
  } catch (const Error& e) {
    out << error_json(std::string(error_name(e.code())), e.what()).dump(2) << "\n";
    err << e.what() << "\n";
  } catch (const ParseError& e) {
    out << error_json("MalformedInput", e.what()).dump(2) << "\n";
    err << e.what() << "\n";
  } catch (const json::exception& e) {
    out << error_json("MalformedInput", e.what()).dump(2) << "\n";
    err << e.what() << "\n";
  }
  return 2;
}

}  // namespace toruscm::cli
