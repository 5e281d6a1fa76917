#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "torsam/constructions.hpp"
#include "torsam/experiments.hpp"
#include "torsam/fitter.hpp"
#include "torsam/invariants.hpp"
#include "torsam/parse.hpp"

using namespace torsam;

namespace {

constexpr int kExitInput = 3;

struct Common {
  int n_max = -1, i_max = -1, s_max = -1, trials = -1;
  std::uint64_t seed = 1;
  std::uint32_t field = 0;  // 0: TORSAM_FIELD or the default
  std::string out, format = "json";
};

PrimeField pick_field(const Common& c) { return c.field ? PrimeField(c.field) : field_from_environment(); }

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'", 0, 0);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw InputError("cannot write '" + c.out + "'", 0, 0);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

void emit_json(const Common& c, const Json& j) { emit(c, j.dump(2)); }

const NamedModule& select_module(const Document& doc, const std::string& name) {
  if (doc.modules.empty()) throw InputError("the input declares no modules", 1, 1);
  if (name.empty()) return doc.modules.front();
  for (auto& m : doc.modules)
    if (m.name == name) return m;
  throw InputError("no module named '" + name + "'", 0, 0);
}

Json series_json(const HilbertSeries& h) {
  return Json{{"numerator", h.numerator}, {"shift", h.shift}, {"pole_order", h.pole_order}};
}

Json ring_json(const NamedRing& r) {
  RingSummary s = ring_summary(r.ring);
  return Json{{"name", r.name},
              {"text", ring_to_text(r.name, *r.ring)},
              {"dim", s.dim},
              {"depth", s.depth},
              {"embdim", s.embdim},
              {"multiplicity", s.multiplicity},
              {"hilbert_numerator", s.hilbert_numerator}};
}

Json betti_json(const FreeComplex& F, int i_max) {
  Json rows = Json::array();
  for (int i = 0; i <= i_max; ++i) {
    Json g = Json::object();
    for (auto [d, n] : F.graded_betti(i)) g[std::to_string(d)] = n;
    rows.push_back(Json{{"i", i}, {"rank", F.betti(i)}, {"graded", g}});
  }
  return rows;
}

// ---------------------------------------------------------------- verbs

int cmd_parse(const Common& c, const std::string& path) {
  Document doc = parse_document(read_input(path), pick_field(c));
  if (c.format == "text") {
    std::string out = "field " + std::to_string(doc.field.characteristic()) + "\n";
    for (auto& r : doc.rings) out += ring_to_text(r.name, *r.ring) + "\n";
    for (auto& m : doc.modules) out += module_to_text(m.name, m.ring_name, m.module) + "\n";
    emit(c, out);
    return 0;
  }
  Json j;
  j["field"] = doc.field.characteristic();
  j["rings"] = Json::array();
  for (auto& r : doc.rings)
    j["rings"].push_back(Json{{"name", r.name}, {"text", ring_to_text(r.name, *r.ring)}, {"nvars", r.ring->ctx()->nvars()}});
  j["modules"] = Json::array();
  for (auto& m : doc.modules)
    j["modules"].push_back(Json{{"name", m.name},
                                {"ring", m.ring_name},
                                {"text", module_to_text(m.name, m.ring_name, m.module)},
                                {"rank", m.module.rank()},
                                {"relations", m.module.relations().size()}});
  emit_json(c, j);
  return 0;
}

int cmd_invariants(const Common& c, const std::string& path) {
  Document doc = parse_document(read_input(path), pick_field(c));
  int n_max = c.n_max >= 0 ? c.n_max : 8;
  Json j;
  j["rings"] = Json::array();
  for (auto& r : doc.rings) j["rings"].push_back(ring_json(r));
  j["modules"] = Json::array();
  for (auto& m : doc.modules) {
    const ModulePresentation& M = m.module;
    Json o{{"name", m.name}, {"ring", m.ring_name}};
    HilbertSeries h = hilbert_series(M);
    o["hilbert_series"] = series_json(h);
    if (h.is_zero()) {
      o["zero"] = true;
      j["modules"].push_back(o);
      continue;
    }
    DepthDim dd = depth_dim(M);
    o["depth"] = dd.depth;
    o["dim"] = dd.dim;
    o["multiplicity"] = h.multiplicity();
    HilbertSamuel hs(M);
    o["hilbert_samuel"] = polynomial_to_string(hs.polynomial());
    o["postulation_number"] = hs.postulation_number();
    o["projdim_finite"] = projdim_finite(M);
    auto pr = polyreg(M);
    o["polyreg"] = pr ? Json(*pr) : Json("unsupported-class");
    if (dd.depth >= 1) {
      SuperficialSearch sx = find_superficial({M}, 50, c.seed, n_max);
      o["superficial_element"] = sx.x.to_string();
      try {
        o["rho"] = rho(sx.x, M, n_max);
      } catch (const Inconclusive& e) {
        o["rho"] = std::string("inconclusive: ") + e.what();
      }
    }
    j["modules"].push_back(o);
  }
  emit_json(c, j);
  return 0;
}

int cmd_resolve(const Common& c, const std::string& path, const std::string& module) {
  Document doc = parse_document(read_input(path), pick_field(c));
  const NamedModule& m = select_module(doc, module);
  int i_max = c.i_max >= 0 ? c.i_max : 4;
  FreeComplex F = minimal_resolution(m.module, i_max);
  if (c.format == "csv") {
    std::string out = "i,degree,count\n";
    for (int i = 0; i <= i_max; ++i)
      for (auto [d, n] : F.graded_betti(i)) out += std::to_string(i) + "," + std::to_string(d) + "," + std::to_string(n) + "\n";
    emit(c, out);
    return 0;
  }
  emit_json(c, Json{{"module", m.name}, {"i_max", i_max}, {"terminated", F.terminated}, {"betti", betti_json(F, i_max)}});
  return 0;
}

int cmd_tor_table(const Common& c, const std::string& path, const std::string& module, const std::string& ideal,
                  std::vector<int> i_values) {
  Document doc = parse_document(read_input(path), pick_field(c));
  const NamedModule& m = select_module(doc, module);
  RingPtr R = m.module.ring();
  Family fam = residue_powers(R);
  if (!ideal.empty()) {
    fam.kind = FamilyKind::quotient_ring;
    fam.ideal.clear();
    std::stringstream ss(ideal);
    std::string g;
    while (std::getline(ss, g, ',')) fam.ideal.push_back(R->reduce(parse_poly(R->ctx(), g)));
    fam.description = "R/(" + ideal + ")^(n+1)";
  }
  if (i_values.empty()) {
    int top = c.i_max >= 0 ? c.i_max : 1;
    for (int i = 1; i <= top; ++i) i_values.push_back(i);
  }
  int n_max = c.n_max >= 0 ? c.n_max : 8;
  TorTable t = tor_table(m.module, fam, i_values, n_max);
  if (c.format == "csv") {
    std::string out = "i,n,length\n";
    for (std::size_t a = 0; a < t.i_values.size(); ++a)
      for (int n = 0; n <= n_max; ++n)
        out += std::to_string(t.i_values[a]) + "," + std::to_string(n) + "," + std::to_string(t.lengths[a][n]) + "\n";
    emit(c, out);
    return 0;
  }
  Json rows = Json::array();
  for (std::size_t a = 0; a < t.i_values.size(); ++a) rows.push_back(Json{{"i", t.i_values[a]}, {"lengths", t.lengths[a]}});
  emit_json(c, Json{{"module", m.name}, {"family", t.family}, {"n_max", n_max}, {"table", rows}});
  return 0;
}

int cmd_fit(const Common& c, const std::string& values) {
  std::vector<long long> v;
  std::stringstream ss(values);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(tok, &used));
      if (used != tok.size() && tok.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError("not an integer: '" + tok + "'", 1, 1);
    }
  }
  FittedPolynomial p = fit_values(v);
  emit_json(c, Json{{"degree", p.degree},
                    {"polynomial", polynomial_to_string(p.coeffs)},
                    {"n0", p.n0},
                    {"window", p.window},
                    {"values", v}});
  return 0;
}

std::string document_of(PrimeField f, const std::vector<std::pair<std::string, const GradedRing*>>& rings,
                        const std::vector<std::tuple<std::string, std::string, const ModulePresentation*>>& mods) {
  std::string out = "field " + std::to_string(f.characteristic()) + "\n";
  for (auto& [n, r] : rings) out += ring_to_text(n, *r) + "\n";
  for (auto& [n, rn, m] : mods) out += module_to_text(n, rn, *m) + "\n";
  return out;
}

int cmd_construct(const Common& c, const std::string& kind, const std::string& path, int p, int q,
                  const std::string& vars, const std::string& poly, const std::string& module) {
  PrimeField f = pick_field(c);
  std::string text;
  Json j;
  if (kind == "noncm") {
    if (p < 0 || q < p + 2) throw InputError("noncm needs 0 <= p and p + 2 <= q", 0, 0);
    NonCMExample ex = noncm_example(p, q, f);
    text = document_of(f, {{"S", ex.ext.S.get()}, {"R", ex.ring().get()}},
                       {{"L", "S", &ex.ext.L}, {"M", "R", &ex.module()}});
    RingSummary s = ring_summary(ex.ring());
    j = {{"p", p}, {"q", q}, {"depth", s.depth}, {"dim", s.dim}};
  } else if (kind == "trivext") {
    Document doc = parse_document(read_input(path), f);
    const NamedModule& L = select_module(doc, module);
    TrivialExtension ext = trivial_extension(L.module.ring(), L.module);
    text = document_of(f, {{"S", ext.S.get()}, {"R", ext.R.get()}}, {{"L", "S", &ext.L}, {"M", "R", &ext.S_over_R}});
    RingSummary s = ring_summary(ext.R);
    j = {{"depth", s.depth}, {"dim", s.dim}, {"y", ext.y_names}};
  } else if (kind == "hypersurface") {
    if (vars.empty() || poly.empty()) throw InputError("hypersurface needs --vars and --poly", 0, 0);
    RingPtr P = make_ring(vars, "", f);
    Hypersurface h = hypersurface(parse_poly(P->ctx(), poly));
    text = document_of(f, {{"R", h.R.get()}}, {});
    RingSummary s = ring_summary(h.R);
    j = {{"multiplicity", h.multiplicity}, {"depth", s.depth}, {"dim", s.dim}};
  } else {
    throw InputError("unknown construction '" + kind + "'", 0, 0);
  }
  if (c.format == "text") {
    emit(c, text);
  } else {
    j["document"] = text;
    emit_json(c, j);
  }
  return 0;
}

int cmd_verify(const Common& c, const std::string& scenario, const std::string& path) {
  ScenarioConfig cfg;
  cfg.scenario = scenario;
  if (!path.empty()) {
    cfg.input_text = read_input(path);
    cfg.input_name = path;
  }
  cfg.n_max = c.n_max;
  cfg.i_max = c.i_max;
  cfg.s_max = c.s_max;
  cfg.trials = c.trials;
  cfg.seed = c.seed;
  cfg.field = pick_field(c).characteristic();
  VerificationReport rep = run_scenario(cfg);
  if (c.format == "csv")
    emit(c, rep.csv());
  else
    emit_json(c, rep.to_json());
  return rep.exit_code();
}

int cmd_fuzz(const Common& c, const std::string& shape_text) {
  CorpusShape shape = parse_shape(shape_text);
  int count = c.trials >= 0 ? c.trials : 10;
  auto corpus = fuzz_corpus(c.seed, count, shape, pick_field(c));
  if (c.format == "text") {
    std::string out;
    for (auto& inst : corpus) out += "# " + inst.id + "\n" + inst.text() + "\n";
    emit(c, out);
    return 0;
  }
  Json arr = Json::array();
  for (auto& inst : corpus)
    arr.push_back(Json{{"id", inst.id}, {"ring_kind", inst.ring_kind}, {"module_kinds", inst.module_kinds}, {"document", inst.text()}});
  emit_json(c, Json{{"seed", c.seed}, {"count", count}, {"instances", arr}});
  return 0;
}

void add_common(CLI::App* sub, Common& c, const std::vector<std::string>& formats) {
  sub->add_option("--n-max", c.n_max, "largest n in m^(n+1)");
  sub->add_option("--i-max", c.i_max, "largest homological degree");
  sub->add_option("--s-max", c.s_max, "largest s for the Levin-type index");
  sub->add_option("--seed", c.seed, "seed for all randomness");
  sub->add_option("--trials", c.trials, "number of random instances or trials");
  sub->add_option("--field", c.field, "prime characteristic (overrides TORSAM_FIELD)");
  sub->add_option("--out", c.out, "write output here instead of stdout");
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember(formats));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tor growth and related invariants of graded modules over F_p"};
  app.require_subcommand(1);
  Common c;
  std::string path, module, ideal, kind, scenario, values, shape = "", vars, poly;
  std::vector<int> i_values;
  int p = 0, q = 2;

  auto* parse = app.add_subcommand("parse", "validate an input document and echo it");
  parse->add_option("input", path, "input file, - for stdin");
  add_common(parse, c, {"json", "text"});

  auto* inv = app.add_subcommand("invariants", "depth, dimension, Hilbert data, rho and polyreg");
  inv->add_option("input", path)->required();
  add_common(inv, c, {"json"});

  auto* res = app.add_subcommand("resolve", "graded Betti numbers of a module");
  res->add_option("input", path)->required();
  res->add_option("--module", module, "module name; default the first");
  add_common(res, c, {"json", "csv"});

  auto* tor = app.add_subcommand("tor-table", "lengths of Tor_i(M, R/I^(n+1))");
  tor->add_option("input", path)->required();
  tor->add_option("--module", module, "module name; default the first");
  tor->add_option("--ideal", ideal, "comma-separated generators of I; default the maximal ideal");
  tor->add_option("--i", i_values, "homological degrees; default 1..i-max");
  add_common(tor, c, {"json", "csv"});

  auto* fit = app.add_subcommand("fit", "fit a polynomial to the tail of a sequence");
  fit->add_option("values", values, "comma-separated integers for n = 0, 1, ...")->required();
  add_common(fit, c, {"json"});

  auto* con = app.add_subcommand("construct", "build a ring and module from a named recipe");
  con->add_option("kind", kind, "trivext, noncm or hypersurface")
      ->required()
      ->check(CLI::IsMember({"trivext", "noncm", "hypersurface"}));
  con->add_option("input", path, "for trivext: a document whose module is L");
  con->add_option("--module", module, "for trivext: name of L");
  con->add_option("--p", p, "for noncm");
  con->add_option("--q", q, "for noncm");
  con->add_option("--vars", vars, "for hypersurface: comma-separated variables");
  con->add_option("--poly", poly, "for hypersurface: the homogeneous form");
  add_common(con, c, {"json", "text"});

  auto* ver = app.add_subcommand("verify", "run a verification scenario");
  ver->add_option("scenario", scenario)->required()->check(CLI::IsMember(scenario_ids()));
  ver->add_option("--input", path, "optional document with the instances to use");
  add_common(ver, c, {"json", "csv"});

  auto* fz = app.add_subcommand("fuzz", "print a seeded random corpus");
  fz->add_option("--shape", shape, "e.g. hypersurface,vars=2,degree=2,modules=2");
  add_common(fz, c, {"json", "text"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*parse) return cmd_parse(c, path);
    if (*inv) return cmd_invariants(c, path);
    if (*res) return cmd_resolve(c, path, module);
    if (*tor) return cmd_tor_table(c, path, module, ideal, i_values);
    if (*fit) return cmd_fit(c, values);
    if (*con) return cmd_construct(c, kind, path, p, q, vars, poly, module);
    if (*ver) return cmd_verify(c, scenario, path);
    if (*fz) return cmd_fuzz(c, shape);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Inconclusive& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
