#include <algorithm>
#include <sstream>

#include "torsam/experiments.hpp"
#include "torsam/module_ops.hpp"
#include "torsam/parse.hpp"
#include "torsam/resolution.hpp"

namespace torsam {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }

ModulePresentation random_cokernel(const RingPtr& R, std::mt19937_64& rng) {
  const PolyRing* P = R->ctx();
  int r = pick(rng, 1, 2);
  std::vector<int> degs(r, 0);
  if (r == 2 && pick(rng, 0, 9) < 3) degs[1] = 1;
  int amax = *std::max_element(degs.begin(), degs.end());
  int amin = *std::min_element(degs.begin(), degs.end());
  int c = pick(rng, 1, 2);
  std::vector<Vector> cols;
  for (int tries = 0; static_cast<int>(cols.size()) < c && tries < 50; ++tries) {
    // entry degrees D - a_j in [1, 2] where possible
    int D = pick(rng, amax + 1, std::max(amax + 1, amin + 2));
    Vector v;
    for (int j = 0; j < r; ++j) {
      int e = D - degs[j];
      if (e < 1 || e > 2 || (r > 1 && pick(rng, 0, 2) == 0))
        v.push_back(Poly(P));
      else
        v.push_back(R->reduce(random_form(P, e, rng)));
    }
    if (!vector_is_zero(v)) cols.push_back(std::move(v));
  }
  return ModulePresentation(R, degs, std::move(cols));
}

}  // namespace

Poly random_form(const PolyRing* P, int degree, std::mt19937_64& rng) {
  auto monos = monomials_of_degree(P->nvars(), degree);
  const PrimeField& f = P->field();
  while (true) {
    std::vector<Term> terms;
    for (auto& m : monos) {
      if (rng() % 2 == 0) continue;
      int c = pick(rng, 1, 6);
      long long v = c <= 3 ? c : 3 - c;  // -3..-1, 1..3
      terms.push_back({m, f.from_int(v)});
    }
    Poly p(P, terms);
    if (!p.is_zero()) return p;
  }
}

std::string Instance::text() const {
  std::ostringstream out;
  out << "field " << ring->field().characteristic() << "\n";
  out << ring_to_text("R", *ring) << "\n";
  for (std::size_t j = 0; j < modules.size(); ++j)
    out << module_to_text(j == 0 ? "M" : (j == 1 ? "N" : "N" + std::to_string(j)), "R", modules[j]) << "\n";
  return out.str();
}

Instance fuzz_instance(std::uint64_t seed, int index, const CorpusShape& shape, PrimeField f) {
  std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                   static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(sq);
  Instance inst;
  inst.id = "fuzz:" + std::to_string(seed) + ":" + std::to_string(index);
  int n = shape.nvars > 0 ? shape.nvars : pick(rng, 2, 3);
  std::vector<std::string> names = {"x", "y", "z", "w"};
  names.resize(n);
  if (n > 4)
    for (int v = 0; v < n; ++v) names[v] = "x" + std::to_string(v + 1);
  auto P = std::make_shared<const PolyRing>(f, names);
  std::string kind = shape.ring_kind;
  if (kind == "mixed") {
    int u = pick(rng, 0, 9);
    kind = u < 2 ? "regular" : (u < 6 ? "hypersurface" : "random");
  }
  inst.ring_kind = kind;
  int forms = kind == "regular" ? 0 : (kind == "hypersurface" ? 1 : pick(rng, 1, 2));
  std::vector<Poly> rels;
  for (int k = 0; k < forms; ++k) {
    int d = shape.degree > 0 ? shape.degree : pick(rng, 2, 3);
    rels.push_back(random_form(P.get(), d, rng));
  }
  inst.ring = GradedRing::make(P, rels);
  for (int j = 0; j < shape.modules; ++j) {
    int u = pick(rng, 0, 99);
    if (u < 15) {
      int r = pick(rng, 1, 2);
      inst.modules.push_back(ModulePresentation::free(inst.ring, std::vector<int>(r, 0)));
      inst.module_kinds.push_back("free");
    } else if (u < 20) {
      inst.modules.push_back(ModulePresentation::residue_field(inst.ring));
      inst.module_kinds.push_back("residue");
    } else if (u < 27) {
      int s = pick(rng, 1, 2);
      inst.modules.push_back(minimal_presentation(quotient_by_power(random_cokernel(inst.ring, rng), s + 1)));
      inst.module_kinds.push_back("truncation");
    } else {
      inst.modules.push_back(random_cokernel(inst.ring, rng));
      inst.module_kinds.push_back("cokernel");
    }
  }
  return inst;
}

std::vector<Instance> fuzz_corpus(std::uint64_t seed, int count, const CorpusShape& shape, PrimeField f) {
  if (count < 1) throw Error("fuzz_corpus: count must be at least 1");
  std::vector<Instance> out;
  for (int j = 0; j < count; ++j) out.push_back(fuzz_instance(seed, j, shape, f));
  return out;
}

CorpusShape parse_shape(const std::string& text) {
  CorpusShape s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) {
      if (item == "regular-ring" || item == "regular")
        s.ring_kind = "regular";
      else if (item == "hypersurface" || item == "random" || item == "mixed")
        s.ring_kind = item;
      else
        throw Error("unknown corpus shape '" + item + "'");
      continue;
    }
    std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    int v = 0;
    try {
      v = std::stoi(val);
    } catch (const std::exception&) {
      throw Error("bad value in corpus shape: " + item);
    }
    if (key == "vars" && v >= 1 && v <= 8)
      s.nvars = v;
    else if (key == "degree" && v >= 2)
      s.degree = v;
    else if (key == "modules" && v >= 1)
      s.modules = v;
    else
      throw Error("bad corpus shape entry '" + item + "'");
  }
  return s;
}

// ---- reports

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::vacuous:
      return "vacuous";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

Json ScenarioConfig::to_json() const {
  Json j;
  j["scenario"] = scenario;
  j["input"] = input_text;
  j["input_name"] = input_name;
  j["n_max"] = n_max;
  j["i_max"] = i_max;
  j["s_max"] = s_max;
  j["trials"] = trials;
  j["seed"] = seed;
  j["field"] = field;
  return j;
}

std::map<std::string, int> VerificationReport::counts() const {
  std::map<std::string, int> c{{"holds", 0}, {"fails", 0}, {"vacuous", 0}, {"inconclusive", 0}};
  for (auto& r : records) ++c[verdict_name(r.verdict)];
  return c;
}

int VerificationReport::exit_code() const {
  auto c = counts();
  if (c["fails"] > 0) return 1;
  if (c["inconclusive"] > 0) return 2;
  return 0;
}

Json VerificationReport::to_json(bool with_timestamp) const {
  Json j;
  j["scenario"] = config.scenario;
  j["config"] = config.to_json();
  j["bounds"] = bounds;
  Json recs = Json::array();
  for (auto& r : records) {
    Json o;
    o["instance"] = r.instance;
    o["claim"] = r.claim;
    o["statement"] = r.statement;
    o["verdict"] = verdict_name(r.verdict);
    o["computed"] = r.computed;
    o["bounds"] = r.bounds;
    if (!r.counterexample.is_null()) o["counterexample"] = r.counterexample;
    if (!r.note.empty()) o["note"] = r.note;
    recs.push_back(std::move(o));
  }
  j["records"] = std::move(recs);
  Json summary = extra;
  for (auto& [k, v] : counts()) summary[k] = v;
  summary["records"] = records.size();
  j["summary"] = std::move(summary);
  if (with_timestamp) j["timestamp"] = timestamp;
  return j;
}

std::string VerificationReport::csv() const {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
  };
  std::ostringstream out;
  out << "instance,claim,verdict,computed\n";
  for (auto& r : records)
    out << quote(r.instance) << "," << quote(r.claim) << "," << verdict_name(r.verdict) << "," << quote(r.computed.dump())
        << "\n";
  return out.str();
}

}  // namespace torsam
