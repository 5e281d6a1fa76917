#include <algorithm>
#include <chrono>
#include <ctime>
#include <functional>
#include <set>

#include "torsam/constructions.hpp"
#include "torsam/experiments.hpp"
#include "torsam/fitter.hpp"
#include "torsam/invariants.hpp"
#include "torsam/module_ops.hpp"
#include "torsam/parse.hpp"
#include "torsam/submodule.hpp"

namespace torsam {

namespace {

// ---------------------------------------------------------------- helpers

struct Ctx {
  const ScenarioConfig& cfg;
  PrimeField f;
  VerificationReport& rep;
  int n_max = 0, i_max = -1, s_max = 0, trials = 0;
};

Instance builtin(const std::string& id, const RingPtr& R, std::vector<ModulePresentation> mods) {
  Instance inst;
  inst.id = "builtin:" + id;
  inst.ring_kind = "given";
  inst.ring = R;
  inst.modules = std::move(mods);
  inst.module_kinds.assign(inst.modules.size(), "given");
  return inst;
}

// one instance per module of the input document
std::vector<Instance> input_instances(const Ctx& c) {
  Document doc = parse_document(c.cfg.input_text, c.f);
  std::vector<Instance> out;
  for (auto& m : doc.modules) {
    Instance inst;
    inst.id = "input:" + m.name;
    inst.ring_kind = "given";
    inst.ring = m.module.ring();
    inst.modules = {m.module};
    inst.module_kinds = {"given"};
    out.push_back(std::move(inst));
  }
  if (out.empty()) throw InputError("the input declares no modules", 1, 1);
  return out;
}

// ordered pairs of input modules over a common ring
std::vector<Instance> input_pairs(const Ctx& c) {
  Document doc = parse_document(c.cfg.input_text, c.f);
  std::vector<Instance> out;
  for (auto& a : doc.modules)
    for (auto& b : doc.modules) {
      if (a.ring_name != b.ring_name) continue;
      Instance inst;
      inst.id = "input:" + a.name + "," + b.name;
      inst.ring_kind = "given";
      inst.ring = a.module.ring();
      inst.modules = {a.module, b.module};
      inst.module_kinds = {"given", "given"};
      out.push_back(std::move(inst));
    }
  if (out.empty()) throw InputError("the input declares no modules", 1, 1);
  return out;
}

CheckRecord record(const Instance& inst, const std::string& claim, const std::string& statement) {
  CheckRecord r;
  r.instance = inst.id;
  r.claim = claim;
  r.statement = statement;
  return r;
}

void mark_fail(CheckRecord& r, const Instance& inst, Json where = Json::object()) {
  r.verdict = Verdict::fails;
  where["document"] = inst.text();
  r.counterexample = std::move(where);
  r.note = "suspected artifact bug: the statement is a theorem";
}

template <class Fn>
void for_instances(const std::vector<Instance>& insts, VerificationReport& rep, Fn fn) {
  std::vector<std::vector<CheckRecord>> out(insts.size());
#pragma omp parallel for schedule(dynamic)
  for (int j = 0; j < static_cast<int>(insts.size()); ++j) {
    try {
      fn(insts[j], out[j]);
    } catch (const std::exception& e) {
      CheckRecord r = record(insts[j], "evaluation", "");
      r.verdict = Verdict::inconclusive;
      r.note = e.what();
      out[j].push_back(std::move(r));
    }
  }
  for (auto& v : out)
    for (auto& r : v) rep.records.push_back(std::move(r));
}

bool is_free(const ModulePresentation& M) { return minimal_resolution(M, 1).betti(1) == 0; }

// betti_i > 0, i.e. projdim M >= i
bool projdim_at_least(const ModulePresentation& M, int i) {
  if (i <= 0) return true;
  FreeComplex F = minimal_resolution(M, i);
  return F.betti(i) > 0;
}

bool module_is_zero(const ModulePresentation& M) { return hilbert_series(M).is_zero(); }

std::vector<long long> hs_table(const ModulePresentation& M, int i, int n_max) {
  return tor_table(M, residue_powers(M.ring()), {i}, n_max).lengths[0];
}

Json fit_json(const FittedPolynomial& p) {
  return Json{{"degree", p.degree}, {"polynomial", polynomial_to_string(p.coeffs)}, {"n0", p.n0}, {"window", p.window}};
}

bool single_degree(const ModulePresentation& M) {
  ModulePresentation m = minimal_presentation(M);
  if (m.rank() == 0) return false;
  for (int d : m.generator_degrees())
    if (d != m.generator_degrees().front()) return false;
  return true;
}

int resolve_i(const Ctx& c, int depth_R, int relative) { return c.cfg.i_max >= 0 ? c.cfg.i_max : depth_R + relative; }

// nonzerodivisor test through the colon of the relation module
bool is_nonzerodivisor(const Poly& x, const ModulePresentation& M) {
  Submodule U = relation_submodule(M);
  return equal(colon(U, x), U);
}

// ---------------------------------------------------------------- growth

enum class GrowthMode { cm, general };

void growth_record(const Instance& inst, const ModulePresentation& M, int i, int n_max, GrowthMode mode,
                   std::vector<CheckRecord>& out) {
  RingSummary s = ring_summary(inst.ring);
  bool cm = mode == GrowthMode::cm;
  CheckRecord r = cm ? record(inst, "deg P^" + std::to_string(i) + " = dim R - 1", "Cohen-Macaulay R: deg P^i = dim R - 1")
                     : record(inst, "dim R - 1 >= deg P^" + std::to_string(i) + " >= depth R - 1 and Tor_i(M, R/m^(n+1)) != 0",
                              "depth R >= 1, projdim M >= i: Tor_i nonzero, dim R - 1 >= deg P^i >= depth R - 1");
  r.bounds = {{"n_max", n_max}, {"i", i}};
  r.computed = {{"dim", s.dim}, {"depth", s.depth}};
  bool ring_ok = cm ? (s.depth == s.dim && s.dim >= 1) : s.depth >= 1;
  bool pd_ok = !module_is_zero(M) && projdim_at_least(M, i);
  r.computed["projdim_at_least_i"] = pd_ok;
  if (!ring_ok || !pd_ok) {
    r.verdict = Verdict::vacuous;
    out.push_back(std::move(r));
    return;
  }
  auto vals = hs_table(M, i, n_max);
  r.computed["values"] = vals;
  FittedPolynomial p;
  try {
    p = fit_values(vals);
  } catch (const Inconclusive& e) {
    r.verdict = Verdict::inconclusive;
    r.note = e.what();
    out.push_back(std::move(r));
    return;
  }
  r.computed["fit"] = fit_json(p);
  bool ok;
  if (cm) {
    ok = p.degree == s.dim - 1;
  } else {
    DegreeCheck dc = degree_check(p, s.dim, s.depth, true);
    bool nonzero = std::all_of(vals.begin(), vals.end(), [](long long v) { return v != 0; });
    r.computed["nonvanishing"] = nonzero;
    ok = dc.holds() && nonzero;
  }
  if (!ok) mark_fail(r, inst, {{"i", i}, {"n_max", n_max}});
  out.push_back(std::move(r));
}

std::vector<std::pair<Instance, std::vector<int>>> cm_suite(PrimeField f) {
  std::vector<std::pair<Instance, std::vector<int>>> out;
  auto R1 = make_ring("x,y", "", f);
  out.push_back({builtin("k[x,y];k", R1, {ModulePresentation::residue_field(R1)}), {1}});
  auto R2 = make_ring("x,y", "x^2", f);
  out.push_back({builtin("k[x,y]/(x^2);R/(x)", R2, {make_module(R2, {0}, {{"x"}})}), {1}});
  auto R3 = make_ring("x,y,z", "x*y", f);
  out.push_back({builtin("k[x,y,z]/(xy);R/(x)", R3, {make_module(R3, {0}, {{"x"}})}), {1, 2}});
  return out;
}

void sc_cmgrowth(Ctx& c) {
  std::vector<std::pair<Instance, std::vector<int>>> suite;
  if (!c.cfg.input_text.empty()) {
    for (auto& inst : input_instances(c)) {
      std::vector<int> is;
      for (int i = 1; i <= std::max(1, c.cfg.i_max); ++i) is.push_back(i);
      suite.push_back({inst, is});
    }
  } else {
    suite = cm_suite(c.f);
  }
  std::vector<Instance> insts;
  for (auto& s : suite) insts.push_back(s.first);
  for_instances(insts, c.rep, [&](const Instance& inst, std::vector<CheckRecord>& out) {
    for (auto& s : suite)
      if (s.first.id == inst.id)
        for (int i : s.second) growth_record(inst, inst.modules[0], i, c.n_max, GrowthMode::cm, out);
  });
}

void sc_igrowth(Ctx& c) {
  std::vector<Instance> insts;
  if (!c.cfg.input_text.empty()) {
    insts = input_instances(c);
  } else {
    for (auto& s : cm_suite(c.f)) insts.push_back(s.first);
    auto ex = noncm_example(0, 2, c.f);
    insts.push_back(builtin("noncm(0,2);S", ex.ring(), {ex.module()}));
    for (auto& inst : fuzz_corpus(c.cfg.seed, std::max(1, c.trials), {}, c.f)) insts.push_back(inst);
    if (c.trials == 0) insts.pop_back();
  }
  int i_top = std::max(1, c.i_max);
  for_instances(insts, c.rep, [&](const Instance& inst, std::vector<CheckRecord>& out) {
    for (int i = 1; i <= i_top; ++i) growth_record(inst, inst.modules[0], i, c.n_max, GrowthMode::general, out);
  });
}

// ---------------------------------------------------------------- constructions

void sc_noncm(Ctx& c) {
  std::vector<std::pair<int, int>> pq = {{0, 2}, {1, 3}, {0, 3}};
  std::vector<Instance> insts;
  std::vector<NonCMExample> exs;
  for (auto [p, q] : pq) {
    exs.push_back(noncm_example(p, q, c.f));
    Instance inst = builtin("noncm(p=" + std::to_string(p) + ",q=" + std::to_string(q) + ")", exs.back().ring(),
                            {exs.back().module()});
    insts.push_back(inst);
  }
  for_instances(insts, c.rep, [&](const Instance& inst, std::vector<CheckRecord>& out) {
    std::size_t k = &inst - insts.data();
    int p = pq[k].first, q = pq[k].second;
    RingSummary s = ring_summary(inst.ring);
    CheckRecord r1 = record(inst, "depth R = p + 1 and dim R = q", "depth R = p+1, dim R = q");
    r1.computed = {{"p", p}, {"q", q}, {"depth", s.depth}, {"dim", s.dim}};
    if (!(s.depth == p + 1 && s.dim == q)) mark_fail(r1, inst);
    out.push_back(r1);

    CheckRecord r2 = record(inst, "M = S is maximal Cohen-Macaulay", "M = S is a maximal Cohen-Macaulay R-module");
    DepthDim dm = depth_dim(inst.modules[0]);
    r2.computed = {{"depth_M", dm.depth}, {"dim_M", dm.dim}, {"dim_R", s.dim}};
    if (!(dm.depth == s.dim && dm.dim == s.dim)) mark_fail(r2, inst);
    out.push_back(r2);

    CheckRecord r3 = record(inst, "deg P^1 = p", "deg P^1_{R,M} = p");
    r3.bounds = {{"n_max", c.n_max}};
    auto vals = hs_table(inst.modules[0], 1, c.n_max);
    r3.computed = {{"p", p}, {"values", vals}};
    try {
      FittedPolynomial fp = fit_values(vals);
      r3.computed["fit"] = fit_json(fp);
      if (fp.degree != p) mark_fail(r3, inst, {{"i", 1}});
    } catch (const Inconclusive& e) {
      r3.verdict = Verdict::inconclusive;
      r3.note = e.what();
    }
    out.push_back(r3);
  });
}

struct TrivextCase {
  std::string id;
  RingPtr S;
  ModulePresentation L;
};

void sc_trivext(Ctx& c) {
  std::vector<TrivextCase> cases;
  auto S1 = make_ring("x1,x2", "", c.f);
  cases.push_back({"k[x1,x2];L=S/(x2)", S1, make_module(S1, {0}, {{"x2"}})});
  auto S2 = make_ring("x1,x2", "", c.f);
  cases.push_back({"k[x1,x2];L=k", S2, ModulePresentation::residue_field(S2)});
  auto S3 = make_ring("x1,x2", "x1*x2", c.f);
  cases.push_back({"k[x1,x2]/(x1x2);L=S/(x1)", S3, make_module(S3, {0}, {{"x1"}})});
  std::vector<Instance> insts;
  std::vector<TrivialExtension> exts;
  for (auto& tc : cases) {
    exts.push_back(trivial_extension(tc.S, tc.L));
    insts.push_back(builtin(tc.id, exts.back().R, {exts.back().S_over_R}));
  }
  for_instances(insts, c.rep, [&](const Instance& inst, std::vector<CheckRecord>& out) {
    std::size_t k = &inst - insts.data();
    const TrivialExtension& ext = exts[k];
    auto rows = tor1_identity_check(ext, c.n_max);
    CheckRecord r = record(inst, "length Tor_1^R(S, R/m^(n+1)) = rank_k(n^n L / n^(n+1) L)",
                           "length Tor_1^R(S, R/m^{n+1}) = rank_k(n^n L/n^{n+1} L)");
    r.bounds = {{"n_max", c.n_max}};
    std::vector<long long> lhs, rhs;
    Json bad = Json::array();
    for (auto& row : rows) {
      lhs.push_back(row.tor_length);
      rhs.push_back(row.graded_rank);
      if (row.tor_length != row.graded_rank) bad.push_back(row.n);
    }
    r.computed = {{"tor_lengths", lhs}, {"graded_ranks", rhs}, {"S", ring_to_text("S", *ext.S)},
                  {"L", module_to_text("L", "S", ext.L)}};
    if (!bad.empty()) mark_fail(r, inst, {{"n", bad}, {"i", 1}});
    out.push_back(r);

    CheckRecord r2 = record(inst, "deg P^1_R(S) = dim_S L - 1", "deg P^1_{R,S} = dim_S L - 1");
    r2.bounds = {{"n_max", c.n_max}};
    int dimL = hilbert_series(ext.L).dimension();
    r2.computed = {{"dim_L", dimL}};
    try {
      FittedPolynomial fp = fit_values(lhs);
      r2.computed["fit"] = fit_json(fp);
      if (fp.degree != dimL - 1) mark_fail(r2, inst, {{"i", 1}});
    } catch (const Inconclusive& e) {
      r2.verdict = Verdict::inconclusive;
      r2.note = e.what();
    }
    out.push_back(r2);
  });
}

void sc_recursion(Ctx& c) {
  auto R = make_ring("x,y,z", "", c.f);
  ModulePresentation M = make_module(R, {0}, {{"x"}});
  Poly y = R->var(1);
  Instance inst = builtin("k[x,y,z];R/(x);y", R, {M});
  std::vector<CheckRecord> out;
  ModulePresentation Rf = ModulePresentation::free(R, {0});
  ModulePresentation Om = syzygy_module(M, 1);

  CheckRecord h = record(inst, "y is a superficial non-zero divisor on R, M and the first syzygy of M",
                         "x superficial non-zero divisor on R, M, Omega^1 M");
  h.bounds = {{"n_max", c.n_max}};
  bool hyp = true;
  Json hj = Json::object();
  for (auto& [name, X] : std::vector<std::pair<std::string, ModulePresentation>>{{"R", Rf}, {"M", M}, {"syzygy", Om}}) {
    bool sup = is_superficial(y, X, c.n_max).superficial;
    bool nzd = is_nonzerodivisor(y, X);
    hj[name] = {{"superficial", sup}, {"nonzerodivisor", nzd}};
    hyp = hyp && sup && nzd;
  }
  h.computed = hj;
  h.verdict = hyp ? Verdict::holds : Verdict::vacuous;
  out.push_back(h);

  HyperplaneSection sec = hyperplane_section(R, y);
  ModulePresentation N = restrict_module(sec, M);
  auto TR = hs_table(M, 1, c.n_max);
  auto TS = hs_table(N, 1, c.n_max);

  CheckRecord r = record(inst, "P^1_{R,M}(n) = P^1_{R,M}(n-1) + P^1_{S,N}(n) on the stable window",
                         "P^1_{R,M}(n) = P^1_{R,M}(n-1) + P^1_{S,N}(n), n >> 0");
  r.bounds = {{"n_max", c.n_max}};
  r.computed = {{"P_R", TR}, {"P_S", TS}, {"S", ring_to_text("S", *sec.S)}, {"N", module_to_text("N", "S", N)}};
  CheckRecord d = record(inst, "deg P^1_{R,M} = deg P^1_{S,N} + 1", "deg P^1_{R,M} = deg P^1_{S,N} + 1");
  d.bounds = r.bounds;
  if (!hyp) {
    r.verdict = d.verdict = Verdict::vacuous;
  } else {
    try {
      FittedPolynomial fR = fit_values(TR), fS = fit_values(TS);
      int w = std::max({fR.n0 + 1, fS.n0, 1});
      Json bad = Json::array();
      bool statement_form = true;
      for (int n = w; n <= c.n_max; ++n) {
        if (TR[n] != TR[n - 1] + TS[n]) bad.push_back(n);
        if (TR[n] != TR[n - 1] + TS[n - 1]) statement_form = false;
      }
      r.computed["window"] = {w, c.n_max};
      r.computed["shifted_form_holds"] = statement_form;
      r.note = "the variant with P^1_{S,N}(n-1) is reported in shifted_form_holds";
      if (!bad.empty()) mark_fail(r, inst, {{"n", bad}, {"i", 1}});
      d.computed = {{"fit_R", fit_json(fR)}, {"fit_S", fit_json(fS)}};
      if (fR.degree != fS.degree + 1) mark_fail(d, inst, {{"i", 1}});
    } catch (const Inconclusive& e) {
      r.verdict = d.verdict = Verdict::inconclusive;
      r.note = d.note = e.what();
    }
  }
  out.push_back(r);
  out.push_back(d);
  for (auto& x : out) c.rep.records.push_back(std::move(x));
}

// ---------------------------------------------------------------- fuzz suites

std::vector<Instance> corpus_or_input(const Ctx& c, int modules) {
  if (!c.cfg.input_text.empty()) return modules == 1 ? input_instances(c) : input_pairs(c);
  CorpusShape shape;
  shape.modules = modules;
  return fuzz_corpus(c.cfg.seed, c.trials, shape, c.f);
}

void trigger_summary(Ctx& c, const std::string& claim) {
  int total = 0, triggered = 0;
  for (auto& r : c.rep.records) {
    if (r.claim != claim) continue;
    ++total;
    if (r.verdict != Verdict::vacuous) ++triggered;
  }
  c.rep.extra["trigger_rate"] = total ? static_cast<double>(triggered) / total : 0.0;
  c.rep.extra["triggered"] = triggered;
}

const char* kMinorClaim = "Tor_1(M, R/m^(n+1)) = 0 implies m^n Omega^1 M = 0 and (M free or depth R = 0)";

void sc_minor_lemma(Ctx& c) {
  auto insts = corpus_or_input(c, 1);
  for_instances(insts, c.rep, [&](const Instance& inst, std::vector<CheckRecord>& out) {
    const ModulePresentation& M = inst.modules[0];
    CheckRecord r = record(inst, kMinorClaim, "Tor_1(M,R/m^{n+1}) = 0 => m^n Omega^1(M) = 0; M free or depth R = 0");
    r.bounds = {{"n_max", c.n_max}};
    auto vals = hs_table(M, 1, c.n_max);
    r.computed = {{"values", vals}};
    Json trig = Json::array();
    for (int n = 0; n <= c.n_max; ++n)
      if (vals[n] == 0) trig.push_back(n);
    r.computed["triggered_n"] = trig;
    if (trig.empty()) {
      r.verdict = Verdict::vacuous;
      out.push_back(r);
      return;
    }
    bool free = is_free(M);
    int dR = ring_summary(inst.ring).depth;
    ModulePresentation Om = syzygy_module(M, 1);
    Json bad = Json::array();
    for (auto& n : trig) {
      bool killed = module_is_zero(Om) || module_is_zero(power_module(Om, n.get<int>()));
      if (!killed) bad.push_back(n);
    }
    r.computed["free"] = free;
    r.computed["depth_R"] = dR;
    if (!bad.empty() || !(free || dR == 0)) mark_fail(r, inst, {{"n", trig}, {"i", 1}});
    out.push_back(r);
  });
  trigger_summary(c, kMinorClaim);
}

// 0 -> L -> M' -> N' -> 0 with L of finite length and L != 0
struct FiniteKernelSequence {
  ModulePresentation middle, quotient;
  std::string how;
};

std::optional<FiniteKernelSequence> finite_kernel_sequence(const ModulePresentation& M) {
  const RingPtr& R = M.ring();
  if (M.relations().empty()) return std::nullopt;
  Submodule U = relation_submodule(M);
  Submodule sat = saturate(U);
  if (!equal(sat, U)) {
    // the torsion part of M
    return FiniteKernelSequence{M, ModulePresentation(R, M.generator_degrees(), sat.generators()), "saturation"};
  }
  int s = 0;
  for (std::size_t k = 0; k < M.relations().size(); ++k)
    for (int j = 0; j < M.rank(); ++j)
      if (!M.relations()[k][j].is_zero()) s = std::max(s, M.relations()[k][j].degree() + 1);
  Submodule cut = intersect(U, power_submodule(ModulePresentation::free(R, M.generator_degrees()), s));
  return FiniteKernelSequence{ModulePresentation(R, M.generator_degrees(), cut.generators()), M,
                              "intersection with m^" + std::to_string(s) + "F"};
}

void sc_hs_properties(Ctx& c) {
  auto insts = corpus_or_input(c, 2);
  for_instances(insts, c.rep, [&](const Instance& inst, std::vector<CheckRecord>& out) {
    const ModulePresentation& M = inst.modules[0];
    const ModulePresentation& N = inst.modules[1];
    RingSummary s = ring_summary(inst.ring);
    Json bnd = {{"n_max", c.n_max}};
    auto TM = hs_table(M, 1, c.n_max);
    auto TN = hs_table(N, 1, c.n_max);
    auto TS = hs_table(direct_sum(M, N), 1, c.n_max);
    auto fit = [](const std::vector<long long>& v) -> std::optional<FittedPolynomial> {
      try {
        return fit_values(v);
      } catch (const Inconclusive&) {
        return std::nullopt;
      }
    };
    auto fM = fit(TM), fN = fit(TN), fS = fit(TS);

    CheckRecord r1 = record(inst, "(1) P^1 is additive on direct sums", "P^1_{M+N} = P^1_M + P^1_N");
    r1.bounds = bnd;
    r1.computed = {{"M", TM}, {"N", TN}, {"M+N", TS}};
    Json bad = Json::array();
    for (int n = 0; n <= c.n_max; ++n)
      if (TS[n] != TM[n] + TN[n]) bad.push_back(n);
    if (!bad.empty()) {
      mark_fail(r1, inst, {{"n", bad}, {"i", 1}});
    } else if (fM && fN && fS) {
      r1.computed["degrees"] = {fM->degree, fN->degree, fS->degree};
      if (fS->degree != std::max(fM->degree, fN->degree)) mark_fail(r1, inst, {{"i", 1}});
    }
    out.push_back(r1);

    CheckRecord r2 = record(inst, "(2) depth R >= 1 and M not free imply deg P^1 >= 0", "depth R >= 1, M not free => deg P^1 >= 0");
    r2.bounds = bnd;
    bool free = is_free(M);
    r2.computed = {{"depth_R", s.depth}, {"free", free}};
    if (s.depth < 1 || free) {
      r2.verdict = Verdict::vacuous;
    } else if (!fM) {
      r2.verdict = Verdict::inconclusive;
      r2.note = "no stable window";
    } else {
      r2.computed["degree"] = fM->degree;
      if (fM->degree < 0) mark_fail(r2, inst, {{"i", 1}});
    }
    out.push_back(r2);

    CheckRecord r3 = record(inst, "(3) finite-length kernel: deg P^1(middle) >= deg P^1(quotient)",
                            "0 -> L -> M -> N -> 0, length L finite => deg P^1_M >= deg P^1_N");
    r3.bounds = bnd;
    auto seq = finite_kernel_sequence(M);
    if (!seq) {
      r3.verdict = Verdict::vacuous;
    } else {
      auto A = hs_table(seq->middle, 1, c.n_max);
      auto B = hs_table(seq->quotient, 1, c.n_max);
      auto fA = fit(A), fB = fit(B);
      r3.computed = {{"sequence", seq->how}, {"middle", A}, {"quotient", B}};
      if (!fA || !fB) {
        r3.verdict = Verdict::inconclusive;
        r3.note = "no stable window";
      } else {
        r3.computed["degrees"] = {fA->degree, fB->degree};
        if (fA->degree < fB->degree) mark_fail(r3, inst, {{"i", 1}, {"sequence", seq->how}});
      }
    }
    out.push_back(r3);

    CheckRecord r4 = record(inst, "(4) finite length M has deg P^1 = dim R - 1", "length M finite => deg P^1_M = dim R - 1");
    r4.bounds = bnd;
    bool fl = hilbert_series(M).length().has_value();
    r4.computed = {{"finite_length", fl}, {"dim_R", s.dim}};
    if (!fl) {
      r4.verdict = Verdict::vacuous;
    } else if (!fM) {
      r4.verdict = Verdict::inconclusive;
      r4.note = "no stable window";
    } else {
      r4.computed["degree"] = fM->degree;
      if (fM->degree != s.dim - 1) mark_fail(r4, inst, {{"i", 1}});
    }
    out.push_back(r4);
  });
}

const char* kTruncClaim = "Tor_i(M,N) = 0 = Tor_i(M, N/m^(n+1)N) implies m^n(Omega^i M (x) N) = 0 and (depth N = 0 or projdim M <= i-1)";
const char* kTruncPowerClaim = "Tor_i(M, N/m^(n+1)N) = 0 = Tor_i(M, m^(n+1)N) implies m^(n+1)N = 0 or projdim M <= i-1";
const char* kPowerClaim = "Tor_i(M, m^(n+1)N) = 0 = Tor_(i+1)(M, m^(n+1)N) implies m^(n+1)N = 0 or projdim M <= i-1";

void sc_truncation_vanishing(Ctx& c) {
  auto insts = corpus_or_input(c, 2);
  for_instances(insts, c.rep, [&](const Instance& inst, std::vector<CheckRecord>& out) {
    const ModulePresentation& M = inst.modules[0];
    const ModulePresentation& N = inst.modules[1];
    Json bnd = {{"n_max", c.n_max}, {"i_max", c.i_max}};
    CheckRecord a = record(inst, kTruncClaim, "Tor_i(M,N) = 0 = Tor_i(M,N/m^{n+1}N) => m^n(Omega^i M (x) N) = 0; depth N = 0 or projdim M <= i-1");
    CheckRecord b = record(inst, kTruncPowerClaim, "Tor_i(M,N/m^{n+1}N) = 0 = Tor_i(M,m^{n+1}N) => m^{n+1}N = 0 or projdim M <= i-1");
    a.bounds = b.bounds = bnd;
    int depthN = depth(N);
    FreeComplex F = minimal_resolution(M, c.i_max);
    Json trig_a = Json::array(), trig_b = Json::array(), bad_a = Json::array(), bad_b = Json::array();
    for (int i = 1; i <= c.i_max; ++i) {
      bool pd_small = F.betti(i) == 0;
      bool tor_mn = tor_vanishes(M, N, i);
      std::optional<ModulePresentation> T;
      for (int n = 0; n <= c.n_max; ++n) {
        ModulePresentation Q = quotient_by_power(N, n + 1);
        bool tor_q = tor_length(M, Q, i) == 0;
        if (!tor_q) continue;
        if (tor_mn) {
          trig_a.push_back({i, n});
          if (!T) T = tensor(syzygy_module(M, i), N);
          bool killed = module_is_zero(*T) || module_is_zero(power_module(*T, n));
          if (!killed || !(depthN == 0 || pd_small)) bad_a.push_back({i, n});
        }
        ModulePresentation P = power_module(N, n + 1);
        bool p_zero = module_is_zero(P);
        if (p_zero || tor_vanishes(M, P, i)) {
          trig_b.push_back({i, n});
          if (!(p_zero || pd_small)) bad_b.push_back({i, n});
        }
      }
    }
    a.computed = {{"triggered", trig_a}, {"depth_N", depthN}};
    b.computed = {{"triggered", trig_b}};
    if (trig_a.empty()) a.verdict = Verdict::vacuous;
    if (trig_b.empty()) b.verdict = Verdict::vacuous;
    if (!bad_a.empty()) mark_fail(a, inst, {{"i,n", bad_a}});
    if (!bad_b.empty()) mark_fail(b, inst, {{"i,n", bad_b}});
    out.push_back(a);
    out.push_back(b);
  });
  trigger_summary(c, kTruncClaim);
  int t2 = 0, total = 0;
  for (auto& r : c.rep.records)
    if (r.claim == kTruncPowerClaim) {
      ++total;
      if (r.verdict != Verdict::vacuous) ++t2;
    }
  c.rep.extra["trigger_rate_second"] = total ? static_cast<double>(t2) / total : 0.0;
}

const char* kPowerWeakClaim = "Tor_i(M, m^(n+1)N) = 0 = Tor_(i+1)(M, m^(n+1)N) implies m^(n+1)N = 0 or projdim M <= i";

void sc_power_vanishing(Ctx& c) {
  auto insts = corpus_or_input(c, 2);
  for_instances(insts, c.rep, [&](const Instance& inst, std::vector<CheckRecord>& out) {
    const ModulePresentation& M = inst.modules[0];
    const ModulePresentation& N = inst.modules[1];
    CheckRecord r = record(inst, kPowerClaim, "Tor_i(M,m^{n+1}N) = 0 = Tor_{i+1}(M,m^{n+1}N) => m^{n+1}N = 0 or projdim M <= i-1");
    CheckRecord w = record(inst, kPowerWeakClaim, "same hypotheses => m^{n+1}N = 0 or projdim M <= i");
    r.bounds = w.bounds = {{"n_max", c.n_max}, {"i_max", c.i_max}};
    FreeComplex F = minimal_resolution(M, c.i_max + 1);
    auto pd_at_most = [&](int j) { return j >= 0 && F.betti(j + 1) == 0; };
    Json trig = Json::array(), bad = Json::array(), bad_weak = Json::array();
    bool sharp = true;  // every failure sits at projdim M = i exactly
    for (int n = 0; n <= c.n_max; ++n) {
      ModulePresentation P = power_module(N, n + 1);
      bool p_zero = module_is_zero(P);
      std::vector<char> van(c.i_max + 2, 0);
      for (int i = 0; i <= c.i_max + 1; ++i) van[i] = p_zero || tor_vanishes(M, P, i);
      for (int i = 0; i <= c.i_max; ++i) {
        if (!(van[i] && van[i + 1])) continue;
        trig.push_back({i, n});
        if (!(p_zero || pd_at_most(i - 1))) {
          bad.push_back({i, n});
          if (!pd_at_most(i)) sharp = false;
        }
        if (!(p_zero || pd_at_most(i))) bad_weak.push_back({i, n});
      }
    }
    r.computed = w.computed = {{"triggered", trig}};
    if (trig.empty()) r.verdict = w.verdict = Verdict::vacuous;
    if (!bad.empty()) {
      mark_fail(r, inst, {{"i,n", bad}});
      if (sharp) {
        r.computed["projdim_M_equals_i"] = true;
        r.note = "projdim M = i at every failing (i, n): Tor_i(M, m) = Tor_(i+1)(M, k) = 0 there, so the bound i-1 "
                 "cannot hold; see the companion record with bound i";
      }
    }
    if (!bad_weak.empty()) mark_fail(w, inst, {{"i,n", bad_weak}});
    out.push_back(r);
    out.push_back(w);
  });
  trigger_summary(c, kPowerClaim);
}

const char* kTestClaim = "m^(n+1)N != 0, projdim N/m^(n+1)N finite, projdim M infinite imply Tor_i(M,N) != 0 for i > depth R";

void sc_testmodule(Ctx& c) {
  auto insts = corpus_or_input(c, 2);
  for_instances(insts, c.rep, [&](const Instance& inst, std::vector<CheckRecord>& out) {
    const ModulePresentation& M = inst.modules[0];
    const ModulePresentation& N = inst.modules[1];
    int dR = ring_summary(inst.ring).depth;
    int i_top = resolve_i(c, dR, 2);
    CheckRecord r = record(inst, kTestClaim, "m^{n+1}N != 0, projdim(N/m^{n+1}N) < inf, projdim M = inf => Tor_i(M,N) != 0, i >= depth R + 1");
    r.bounds = {{"n_max", c.n_max}, {"i_max", i_top}};
    bool m_inf = !projdim_finite(M);
    Json hyp_n = Json::array();
    if (m_inf) {
      for (int n = 0; n <= c.n_max; ++n) {
        if (module_is_zero(power_module(N, n + 1))) break;
        if (projdim_finite(quotient_by_power(N, n + 1))) hyp_n.push_back(n);
      }
    }
    r.computed = {{"projdim_M_infinite", m_inf}, {"n_with_hypothesis", hyp_n}, {"depth_R", dR}};
    if (hyp_n.empty()) {
      r.verdict = Verdict::vacuous;
    } else {
      Json bad = Json::array();
      for (int i = dR + 1; i <= i_top; ++i)
        if (tor_vanishes(M, N, i)) bad.push_back(i);
      if (!bad.empty()) mark_fail(r, inst, {{"i", bad}, {"n", hyp_n}});
    }
    out.push_back(r);
  });
  trigger_summary(c, kTestClaim);
}

// ---------------------------------------------------------------- invariant chains

std::vector<Instance> supported_suite(const Ctx& c) {
  if (!c.cfg.input_text.empty()) return input_instances(c);
  std::vector<Instance> out;
  PrimeField f = c.f;
  auto P2 = make_ring("x,y", "", f);
  out.push_back(builtin("k[x,y];R", P2, {ModulePresentation::free(P2, {0})}));
  auto P2b = make_ring("x,y", "", f);
  out.push_back(builtin("k[x,y];k", P2b, {ModulePresentation::residue_field(P2b)}));
  auto P2c = make_ring("x,y", "", f);
  out.push_back(builtin("k[x,y];m", P2c, {make_module(P2c, {1, 1}, {{"y"}, {"-x"}})}));
  auto H = make_ring("x,y", "x^2", f);
  out.push_back(builtin("k[x,y]/(x^2);R", H, {ModulePresentation::free(H, {0})}));
  auto Hb = make_ring("x,y", "x^2", f);
  out.push_back(builtin("k[x,y]/(x^2);R/(x)", Hb, {make_module(Hb, {0}, {{"x"}})}));
  auto A = make_ring("x", "x^2", f);
  out.push_back(builtin("k[x]/(x^2);m", A, {make_module(A, {1}, {{"x"}})}));
  auto T = make_ring("x,y,z", "x*y", f);
  out.push_back(builtin("k[x,y,z]/(xy);R/(x)", T, {make_module(T, {0}, {{"x"}})}));
  int added = 0;
  for (int j = 0; added < c.trials && j < 50 * std::max(1, c.trials); ++j) {
    Instance inst = fuzz_instance(c.cfg.seed, j, {}, f);
    if (!single_degree(inst.modules[0])) continue;
    out.push_back(inst);
    ++added;
  }
  return out;
}

void sc_avind(Ctx& c) {
  auto insts = supported_suite(c);
  for_instances(insts, c.rep, [&](const Instance& inst, std::vector<CheckRecord>& out) {
    const ModulePresentation& N = inst.modules[0];
    int dR = ring_summary(inst.ring).depth;
    int i_top = resolve_i(c, dR, 4);
    CheckRecord r = record(inst, "A_R(N) <= L_R(N) - 1 <= polyreg_R(N)", "A_R(N) <= L_R(N) - 1 <= polyreg_R(N)");
    r.bounds = {{"n_max", c.n_max}, {"i_max", i_top}, {"s_max", c.s_max}};
    auto pr = polyreg(N);
    if (!pr) {
      r.verdict = Verdict::vacuous;
      r.computed = {{"polyreg", "unsupported-class"}};
      out.push_back(r);
      return;
    }
    r.computed["polyreg"] = *pr;
    try {
      IndexResult A = avramov_index(N, i_top, c.n_max);
      IndexResult L = levin_index(N, i_top, c.s_max);
      r.computed["avramov_index"] = A.value;
      r.computed["levin_index"] = L.value;
      if (!(A.value <= L.value - 1 && L.value - 1 <= *pr)) mark_fail(r, inst, {{"i_max", i_top}});
    } catch (const Inconclusive& e) {
      r.verdict = Verdict::inconclusive;
      r.note = e.what();
    }
    out.push_back(r);
  });
}

Poly superficial_for(const ModulePresentation& N, std::uint64_t seed, int n_max) {
  return find_superficial({N}, 50, seed, n_max).x;
}

void sc_rho_polyreg(Ctx& c) {
  auto insts = supported_suite(c);
  for_instances(insts, c.rep, [&](const Instance& inst, std::vector<CheckRecord>& out) {
    const ModulePresentation& N = inst.modules[0];
    CheckRecord r = record(inst, "rho(x, M) <= polyreg(M) + 1", "depth M >= 1 => rho_R(x,M) <= polyreg_R(M) + 1");
    CheckRecord ind = record(inst, "rho(x, M) is the same for 5 random superficial x", "rho_R(x,M) is independent of x");
    CheckRecord reg = record(inst, "superficial x is a non-zero divisor on M in degrees <= 6",
                             "depth M >= 1, x superficial => x is M-regular");
    r.bounds = ind.bounds = {{"n_max", c.n_max}};
    reg.bounds = {{"n_max", c.n_max}, {"degree_max", 6}};
    auto pr = polyreg(N);
    int dN = module_is_zero(N) ? 0 : depth(N);
    r.computed = {{"depth_M", dN}};
    if (dN < 1 || !pr) {
      r.verdict = ind.verdict = reg.verdict = Verdict::vacuous;
      if (!pr) r.computed["polyreg"] = "unsupported-class";
      out.push_back(r);
      out.push_back(ind);
      out.push_back(reg);
      return;
    }
    r.computed["polyreg"] = *pr;
    Poly x = superficial_for(N, c.cfg.seed, c.n_max);
    r.computed["x"] = x.to_string();
    try {
      int rh = rho(x, N, c.n_max);
      r.computed["rho"] = rh;
      if (rh > *pr + 1) mark_fail(r, inst, {{"x", x.to_string()}});
      std::vector<int> rs;
      Json forms = Json::array();
      for (int t = 1; t <= 5; ++t) {
        Poly xt = superficial_for(N, c.cfg.seed + 1000 * t, c.n_max);
        forms.push_back(xt.to_string());
        rs.push_back(rho(xt, N, c.n_max));
      }
      ind.computed = {{"forms", forms}, {"rho", rs}};
      if (std::any_of(rs.begin(), rs.end(), [&](int v) { return v != rh; })) mark_fail(ind, inst, {{"forms", forms}});
    } catch (const Inconclusive& e) {
      r.verdict = ind.verdict = Verdict::inconclusive;
      r.note = ind.note = e.what();
    }
    GradedPieces X(N);
    Json bad = Json::array();
    for (int e = X.low_degree(); e <= 6; ++e) {
      int dim = X.dim(e);
      if (dim == 0) continue;
      if (rank(N.ring()->field(), X.multiplication(x, e)) != dim) bad.push_back(e);
    }
    reg.computed = {{"x", x.to_string()}};
    if (!bad.empty()) mark_fail(reg, inst, {{"x", x.to_string()}, {"degrees", bad}});
    out.push_back(r);
    out.push_back(ind);
    out.push_back(reg);
  });
}

void sc_regularity(Ctx& c) {
  std::vector<Instance> insts;
  if (!c.cfg.input_text.empty()) {
    insts = input_instances(c);
  } else {
    PrimeField f = c.f;
    auto P2 = make_ring("x,y", "", f);
    insts.push_back(builtin("k[x,y];R", P2, {ModulePresentation::free(P2, {0})}));
    auto P3 = make_ring("x,y,z", "", f);
    insts.push_back(builtin("k[x,y,z];R/(x)", P3, {make_module(P3, {0}, {{"x"}})}));
    auto H = make_ring("x,y", "x^2", f);
    insts.push_back(builtin("k[x,y]/(x^2);R", H, {ModulePresentation::free(H, {0})}));
    auto Hb = make_ring("x,y", "x^2", f);
    insts.push_back(builtin("k[x,y]/(x^2);R/(x)", Hb, {make_module(Hb, {0}, {{"x"}})}));
    auto T = make_ring("x,y,z", "x*y", f);
    insts.push_back(builtin("k[x,y,z]/(xy);R", T, {ModulePresentation::free(T, {0})}));
    auto Tb = make_ring("x,y,z", "x*y", f);
    insts.push_back(builtin("k[x,y,z]/(xy);R/(x)", Tb, {make_module(Tb, {0}, {{"x"}})}));
    auto ex = noncm_example(0, 2, f);
    insts.push_back(builtin("noncm(0,2);S", ex.ring(), {ex.module()}));
  }
  for_instances(insts, c.rep, [&](const Instance& inst, std::vector<CheckRecord>& out) {
    const ModulePresentation& N = inst.modules[0];
    RingSummary s = ring_summary(inst.ring);
    int i_top = resolve_i(c, s.depth, 4);
    CheckRecord a = record(inst, "injdim N/m^(n+1)N finite, n >= rho(N) imply embdim R - depth R <= 1",
                           "depth N >= 1, injdim(N/m^{n+1}N) < inf, n >= rho_R(N) => R hypersurface");
    CheckRecord b = record(inst, "injdim N/m^(n+1)N finite, n >= rho(N), n >= A(N) imply R regular",
                           "... and n >= A_R(N) => R regular");
    CheckRecord p = record(inst, "projdim N/m^(n+1)N finite, dim N >= 1, n >= A(N) imply R regular",
                           "dim N >= 1, projdim(N/m^{n+1}N) < inf, n >= A_R(N) => R regular");
    Json bnd = {{"n_max", c.n_max}, {"i_max", i_top}, {"index_window", 8}};
    a.bounds = b.bounds = p.bounds = bnd;
    DepthDim dd = depth_dim(N);
    bool hypersurface = s.embdim - s.depth <= 1;
    bool regular = s.embdim == s.dim;
    Json info = {{"depth_N", dd.depth}, {"dim_N", dd.dim}, {"embdim", s.embdim}, {"depth_R", s.depth}, {"dim_R", s.dim}};
    IndexResult A = avramov_index(N, i_top, 8);
    info["avramov_index"] = A.value;
    std::optional<int> rh;
    if (dd.depth >= 1) {
      Poly x = superficial_for(N, c.cfg.seed, 8);
      rh = rho(x, N, 8);
      info["rho"] = *rh;
      info["x"] = x.to_string();
    }
    bool gor = is_gorenstein(inst.ring);
    info["gorenstein"] = gor;
    Json inj = Json::array(), pd = Json::array();
    bool heuristic_only_a = true, heuristic_only_b = true;
    Json trig_a = Json::array(), trig_b = Json::array(), trig_p = Json::array();
    for (int n = 0; n <= c.n_max; ++n) {
      ModulePresentation X = quotient_by_power(N, n + 1);
      bool pfin = projdim_finite(X);
      InjdimVerdict iv = injdim_finite(X, 2, gor);
      inj.push_back(iv.finite);
      pd.push_back(pfin);
      if (dd.dim >= 1 && pfin && n >= A.value) trig_p.push_back(n);
      if (rh && iv.finite && n >= *rh) {
        trig_a.push_back(n);
        if (!iv.heuristic) heuristic_only_a = false;
        if (n >= A.value) {
          trig_b.push_back(n);
          if (!iv.heuristic) heuristic_only_b = false;
        }
      }
    }
    info["injdim_finite"] = inj;
    info["projdim_finite"] = pd;
    auto settle = [&](CheckRecord& r, const Json& trig, bool conclusion, bool heuristic_only) {
      r.computed = info;
      r.computed["triggered_n"] = trig;
      if (trig.empty()) {
        r.verdict = Verdict::vacuous;
      } else if (!conclusion) {
        if (heuristic_only) {
          r.verdict = Verdict::inconclusive;
          r.note = "injective dimension judged finite by the gap probe only";
        } else {
          mark_fail(r, inst, {{"n", trig}});
        }
      }
    };
    settle(a, trig_a, hypersurface, heuristic_only_a);
    settle(b, trig_b, regular, heuristic_only_b);
    settle(p, trig_p, regular, false);
    out.push_back(a);
    out.push_back(b);
    out.push_back(p);
  });
}

void sc_hypersurface_ding(Ctx& c) {
  std::vector<Instance> insts;
  std::vector<int> es;
  for (auto [vars, f] : std::vector<std::pair<std::string, std::string>>{{"x,y", "x^2 + x*y"}, {"x", "x^3"}}) {
    for (int r = 1; r <= 3; ++r) {
      auto R = make_ring(vars, f, c.f);
      ModulePresentation M = ModulePresentation::residue_field(R);
      for (int t = 1; t < r; ++t) M = direct_sum(M, ModulePresentation::residue_field(R));
      insts.push_back(builtin("k[" + vars + "]/(" + f + ");k^" + std::to_string(r), R, {M}));
    }
  }
  for_instances(insts, c.rep, [&](const Instance& inst, std::vector<CheckRecord>& out) {
    const ModulePresentation& M = inst.modules[0];
    RingSummary s = ring_summary(inst.ring);
    int e = static_cast<int>(s.multiplicity);
    int i_top = resolve_i(c, s.depth, 4);
    CheckRecord r = record(inst, "m^(e-1)M = 0 implies projdim M = injdim M = infinity",
                           "R hypersurface, m^{e(R)-1}M = 0 => projdim M = inf = injdim M");
    r.bounds = {{"i_max", i_top}};
    bool hyp = s.embdim - s.depth <= 1 && module_is_zero(power_module(M, e - 1));
    r.computed = {{"e", e}, {"embdim", s.embdim}, {"depth_R", s.depth}};
    if (!hyp) {
      r.verdict = Verdict::vacuous;
      out.push_back(r);
      return;
    }
    bool pfin = projdim_finite(M);
    InjdimVerdict iv = injdim_finite(M, 2);
    FreeComplex F = minimal_resolution(M, i_top);
    std::vector<long long> betti, bass;
    for (int i = 0; i <= i_top; ++i) {
      betti.push_back(F.betti(i));
      bass.push_back(ext_bass(M, i));
    }
    r.computed["projdim_finite"] = pfin;
    r.computed["injdim_finite"] = iv.finite;
    r.computed["injdim_method"] = iv.method;
    r.computed["betti"] = betti;
    r.computed["bass"] = bass;
    bool nonzero = std::all_of(betti.begin(), betti.end(), [](long long v) { return v > 0; }) &&
                   std::all_of(bass.begin(), bass.end(), [](long long v) { return v > 0; });
    if (pfin || iv.finite || !nonzero) mark_fail(r, inst, {{"i_max", i_top}});
    out.push_back(r);
  });
}

void sc_mprimary(Ctx& c) {
  auto R = make_ring("x,y", "x^2", c.f);
  ModulePresentation M = make_module(R, {0}, {{"x"}});
  Instance inst = builtin("k[x,y]/(x^2);R/(x)", R, {M});
  Family fam;
  fam.kind = FamilyKind::quotient_ring;
  fam.ideal = {R->var(1)};
  fam.description = "R/(y)^(n+1)";
  TorTable t = tor_table(M, fam, {1}, c.n_max);
  CheckRecord r = record(inst, "length Tor_1(M, R/I^(n+1)) = 0 for I = (y)", "there are m-primary I with Tor_1(M, R/I^{n+1}) = 0");
  r.bounds = {{"n_max", c.n_max}};
  r.computed = {{"values", t.lengths[0]}, {"family", t.family}};
  if (std::any_of(t.lengths[0].begin(), t.lengths[0].end(), [](long long v) { return v != 0; }))
    mark_fail(r, inst, {{"i", 1}});
  c.rep.records.push_back(r);

  auto vals = hs_table(M, 1, c.n_max);
  CheckRecord m = record(inst, "for I = m: deg P^1 = dim R - 1 = 0 with constant value 1", "deg P^1 = dim R - 1 for I = m");
  m.bounds = r.bounds;
  m.computed = {{"values", vals}};
  try {
    FittedPolynomial p = fit_values(vals);
    m.computed["fit"] = fit_json(p);
    int dim = ring_summary(R).dim;
    if (!(p.degree == dim - 1 && p.degree == 0 && p.coeffs[0] == Rational(1))) mark_fail(m, inst, {{"i", 1}});
  } catch (const Inconclusive& e) {
    m.verdict = Verdict::inconclusive;
    m.note = e.what();
  }
  c.rep.records.push_back(m);
}

void sc_closing_question(Ctx& c) {
  std::vector<Instance> insts;
  CorpusShape shape;
  shape.ring_kind = "hypersurface";
  for (auto& inst : fuzz_corpus(c.cfg.seed, std::max(1, c.trials), shape, c.f)) {
    Instance withR = inst;
    withR.modules.insert(withR.modules.begin(), ModulePresentation::free(inst.ring, {0}));
    withR.module_kinds.insert(withR.module_kinds.begin(), "free");
    insts.push_back(withR);
  }
  int outcomes_open = 0, conclusion_open = 0;
  std::vector<std::pair<int, int>> tallies(insts.size());
  for_instances(insts, c.rep, [&](const Instance& inst, std::vector<CheckRecord>& out) {
    RingSummary s = ring_summary(inst.ring);
    int e = static_cast<int>(s.multiplicity);
    int i_top = resolve_i(c, s.depth, 4);
    for (std::size_t j = 0; j < inst.modules.size(); ++j) {
      const ModulePresentation& N = inst.modules[j];
      CheckRecord r = record(inst, "module " + std::to_string(j) + ": projdim = injdim = infinity for n outside [e-1, d-1]",
                             "singular hypersurface, depth N >= 1, n not in [e(R)-1, d-1] => projdim = inf = injdim of N/m^{n+1}N");
      r.bounds = {{"n_max", c.n_max}, {"i_max", i_top}, {"index_window", 8}};
      bool singular = s.embdim - s.depth == 1;
      int dN = module_is_zero(N) ? 0 : depth(N);
      r.computed = {{"e", e}, {"depth_N", dN}, {"singular_hypersurface", singular}};
      if (!singular || dN < 1) {
        r.verdict = Verdict::vacuous;
        out.push_back(r);
        continue;
      }
      Poly x = superficial_for(N, c.cfg.seed, 8);
      int rh = rho(x, N, 8);
      int A = avramov_index(N, i_top, 8).value;
      int d = std::max(rh, A);
      r.computed["rho"] = rh;
      r.computed["avramov_index"] = A;
      Json outside = Json::array(), inside = Json::array(), bad = Json::array();
      int open_total = 0, open_holds = 0;
      for (int n = 0; n <= c.n_max; ++n) {
        // Gorenstein ring: injdim finite exactly when projdim is
        bool infinite = !projdim_finite(quotient_by_power(N, n + 1));
        bool in_window = n >= e - 1 && n <= d - 1;
        if (in_window) {
          inside.push_back({n, infinite});
          ++open_total;
          if (infinite) ++open_holds;
        } else {
          outside.push_back({n, infinite});
          if (!infinite) bad.push_back(n);
        }
      }
      r.computed["outside_window"] = outside;
      r.computed["open_window"] = inside;
      if (!bad.empty()) mark_fail(r, inst, {{"n", bad}, {"module", j}});
      std::size_t k = &inst - insts.data();
      tallies[k].first += open_total;
      tallies[k].second += open_holds;
      out.push_back(r);
    }
  });
  for (auto& t : tallies) {
    outcomes_open += t.first;
    conclusion_open += t.second;
  }
  c.rep.extra["open_window_cases"] = outcomes_open;
  c.rep.extra["open_window_conclusion_holds"] = conclusion_open;
}

// ---------------------------------------------------------------- registry

struct ScenarioEntry {
  std::string id;
  int n_max, i_max, s_max, trials;  // i_max -1: relative to depth R
  std::function<void(Ctx&)> run;
  bool takes_input;
};

const std::vector<ScenarioEntry>& registry() {
  static const std::vector<ScenarioEntry> entries = {
      {"cmgrowth", 8, 1, -1, 0, sc_cmgrowth, true},
      {"igrowth", 8, 2, -1, 20, sc_igrowth, true},
      {"noncm", 8, 1, -1, 0, sc_noncm, false},
      {"trivext-identity", 6, 1, -1, 0, sc_trivext, false},
      {"recursion", 8, 1, -1, 0, sc_recursion, false},
      {"minor-lemma-fuzz", 4, 1, -1, 200, sc_minor_lemma, true},
      {"hs-properties", 8, 1, -1, 200, sc_hs_properties, true},
      {"intheorem-fuzz", 3, 2, -1, 200, sc_truncation_vanishing, true},
      {"lv-fuzz", 3, 2, -1, 200, sc_power_vanishing, true},
      {"testmodule", 3, -1, -1, 200, sc_testmodule, true},
      {"avind-chain", 8, -1, 8, 10, sc_avind, true},
      {"rho-polyreg", 8, -1, -1, 10, sc_rho_polyreg, true},
      {"regularity-detect", 4, -1, -1, 0, sc_regularity, true},
      {"hypersurface-ding", 0, -1, -1, 0, sc_hypersurface_ding, false},
      {"mprimary-vanishing", 8, 1, -1, 0, sc_mprimary, false},
      {"closing-question-fuzz", 4, -1, -1, 10, sc_closing_question, false},
  };
  return entries;
}

std::string now_utc() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

}  // namespace

const std::vector<std::string>& scenario_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (auto& s : registry()) v.push_back(s.id);
    return v;
  }();
  return ids;
}

VerificationReport run_scenario(const ScenarioConfig& cfg) {
  const ScenarioEntry* entry = nullptr;
  for (auto& s : registry())
    if (s.id == cfg.scenario) entry = &s;
  if (!entry) throw InputError("unknown scenario '" + cfg.scenario + "'", 0, 0);
  if (!cfg.input_text.empty() && !entry->takes_input)
    throw InputError("scenario '" + cfg.scenario + "' uses its own fixed instances and takes no input", 0, 0);
  VerificationReport rep;
  rep.config = cfg;
  rep.timestamp = now_utc();
  Ctx c{cfg, PrimeField(cfg.field), rep};
  c.n_max = cfg.n_max >= 0 ? cfg.n_max : entry->n_max;
  c.i_max = cfg.i_max >= 0 ? cfg.i_max : entry->i_max;
  c.s_max = cfg.s_max >= 0 ? cfg.s_max : entry->s_max;
  c.trials = cfg.trials >= 0 ? cfg.trials : entry->trials;
  rep.bounds = {{"n_max", c.n_max},
                {"s_max", c.s_max},
                {"trials", c.trials},
                {"seed", cfg.seed},
                {"i_max", c.i_max >= 0 ? Json(c.i_max) : Json("depth R + default offset")}};
  entry->run(c);
  return rep;
}

}  // namespace torsam
