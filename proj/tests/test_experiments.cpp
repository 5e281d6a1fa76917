#include "doctest.h"
#include "torsam/constructions.hpp"
#include "torsam/experiments.hpp"
#include "torsam/hilbert.hpp"
#include "torsam/invariants.hpp"
#include "torsam/module_ops.hpp"
#include "torsam/parse.hpp"

using namespace torsam;

TEST_CASE("corpus instances depend only on seed and index") {
  auto a = fuzz_corpus(5, 12);
  auto b = fuzz_corpus(5, 12);
  auto c = fuzz_corpus(5, 4);
  auto d = fuzz_corpus(6, 4);
  REQUIRE(a.size() == 12);
  int differ = 0;
  for (int j = 0; j < 12; ++j) {
    CHECK(a[j].text() == b[j].text());
    CHECK(a[j].id == "fuzz:5:" + std::to_string(j));
    if (j < 4) {
      CHECK(a[j].text() == c[j].text());
      if (a[j].text() != d[j].text()) ++differ;
    }
  }
  CHECK(differ > 0);
  CHECK_THROWS(fuzz_corpus(1, 0));
}

TEST_CASE("corpus documents replay through the parser") {
  for (auto& inst : fuzz_corpus(2, 20, parse_shape("modules=2"))) {
    Document doc = parse_document(inst.text());
    REQUIRE(doc.modules.size() == 2);
    CHECK(hilbert_series(doc.module("M")) == hilbert_series(inst.modules[0]));
    CHECK(hilbert_series(doc.module("N")) == hilbert_series(inst.modules[1]));
    CHECK_FALSE(hilbert_series(inst.modules[0]).is_zero());
  }
}

TEST_CASE("corpus shapes") {
  for (auto& inst : fuzz_corpus(3, 5, parse_shape("regular-ring")))
    CHECK(inst.ring->relations().empty());
  // a nonzero quadric in two variables: depth 1 and dimension 1
  for (auto& inst : fuzz_corpus(3, 5, parse_shape("hypersurface,vars=2,degree=2"))) {
    REQUIRE(inst.ring->relations().size() == 1);
    CHECK(inst.ring->relations()[0].degree() == 2);
    RingSummary s = ring_summary(inst.ring);
    CHECK(s.depth == 1);
    CHECK(s.dim == 1);
  }
  CHECK_THROWS(parse_shape("vars=x"));
  CHECK_THROWS(parse_shape("cubic"));
}

TEST_CASE("hyperplane sections") {
  auto R = make_ring("x,y,z", "x*z - y^2");
  Poly l = R->var(1) + R->var(2);
  HyperplaneSection h = hyperplane_section(R, l);
  CHECK(h.S->ctx()->nvars() == 2);
  CHECK(h.map(l).is_zero());
  // S = R/(l) and N = M/lM must have the Hilbert series computed over R
  auto Rf = ModulePresentation::free(R, {0});
  CHECK(hilbert_series(ModulePresentation::free(h.S, {0})) == hilbert_series(quotient_by_element(Rf, l)));
  auto M = make_module(R, {0, 1}, {{"x", "y^2"}, {"0", "z"}});
  CHECK(hilbert_series(restrict_module(h, M)) == hilbert_series(quotient_by_element(M, l)));
}

TEST_CASE("reports") {
  ScenarioConfig cfg;
  cfg.scenario = "mprimary-vanishing";
  cfg.n_max = 5;
  VerificationReport rep = run_scenario(cfg);
  Json j = rep.to_json();
  CHECK(j["scenario"] == "mprimary-vanishing");
  CHECK(j["config"]["n_max"] == 5);
  CHECK(j["bounds"]["n_max"] == 5);
  CHECK(j.contains("timestamp"));
  CHECK_FALSE(rep.to_json(false).contains("timestamp"));
  CHECK(j["summary"]["records"] == rep.records.size());
  CHECK(j["summary"]["holds"] == 2);
  CHECK(rep.exit_code() == 0);
  for (auto& r : j["records"]) {
    CHECK(r.contains("claim"));
    CHECK(r.contains("statement"));
    CHECK(r.contains("verdict"));
    CHECK_FALSE(r.contains("counterexample"));
  }
  std::string csv = rep.csv();
  CHECK(csv.rfind("instance,claim,verdict,computed\n", 0) == 0);

  rep.records[0].verdict = Verdict::inconclusive;
  CHECK(rep.exit_code() == 2);
  rep.records[1].verdict = Verdict::fails;
  CHECK(rep.exit_code() == 1);
}

TEST_CASE("scenario input handling") {
  ScenarioConfig cfg;
  cfg.scenario = "no-such-scenario";
  CHECK_THROWS_AS(run_scenario(cfg), InputError);
  cfg.scenario = "noncm";
  cfg.input_text = "ring R = k[x]\nmodule M over R = coker deg(0) [[x]]\n";
  CHECK_THROWS_AS(run_scenario(cfg), InputError);
  cfg.scenario = "cmgrowth";
  cfg.input_text = "ring R = k[x,y]\nmodule M over R = coker deg(0) [[x, y]]\n";
  cfg.n_max = 6;
  VerificationReport rep = run_scenario(cfg);
  REQUIRE(rep.records.size() == 1);
  CHECK(rep.records[0].instance == "input:M");
  CHECK(rep.records[0].verdict == Verdict::holds);
  CHECK(rep.records[0].computed["fit"]["degree"] == 1);
  cfg.input_text = "ring R = k[x,y]\nmodule M over R = coker deg(0) [[x, y + x^2]]\n";
  CHECK_THROWS_AS(run_scenario(cfg), InputError);
}

TEST_CASE("failing records carry a replayable counterexample") {
  // the lv statement with bound i - 1 fails at projdim M = i; the record must replay
  ScenarioConfig cfg;
  cfg.scenario = "lv-fuzz";
  cfg.input_text = "ring R = k[x,y]\nmodule M over R = coker deg(0) [[x]]\nmodule N over R = coker deg(0) []\n";
  cfg.n_max = 1;
  cfg.i_max = 1;
  VerificationReport rep = run_scenario(cfg);
  bool saw = false;
  for (auto& r : rep.records) {
    if (r.verdict != Verdict::fails) continue;
    saw = true;
    Document doc = parse_document(r.counterexample["document"].get<std::string>());
    CHECK(doc.modules.size() == 2);
  }
  CHECK(saw);
}
