#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "torsam/module.hpp"

namespace torsam {

using Json = nlohmann::json;

// ---- fuzz corpus

struct CorpusShape {
  std::string ring_kind = "mixed";  // mixed, regular, hypersurface, random
  int nvars = 0;                    // 0: two or three at random
  int degree = 0;                   // form degree; 0: two or three at random
  int modules = 1;                  // modules drawn per instance
};

struct Instance {
  std::string id;
  std::string ring_kind;
  RingPtr ring;
  std::vector<ModulePresentation> modules;
  std::vector<std::string> module_kinds;  // cokernel, free, truncation, residue, given
  std::string text() const;               // replayable input document
};

// instance j depends only on (seed, j, shape), so prefixes of a corpus agree
std::vector<Instance> fuzz_corpus(std::uint64_t seed, int count, const CorpusShape& shape = {},
                                  PrimeField f = field_from_environment());
Instance fuzz_instance(std::uint64_t seed, int index, const CorpusShape& shape, PrimeField f);
CorpusShape parse_shape(const std::string& text);  // e.g. "hypersurface,vars=2,degree=2"

// homogeneous form with small coefficients, never zero
Poly random_form(const PolyRing* P, int degree, std::mt19937_64& rng);

// ---- reports

enum class Verdict { holds, fails, vacuous, inconclusive };
const char* verdict_name(Verdict v);

struct CheckRecord {
  std::string instance;
  std::string claim;
  std::string statement;  // the statement being tested, quoted briefly
  Verdict verdict = Verdict::holds;
  Json computed = Json::object();
  Json bounds = Json::object();
  Json counterexample;  // null unless the verdict is fails
  std::string note;
};

struct ScenarioConfig {
  std::string scenario;
  std::string input_text;  // optional document in the input grammar
  std::string input_name;
  int n_max = -1, i_max = -1, s_max = -1, trials = -1;  // -1: scenario default
  std::uint64_t seed = 1;
  std::uint32_t field = PrimeField::kDefaultCharacteristic;
  Json to_json() const;
};

struct VerificationReport {
  ScenarioConfig config;
  Json bounds = Json::object();  // defaults resolved
  std::vector<CheckRecord> records;
  Json extra = Json::object();
  std::string timestamp;

  std::map<std::string, int> counts() const;
  int exit_code() const;  // 0, 1 when something fails, 2 when only inconclusive
  Json to_json(bool with_timestamp = true) const;
  std::string csv() const;
};

const std::vector<std::string>& scenario_ids();
VerificationReport run_scenario(const ScenarioConfig& cfg);

}  // namespace torsam
