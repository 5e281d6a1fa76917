#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "torsam/hilbert.hpp"
#include "torsam/homology.hpp"

namespace torsam {

RingSummary ring_summary(const RingPtr& R);  // cached on the ring

struct DepthDim {
  int depth = 0;
  int dim = 0;
};
DepthDim depth_dim(const ModulePresentation& M);  // throws for the zero module

// n -> length M / m^{n+1} M
class HilbertSamuel {
 public:
  explicit HilbertSamuel(const ModulePresentation& M);
  long long value(int n) const;
  const std::vector<Rational>& polynomial() const { return poly_; }
  // least c >= 0 with value(n) = polynomial(n) for all n >= c
  int postulation_number() const { return post_; }

 private:
  HilbertSeries whole_;
  int a_min_ = 0, a_max_ = 0;
  std::map<int, HilbertSeries> partial_;  // submodule generated in degrees <= delta
  std::vector<Rational> poly_;
  int post_ = 0;
};

long long hs_function(const ModulePresentation& M, int n);
int postulation_number(const ModulePresentation& M);

// colon checks are carried out degree by degree on M_e

// x superficial for M, verified for n in [c, n_max] with c <= n_max - 1
struct SuperficialCheck {
  bool superficial = false;
  int c = -1;  // least witness
  int n_max = 0;
};
SuperficialCheck is_superficial(const Poly& x, const ModulePresentation& M, int n_max);

// does (m^{n+1}M :_M x) = m^n M hold
bool colon_equals_power(const Poly& x, const ModulePresentation& M, int n);

struct SuperficialSearch {
  Poly x;
  int trials_used = 0;
  std::uint64_t seed = 0;
};
// random linear forms, first success in trial order
SuperficialSearch find_superficial(const std::vector<ModulePresentation>& targets, int trials, std::uint64_t seed,
                                   int n_max);
Poly random_linear_form(const RingPtr& R, std::mt19937_64& rng);

// least r <= n_max with equality on [r, n_max]; throws Inconclusive otherwise
int rho(const Poly& x, const ModulePresentation& M, int n_max);

// regularity of gr M for M generated in one degree; nullopt otherwise
std::optional<int> polyreg(const ModulePresentation& M);

struct IndexResult {
  int value = -1;
  int i_max = 0;
  int bound = 0;  // n_max or s_max
};
IndexResult avramov_index(const ModulePresentation& N, int i_max, int n_max);
IndexResult levin_index(const ModulePresentation& N, int i_max, int s_max);

}  // namespace torsam
