#pragma once

#include <string>
#include <utility>
#include <vector>

#include "torsam/module.hpp"

namespace torsam {

// R = S x L with L placed in degree 1: new variables y_1..y_t, one per
// generator of L, with y_i y_j = 0 and the relations of L written in the y's
struct TrivialExtension {
  RingPtr S;
  ModulePresentation L;  // minimal presentation over S
  RingPtr R;
  std::vector<std::string> y_names;
  ModulePresentation S_over_R;  // R / (y)
};

// L must be generated in degree 0
TrivialExtension trivial_extension(const RingPtr& S, const ModulePresentation& L);

struct NonCMExample {
  int p = 0, q = 0;
  TrivialExtension ext;
  const RingPtr& ring() const { return ext.R; }
  const ModulePresentation& module() const { return ext.S_over_R; }
};

// S = k[x1..xq], L = S/(x_{p+2}, ..., x_q), M = S as an R-module
NonCMExample noncm_example(int p, int q, PrimeField f = PrimeField());

struct Tor1IdentityRow {
  int n = 0;
  long long tor_length = 0;   // length Tor_1^R(S, R/m^{n+1})
  long long graded_rank = 0;  // rank of n^n L / n^{n+1} L
};
std::vector<Tor1IdentityRow> tor1_identity_check(const TrivialExtension& ext, int n_max);

struct Hypersurface {
  RingPtr R;
  int multiplicity = 0;
  bool gorenstein = true;
};
Hypersurface hypersurface(const Poly& f);

// S = R / (l) for a linear form l, realized by eliminating one variable
struct HyperplaneSection {
  RingPtr R;
  RingPtr S;
  Poly form;
  int eliminated = -1;  // index in R of the removed variable
  Poly map(const Poly& f) const;  // R-polynomial to S-polynomial
};
HyperplaneSection hyperplane_section(const RingPtr& R, const Poly& l);
// M / lM over S
ModulePresentation restrict_module(const HyperplaneSection& h, const ModulePresentation& M);

}  // namespace torsam
