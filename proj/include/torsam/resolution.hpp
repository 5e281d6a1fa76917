#pragma once

#include <array>
#include <climits>
#include <map>
#include <vector>

#include "torsam/module.hpp"

namespace torsam {

struct ResolutionOptions {
  int degree_cap = -1;  // -1: no internal degree bound
};

// Minimal graded free resolution F_0 <- F_1 <- ... computed up to some index.
struct FreeComplex {
  RingPtr ring;
  std::vector<FreeModule> modules;   // F_0 .. F_len
  std::vector<GradedMatrix> maps;    // maps[i-1] = d_i : F_i -> F_{i-1}
  std::vector<int> exact_through;    // F_i is right in internal degrees <= this
  bool terminated = false;           // F_{len+1} = 0 is certified
  int homological_cap = 0;
  int degree_cap = -1;

  int length() const { return static_cast<int>(modules.size()) - 1; }
  bool computed(int i) const { return i >= 0 && i <= length(); }
  // rank of F_i; beyond a terminated complex this is 0; throws if unknown
  int betti(int i) const;
  std::map<int, int> graded_betti(int i) const;  // degree -> count
  const GradedMatrix& differential(int i) const { return maps.at(i - 1); }
  int max_generator_degree(int i) const;  // INT_MIN if F_i = 0
  bool complete(int i) const { return computed(i) && exact_through[i] == INT_MAX; }
};

// drop generators killed by degree-0 relation entries
ModulePresentation minimal_presentation(const ModulePresentation& M);

FreeComplex minimal_resolution(const ModulePresentation& M, int i_max, ResolutionOptions opts = {});

// finite minimal resolution over the ambient polynomial ring
FreeComplex ambient_resolution(const ModulePresentation& M);
int ambient_projdim(const ModulePresentation& M);  // -1 for the zero module
int depth(const ModulePresentation& M);
int regularity(const ModulePresentation& M);       // max(j - i) over P

// Betti numbers beta_{i,j} over R as [i, j, count] triples
std::vector<std::array<int, 3>> betti_triples(const FreeComplex& F);

}  // namespace torsam
