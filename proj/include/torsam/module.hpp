#pragma once

#include <string>
#include <vector>

#include "torsam/groebner.hpp"
#include "torsam/ring.hpp"

namespace torsam {

// dense element of a free module: one polynomial per generator
using Vector = std::vector<Poly>;

// sum of R(-d) over the listed generator degrees d
struct FreeModule {
  std::vector<int> degrees;
  int rank() const { return static_cast<int>(degrees.size()); }
  bool operator==(const FreeModule&) const = default;
};

// homogeneous map of free modules; column j is the image of source generator j
struct GradedMatrix {
  FreeModule source;
  FreeModule target;
  std::vector<Vector> columns;

  const Poly& entry(int i, int j) const { return columns[j][i]; }
};

// M = coker(F1 -> F0) over R; relation columns are reduced modulo I and nonzero
class ModulePresentation {
 public:
  ModulePresentation() = default;
  // relation degrees are inferred from the entries; inconsistent columns throw
  ModulePresentation(RingPtr ring, std::vector<int> generator_degrees, std::vector<Vector> relations);

  static ModulePresentation free(RingPtr ring, std::vector<int> degrees);
  static ModulePresentation residue_field(RingPtr ring);
  // R/J for homogeneous J, generator in degree 0
  static ModulePresentation cyclic(RingPtr ring, const std::vector<Poly>& ideal);

  const RingPtr& ring() const { return ring_; }
  const FreeModule& generators() const { return gens_; }
  const std::vector<int>& generator_degrees() const { return gens_.degrees; }
  int rank() const { return gens_.rank(); }
  const std::vector<Vector>& relations() const { return relations_; }
  const std::vector<int>& relation_degrees() const { return rel_degrees_; }
  GradedMatrix relation_matrix() const;

  // the same module presented over the ambient polynomial ring
  ModulePresentation over_ambient() const;

 private:
  RingPtr ring_;
  FreeModule gens_;
  std::vector<Vector> relations_;
  std::vector<int> rel_degrees_;
};

// degree of a homogeneous nonzero vector, or nullopt-like INT_MIN for zero; throws if not homogeneous
int vector_degree(const Vector& v, const std::vector<int>& degrees);
bool vector_is_zero(const Vector& v);
Vector zero_vector(const RingPtr& ring, int rank);
Vector unit_vector(const RingPtr& ring, int rank, int i);

ModVec to_modvec(const Vector& v, const ModuleOrder& ord, const PrimeField& f, int offset = 0);
Vector to_vector(const ModVec& v, int rank, const PolyRing* ctx, int offset = 0);

ModuleOrder top_order(const std::vector<int>& degrees);

}  // namespace torsam
