#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "torsam/module.hpp"

namespace torsam {

// Homogeneous submodule of a graded free module over R. The Groebner basis
// is taken over P for generators + I*ambient and is computed once on demand.
class Submodule {
 public:
  Submodule() = default;
  Submodule(RingPtr ring, FreeModule ambient, std::vector<Vector> generators);

  const RingPtr& ring() const { return ring_; }
  const FreeModule& ambient() const { return ambient_; }
  const std::vector<Vector>& generators() const { return gens_; }
  const std::vector<int>& generator_degrees() const { return gen_degrees_; }

  const ModuleOrder& order() const { return state_->order; }
  const std::vector<ModVec>& basis() const;

  Vector normal_form(const Vector& v) const;
  bool contains(const Vector& v) const;

 private:
  struct State {
    ModuleOrder order;
    std::once_flag once;
    std::vector<ModVec> basis;
  };
  RingPtr ring_;
  FreeModule ambient_;
  std::vector<Vector> gens_;
  std::vector<int> gen_degrees_;
  std::shared_ptr<State> state_;
};

Vector reduce_vector(const GradedRing& ring, const Vector& v);

// Generators of { c in sum R(-source_degrees) : sum c_j columns_j in span(extra) + I*target }.
// With minimalize the result is a minimal generating set.
struct KernelResult {
  std::vector<Vector> generators;
  bool truncated = false;
};
KernelResult kernel_mod(const RingPtr& ring, const std::vector<int>& target_degrees,
                        const std::vector<Vector>& columns, const std::vector<int>& source_degrees,
                        const std::vector<Vector>& extra, bool minimalize, int degree_cap = -1);

// minimal generators of span(gens) + I*F modulo I*F, in degree order
std::vector<Vector> minimal_generators(const RingPtr& ring, const FreeModule& F,
                                       const std::vector<Vector>& gens, int degree_cap = -1,
                                       bool* truncated = nullptr);

Submodule groebner_basis(const Submodule& U);
Vector normal_form(const Vector& v, const Submodule& U);
// relations among the generators of U, inside the free module on those generators
Submodule syzygies(const Submodule& U);
// m^n * (presentation cover of M), as a submodule of the cover
Submodule power_submodule(const ModulePresentation& M, int n);
// { v : x v in U }
Submodule colon(const Submodule& U, const Poly& x);
Submodule kernel(const GradedMatrix& f, const RingPtr& ring);
Submodule intersect(const Submodule& a, const Submodule& b);
Submodule sum(const Submodule& a, const Submodule& b);
// U : m^infinity
Submodule saturate(const Submodule& U);
bool contains(const Submodule& big, const Submodule& small);
bool equal(const Submodule& a, const Submodule& b);

// relation submodule of a presentation, inside its cover
Submodule relation_submodule(const ModulePresentation& M);

}  // namespace torsam
