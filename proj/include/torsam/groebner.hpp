#pragma once

#include <vector>

#include "torsam/field.hpp"
#include "torsam/monomial.hpp"

namespace torsam {

// Monomial order on a graded free module with generators in the given degrees.
// Positions below `split` form an eliminated block that dominates the rest.
// Inside a block: weighted degree, then grevlex, then position (or position
// first when position_over_term is set).
struct ModuleOrder {
  std::vector<int> degrees;
  int split = 0;
  bool position_over_term = false;

  int compare(int pa, const Monomial& a, int pb, const Monomial& b) const {
    if (split > 0) {
      bool ta = pa < split, tb = pb < split;
      if (ta != tb) return ta ? 1 : -1;
    }
    if (position_over_term) {
      if (pa != pb) return pa < pb ? 1 : -1;
      return compare_grevlex(a, b);
    }
    int da = a.deg + degrees[pa], db = b.deg + degrees[pb];
    if (da != db) return da > db ? 1 : -1;
    int c = compare_grevlex(a, b);
    if (c != 0) return c;
    if (pa != pb) return pa < pb ? 1 : -1;
    return 0;
  }
};

struct VTerm {
  Monomial mono;
  int pos;
  Scalar coeff;
};

// sparse module element, terms strictly descending in the active order
using ModVec = std::vector<VTerm>;

void sort_vec(ModVec& v, const ModuleOrder& ord, const PrimeField& f);
int weighted_degree(const ModVec& v, const ModuleOrder& ord);
bool is_homogeneous(const ModVec& v, const ModuleOrder& ord);
ModVec scale_vec(const ModVec& v, Scalar c, const PrimeField& f);
ModVec add_vec(const ModVec& a, const ModVec& b, Scalar cb, const ModuleOrder& ord,
               const PrimeField& f);
ModVec mul_vec(const ModVec& v, const Monomial& m, Scalar c, const PrimeField& f);

struct GroebnerInput {
  ModVec vec;
  bool ambient = false;  // processed ahead of ordinary generators of equal degree
};

struct GroebnerRun {
  std::vector<ModVec> basis;  // reduced, monic, sorted by leading term
  std::vector<char> kept;     // per input: did it contribute a new element
  bool truncated = false;
  int degree_cap = -1;
};

// Homogeneous Buchberger, degree by degree, Gebauer-Moeller pair criteria.
// Inputs of one degree are handled after that degree's S-pairs, ambient first,
// so non-ambient inputs marked kept form a minimal generating set modulo the
// ambient ones. With degree_cap >= 0 the run stops after that degree.
GroebnerRun buchberger(const PrimeField& f, const ModuleOrder& ord, std::vector<GroebnerInput> inputs,
                       int degree_cap = -1);

// Full reduction against a basis of monic elements.
ModVec reduce_vec(const ModVec& v, const std::vector<ModVec>& basis, const ModuleOrder& ord,
                  const PrimeField& f);

}  // namespace torsam
