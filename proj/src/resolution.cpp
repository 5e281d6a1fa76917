#include "torsam/resolution.hpp"

#include <array>

#include "torsam/submodule.hpp"

namespace torsam {

int FreeComplex::betti(int i) const {
  if (i < 0) return 0;
  if (computed(i)) return modules[i].rank();
  if (terminated) return 0;
  throw Error("Betti number beyond the computed range");
}

std::map<int, int> FreeComplex::graded_betti(int i) const {
  std::map<int, int> out;
  if (i < 0 || (!computed(i) && terminated)) return out;
  if (!computed(i)) throw Error("Betti number beyond the computed range");
  for (int d : modules[i].degrees) ++out[d];
  return out;
}

int FreeComplex::max_generator_degree(int i) const {
  int m = INT_MIN;
  if (!computed(i)) return m;
  for (int d : modules[i].degrees) m = std::max(m, d);
  return m;
}

ModulePresentation minimal_presentation(const ModulePresentation& M) {
  const RingPtr& R = M.ring();
  std::vector<int> degs = M.generator_degrees();
  std::vector<Vector> cols = M.relations();
  const PrimeField& f = R->field();
  while (true) {
    int pj = -1, pi = -1;
    for (std::size_t j = 0; j < cols.size() && pj < 0; ++j)
      for (std::size_t i = 0; i < cols[j].size(); ++i)
        if (!cols[j][i].is_zero() && cols[j][i].degree() == 0) {
          pj = static_cast<int>(j);
          pi = static_cast<int>(i);
          break;
        }
    if (pj < 0) break;
    Vector pivot = cols[pj];
    Scalar inv = f.inv(pivot[pi].lead().coeff);
    std::vector<Vector> next;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (static_cast<int>(k) == pj) continue;
      Vector c = cols[k];
      if (!c[pi].is_zero()) {
        Poly factor = c[pi].scaled(inv);
        for (std::size_t i = 0; i < c.size(); ++i)
          if (!pivot[i].is_zero()) c[i] = R->reduce(c[i] - factor * pivot[i]);
      }
      c.erase(c.begin() + pi);
      next.push_back(std::move(c));
    }
    degs.erase(degs.begin() + pi);
    cols = std::move(next);
  }
  std::vector<Vector> kept;
  for (auto& c : cols)
    if (!vector_is_zero(c)) kept.push_back(std::move(c));
  return ModulePresentation(R, degs, std::move(kept));
}

FreeComplex minimal_resolution(const ModulePresentation& M, int i_max, ResolutionOptions opts) {
  const RingPtr& R = M.ring();
  FreeComplex F;
  F.ring = R;
  F.homological_cap = i_max;
  F.degree_cap = opts.degree_cap;
  ModulePresentation pres = minimal_presentation(M);
  F.modules.push_back(pres.generators());
  F.exact_through.push_back(INT_MAX);
  if (pres.rank() == 0) {
    F.terminated = true;
    return F;
  }
  int exact = INT_MAX;
  for (int i = 1; i <= i_max; ++i) {
    bool trunc = false;
    std::vector<Vector> cols;
    if (i == 1) {
      cols = minimal_generators(R, pres.generators(), pres.relations(), opts.degree_cap, &trunc);
    } else {
      const GradedMatrix& prev = F.maps.back();
      KernelResult k = kernel_mod(R, prev.target.degrees, prev.columns, prev.source.degrees, {}, true,
                                  opts.degree_cap);
      cols = std::move(k.generators);
      trunc = k.truncated;
    }
    if (trunc) exact = std::min(exact, opts.degree_cap);
    const FreeModule& target = F.modules.back();
    FreeModule src;
    for (auto& c : cols) src.degrees.push_back(vector_degree(c, target.degrees));
    if (cols.empty() && exact == INT_MAX) {
      F.terminated = true;
      break;
    }
    F.maps.push_back(GradedMatrix{src, target, cols});
    F.modules.push_back(src);
    F.exact_through.push_back(exact);
    if (cols.empty()) break;
  }
  return F;
}

FreeComplex ambient_resolution(const ModulePresentation& M) {
  ModulePresentation A = M.over_ambient();
  FreeComplex F = minimal_resolution(A, A.ring()->nvars() + 1);
  if (!F.terminated) throw Error("ambient resolution did not terminate");
  return F;
}

int ambient_projdim(const ModulePresentation& M) {
  FreeComplex F = ambient_resolution(M);
  int pd = -1;
  for (int i = 0; i <= F.length(); ++i)
    if (F.betti(i) > 0) pd = i;
  return pd;
}

int depth(const ModulePresentation& M) {
  int pd = ambient_projdim(M);
  if (pd < 0) throw Error("depth of the zero module");
  return M.ring()->nvars() - pd;
}

int regularity(const ModulePresentation& M) {
  FreeComplex F = ambient_resolution(M);
  int reg = INT_MIN;
  for (int i = 0; i <= F.length(); ++i)
    for (int d : F.modules[i].degrees) reg = std::max(reg, d - i);
  if (reg == INT_MIN) throw Error("regularity of the zero module");
  return reg;
}

std::vector<std::array<int, 3>> betti_triples(const FreeComplex& F) {
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i <= F.length(); ++i)
    for (auto& [d, c] : F.graded_betti(i)) out.push_back({i, d, c});
  return out;
}

}  // namespace torsam
