#include "torsam/module_ops.hpp"

#include "torsam/resolution.hpp"
#include "torsam/submodule.hpp"

namespace torsam {

std::vector<Poly> ideal_power_generators(const RingPtr& R, const std::vector<Poly>& I, int n) {
  std::vector<Poly> out;
  if (I.empty()) {
    for (auto& m : monomials_of_degree(R->nvars(), n)) out.push_back(Poly::monomial(R->ctx(), m));
    return out;
  }
  // multisets of size n from I
  std::vector<int> idx(n, 0);
  while (true) {
    Poly p = Poly::constant(R->ctx(), 1);
    for (int k : idx) p = p * I[k];
    p = R->reduce(p);
    if (!p.is_zero()) out.push_back(p);
    int pos = n - 1;
    while (pos >= 0 && idx[pos] == static_cast<int>(I.size()) - 1) --pos;
    if (pos < 0) break;
    int v = idx[pos] + 1;
    for (int k = pos; k < n; ++k) idx[k] = v;
  }
  return out;
}

ModulePresentation quotient_by_power(const ModulePresentation& N, int n) {
  std::vector<Vector> rels = N.relations();
  const RingPtr& R = N.ring();
  for (int j = 0; j < N.rank(); ++j)
    for (auto& m : monomials_of_degree(R->nvars(), n)) {
      Vector v = zero_vector(R, N.rank());
      v[j] = Poly::monomial(R->ctx(), m);
      rels.push_back(std::move(v));
    }
  return ModulePresentation(R, N.generator_degrees(), std::move(rels));
}

ModulePresentation quotient_by_ideal_power(const RingPtr& R, const std::vector<Poly>& I, int n) {
  std::vector<Vector> rels;
  for (auto& p : ideal_power_generators(R, I, n)) rels.push_back({p});
  return ModulePresentation(R, {0}, std::move(rels));
}

ModulePresentation image_module(const ModulePresentation& N, const std::vector<Vector>& elements) {
  const RingPtr& R = N.ring();
  std::vector<Vector> cols;
  std::vector<int> degs;
  for (auto& e : elements) {
    Vector r = reduce_vector(*R, e);
    if (vector_is_zero(r)) continue;
    degs.push_back(vector_degree(r, N.generator_degrees()));
    cols.push_back(std::move(r));
  }
  KernelResult k = kernel_mod(R, N.generator_degrees(), cols, degs, N.relations(), true);
  return minimal_presentation(ModulePresentation(R, degs, std::move(k.generators)));
}

ModulePresentation power_module(const ModulePresentation& N, int n) {
  const RingPtr& R = N.ring();
  std::vector<Vector> elems;
  for (int j = 0; j < N.rank(); ++j)
    for (auto& m : monomials_of_degree(R->nvars(), n)) {
      Vector v = zero_vector(R, N.rank());
      v[j] = Poly::monomial(R->ctx(), m);
      elems.push_back(std::move(v));
    }
  return image_module(N, elems);
}

ModulePresentation quotient_by_element(const ModulePresentation& M, const Poly& x) {
  std::vector<Vector> rels = M.relations();
  for (int j = 0; j < M.rank(); ++j) {
    Vector v = zero_vector(M.ring(), M.rank());
    v[j] = x;
    rels.push_back(std::move(v));
  }
  return ModulePresentation(M.ring(), M.generator_degrees(), std::move(rels));
}

ModulePresentation direct_sum(const ModulePresentation& a, const ModulePresentation& b) {
  const RingPtr& R = a.ring();
  std::vector<int> degs = a.generator_degrees();
  degs.insert(degs.end(), b.generator_degrees().begin(), b.generator_degrees().end());
  std::vector<Vector> rels;
  int r = a.rank() + b.rank();
  for (auto& c : a.relations()) {
    Vector v = zero_vector(R, r);
    for (int i = 0; i < a.rank(); ++i) v[i] = c[i];
    rels.push_back(std::move(v));
  }
  for (auto& c : b.relations()) {
    Vector v = zero_vector(R, r);
    for (int i = 0; i < b.rank(); ++i) v[a.rank() + i] = c[i];
    rels.push_back(std::move(v));
  }
  return ModulePresentation(R, degs, std::move(rels));
}

ModulePresentation tensor(const ModulePresentation& a, const ModulePresentation& b) {
  const RingPtr& R = a.ring();
  int ra = a.rank(), rb = b.rank();
  std::vector<int> degs;
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < rb; ++j) degs.push_back(a.generator_degrees()[i] + b.generator_degrees()[j]);
  std::vector<Vector> rels;
  for (auto& c : a.relations())
    for (int j = 0; j < rb; ++j) {
      Vector v = zero_vector(R, ra * rb);
      for (int i = 0; i < ra; ++i) v[i * rb + j] = c[i];
      rels.push_back(std::move(v));
    }
  for (auto& c : b.relations())
    for (int i = 0; i < ra; ++i) {
      Vector v = zero_vector(R, ra * rb);
      for (int j = 0; j < rb; ++j) v[i * rb + j] = c[j];
      rels.push_back(std::move(v));
    }
  return ModulePresentation(R, degs, std::move(rels));
}

ModulePresentation twist(const ModulePresentation& M, int s) {
  std::vector<int> degs = M.generator_degrees();
  for (auto& d : degs) d -= s;
  return ModulePresentation(M.ring(), degs, M.relations());
}

ModulePresentation syzygy_module(const ModulePresentation& M, int i) {
  if (i == 0) return M;
  FreeComplex F = minimal_resolution(M, i + 1);
  if (!F.computed(i)) return ModulePresentation(M.ring(), {}, {});
  std::vector<Vector> rels;
  if (F.computed(i + 1)) rels = F.differential(i + 1).columns;
  return ModulePresentation(M.ring(), F.modules[i].degrees, std::move(rels));
}

ModulePresentation change_ring(const ModulePresentation& M, const RingPtr& target) {
  std::vector<Vector> rels;
  for (auto& c : M.relations()) {
    Vector v;
    for (auto& p : c) v.push_back(Poly(target->ctx(), p.terms()));
    rels.push_back(std::move(v));
  }
  return ModulePresentation(target, M.generator_degrees(), std::move(rels));
}

}  // namespace torsam
