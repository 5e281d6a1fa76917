#include "torsam/module.hpp"

#include <climits>

namespace torsam {

int vector_degree(const Vector& v, const std::vector<int>& degrees) {
  int d = INT_MIN;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!v[i].is_homogeneous()) throw Error("entry is not homogeneous: " + v[i].to_string());
    int e = v[i].degree() + degrees[i];
    if (d != INT_MIN && d != e) throw Error("vector is not homogeneous");
    d = e;
  }
  return d;
}

bool vector_is_zero(const Vector& v) {
  for (auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

Vector zero_vector(const RingPtr& ring, int rank) { return Vector(rank, Poly(ring->ctx())); }

Vector unit_vector(const RingPtr& ring, int rank, int i) {
  Vector v = zero_vector(ring, rank);
  v[i] = Poly::constant(ring->ctx(), 1);
  return v;
}

ModVec to_modvec(const Vector& v, const ModuleOrder& ord, const PrimeField& f, int offset) {
  ModVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (auto& t : v[i].terms()) out.push_back({t.mono, static_cast<int>(i) + offset, t.coeff});
  sort_vec(out, ord, f);
  return out;
}

Vector to_vector(const ModVec& v, int rank, const PolyRing* ctx, int offset) {
  std::vector<std::vector<Term>> parts(rank);
  for (auto& t : v) {
    int p = t.pos - offset;
    if (p < 0 || p >= rank) throw Error("vector component out of range");
    parts[p].push_back({t.mono, t.coeff});
  }
  Vector out;
  out.reserve(rank);
  for (auto& p : parts) out.push_back(Poly(ctx, std::move(p)));
  return out;
}

ModuleOrder top_order(const std::vector<int>& degrees) { return ModuleOrder{degrees, 0, false}; }

ModulePresentation::ModulePresentation(RingPtr ring, std::vector<int> generator_degrees,
                                       std::vector<Vector> relations)
    : ring_(std::move(ring)), gens_{std::move(generator_degrees)} {
  for (auto& col : relations) {
    if (static_cast<int>(col.size()) != gens_.rank())
      throw Error("relation column has " + std::to_string(col.size()) + " entries, expected " +
                  std::to_string(gens_.rank()));
    Vector reduced;
    reduced.reserve(col.size());
    for (auto& p : col) {
      if (p.ring() != nullptr && !p.ring()->same_as(ring_->poly_ring()))
        throw Error("matrix entry from a different ring");
      reduced.push_back(ring_->reduce(Poly(ring_->ctx(), p.terms())));
    }
    int d = vector_degree(reduced, gens_.degrees);
    if (d == INT_MIN) continue;
    relations_.push_back(std::move(reduced));
    rel_degrees_.push_back(d);
  }
}

ModulePresentation ModulePresentation::free(RingPtr ring, std::vector<int> degrees) {
  return ModulePresentation(std::move(ring), std::move(degrees), {});
}

ModulePresentation ModulePresentation::residue_field(RingPtr ring) {
  std::vector<Vector> rels;
  for (int v = 0; v < ring->nvars(); ++v) rels.push_back({ring->var(v)});
  return ModulePresentation(ring, {0}, std::move(rels));
}

ModulePresentation ModulePresentation::cyclic(RingPtr ring, const std::vector<Poly>& ideal) {
  std::vector<Vector> rels;
  for (auto& f : ideal) rels.push_back({f});
  return ModulePresentation(ring, {0}, std::move(rels));
}

GradedMatrix ModulePresentation::relation_matrix() const {
  return GradedMatrix{FreeModule{rel_degrees_}, gens_, relations_};
}

ModulePresentation ModulePresentation::over_ambient() const {
  RingPtr P = ring_->ambient();
  std::vector<Vector> rels = relations_;
  for (int i = 0; i < rank(); ++i)
    for (auto& g : ring_->ideal_basis()) {
      Vector v = zero_vector(P, rank());
      v[i] = g;
      rels.push_back(std::move(v));
    }
  return ModulePresentation(P, gens_.degrees, std::move(rels));
}

}  // namespace torsam
