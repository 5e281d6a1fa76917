#include "torsam/submodule.hpp"

#include <climits>

namespace torsam {

Vector reduce_vector(const GradedRing& ring, const Vector& v) {
  Vector out;
  out.reserve(v.size());
  for (auto& p : v) out.push_back(ring.reduce(p));
  return out;
}

namespace {

// I * e_l for every position of a block starting at offset
void add_ideal_rows(const GradedRing& ring, int rank, int offset, const ModuleOrder& ord,
                    std::vector<GroebnerInput>& in) {
  for (int l = 0; l < rank; ++l)
    for (auto& g : ring.ideal_basis()) {
      ModVec v;
      for (auto& t : g.terms()) v.push_back({t.mono, l + offset, t.coeff});
      sort_vec(v, ord, ring.field());
      in.push_back({std::move(v), true});
    }
}

}  // namespace

Submodule::Submodule(RingPtr ring, FreeModule ambient, std::vector<Vector> generators)
    : ring_(std::move(ring)), ambient_(std::move(ambient)), state_(std::make_shared<State>()) {
  state_->order = top_order(ambient_.degrees);
  for (auto& g : generators) {
    if (static_cast<int>(g.size()) != ambient_.rank()) throw Error("generator has wrong length");
    Vector r = reduce_vector(*ring_, g);
    int d = vector_degree(r, ambient_.degrees);
    if (d == INT_MIN) continue;
    gens_.push_back(std::move(r));
    gen_degrees_.push_back(d);
  }
}

const std::vector<ModVec>& Submodule::basis() const {
  std::call_once(state_->once, [&] {
    std::vector<GroebnerInput> in;
    const PrimeField& f = ring_->field();
    add_ideal_rows(*ring_, ambient_.rank(), 0, state_->order, in);
    for (auto& g : gens_) in.push_back({to_modvec(g, state_->order, f), false});
    state_->basis = buchberger(f, state_->order, std::move(in)).basis;
  });
  return state_->basis;
}

Vector Submodule::normal_form(const Vector& v) const {
  ModVec r = reduce_vec(to_modvec(v, order(), ring_->field()), basis(), order(), ring_->field());
  return to_vector(r, ambient_.rank(), ring_->ctx());
}

bool Submodule::contains(const Vector& v) const { return vector_is_zero(normal_form(v)); }

std::vector<Vector> minimal_generators(const RingPtr& ring, const FreeModule& F,
                                       const std::vector<Vector>& gens, int degree_cap,
                                       bool* truncated) {
  ModuleOrder ord = top_order(F.degrees);
  const PrimeField& f = ring->field();
  std::vector<GroebnerInput> in;
  add_ideal_rows(*ring, F.rank(), 0, ord, in);
  std::size_t first = in.size();
  for (auto& g : gens) in.push_back({to_modvec(g, ord, f), false});
  GroebnerRun run = buchberger(f, ord, std::move(in), degree_cap);
  if (truncated != nullptr) *truncated = run.truncated;
  // keep input order sorted by degree (stable), as processed
  std::vector<std::pair<int, std::size_t>> chosen;
  for (std::size_t k = first; k < run.kept.size(); ++k)
    if (run.kept[k]) chosen.push_back({vector_degree(gens[k - first], F.degrees), k - first});
  std::stable_sort(chosen.begin(), chosen.end(),
                   [](auto& a, auto& b) { return a.first < b.first; });
  std::vector<Vector> out;
  for (auto& c : chosen) out.push_back(reduce_vector(*ring, gens[c.second]));
  return out;
}

KernelResult kernel_mod(const RingPtr& ring, const std::vector<int>& target_degrees,
                        const std::vector<Vector>& columns, const std::vector<int>& source_degrees,
                        const std::vector<Vector>& extra, bool minimalize, int degree_cap) {
  const int a = static_cast<int>(target_degrees.size());
  const int r = static_cast<int>(columns.size());
  const PrimeField& f = ring->field();
  ModuleOrder ord;
  ord.degrees = target_degrees;
  ord.degrees.insert(ord.degrees.end(), source_degrees.begin(), source_degrees.end());
  ord.split = a;

  std::vector<GroebnerInput> in;
  add_ideal_rows(*ring, a, 0, ord, in);
  for (auto& u : extra) in.push_back({to_modvec(u, ord, f), true});
  for (int j = 0; j < r; ++j) {
    ModVec v = to_modvec(columns[j], ord, f);
    v.push_back({Monomial::one(), a + j, 1});
    sort_vec(v, ord, f);
    if (!is_homogeneous(v, ord)) throw Error("kernel: column degree does not match its source degree");
    in.push_back({std::move(v), false});
  }
  GroebnerRun run = buchberger(f, ord, std::move(in), degree_cap);

  KernelResult out;
  out.truncated = run.truncated;
  std::vector<Vector> found;
  for (auto& g : run.basis) {
    if (g.front().pos < a) continue;
    Vector v = reduce_vector(*ring, to_vector(g, r, ring->ctx(), a));
    if (!vector_is_zero(v)) found.push_back(std::move(v));
  }
  if (!minimalize) {
    out.generators = std::move(found);
    return out;
  }
  bool trunc2 = false;
  out.generators = minimal_generators(ring, FreeModule{source_degrees}, found, degree_cap, &trunc2);
  out.truncated = out.truncated || trunc2;
  return out;
}

Submodule groebner_basis(const Submodule& U) {
  std::vector<Vector> gens;
  for (auto& g : U.basis()) {
    Vector v = reduce_vector(*U.ring(), to_vector(g, U.ambient().rank(), U.ring()->ctx()));
    if (!vector_is_zero(v)) gens.push_back(std::move(v));
  }
  return Submodule(U.ring(), U.ambient(), std::move(gens));
}

Vector normal_form(const Vector& v, const Submodule& U) { return U.normal_form(v); }

Submodule syzygies(const Submodule& U) {
  FreeModule src{U.generator_degrees()};
  KernelResult k = kernel_mod(U.ring(), U.ambient().degrees, U.generators(), src.degrees, {}, true);
  return Submodule(U.ring(), src, std::move(k.generators));
}

Submodule power_submodule(const ModulePresentation& M, int n) {
  const RingPtr& R = M.ring();
  std::vector<Vector> gens;
  auto monos = monomials_of_degree(R->nvars(), n);
  for (int j = 0; j < M.rank(); ++j)
    for (auto& u : monos) {
      Vector v = zero_vector(R, M.rank());
      v[j] = Poly::monomial(R->ctx(), u);
      gens.push_back(std::move(v));
    }
  return Submodule(R, M.generators(), std::move(gens));
}

Submodule colon(const Submodule& U, const Poly& x) {
  if (x.is_zero() || !x.is_homogeneous()) throw Error("colon needs a nonzero homogeneous element");
  const RingPtr& R = U.ring();
  int d = x.degree();
  int r = U.ambient().rank();
  std::vector<Vector> cols;
  std::vector<int> src;
  for (int j = 0; j < r; ++j) {
    Vector v = zero_vector(R, r);
    v[j] = x;
    cols.push_back(std::move(v));
    src.push_back(U.ambient().degrees[j] + d);
  }
  KernelResult k = kernel_mod(R, U.ambient().degrees, cols, src, U.generators(), true);
  return Submodule(R, U.ambient(), std::move(k.generators));
}

Submodule kernel(const GradedMatrix& m, const RingPtr& ring) {
  KernelResult k = kernel_mod(ring, m.target.degrees, m.columns, m.source.degrees, {}, true);
  return Submodule(ring, m.source, std::move(k.generators));
}

Submodule intersect(const Submodule& a, const Submodule& b) {
  const RingPtr& R = a.ring();
  KernelResult k =
      kernel_mod(R, a.ambient().degrees, a.generators(), a.generator_degrees(), b.generators(), true);
  std::vector<Vector> gens;
  int rank = a.ambient().rank();
  for (auto& c : k.generators) {
    Vector v = zero_vector(R, rank);
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j].is_zero()) continue;
      for (int i = 0; i < rank; ++i) v[i] = v[i] + c[j] * a.generators()[j][i];
    }
    gens.push_back(reduce_vector(*R, v));
  }
  return Submodule(R, a.ambient(), std::move(gens));
}

Submodule sum(const Submodule& a, const Submodule& b) {
  std::vector<Vector> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Submodule(a.ring(), a.ambient(), std::move(gens));
}

bool contains(const Submodule& big, const Submodule& small) {
  for (auto& g : small.generators())
    if (!big.contains(g)) return false;
  return true;
}

bool equal(const Submodule& a, const Submodule& b) { return contains(a, b) && contains(b, a); }

Submodule saturate(const Submodule& U) {
  Submodule cur = U;
  while (true) {
    Submodule next;
    for (int v = 0; v < cur.ring()->nvars(); ++v) {
      Submodule c = colon(cur, cur.ring()->var(v));
      next = v == 0 ? c : intersect(next, c);
    }
    if (contains(cur, next)) return cur;
    cur = sum(cur, next);
  }
}

Submodule relation_submodule(const ModulePresentation& M) {
  return Submodule(M.ring(), M.generators(), M.relations());
}

}  // namespace torsam
