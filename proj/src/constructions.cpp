#include "torsam/constructions.hpp"

#include <algorithm>

#include "torsam/homology.hpp"
#include "torsam/invariants.hpp"
#include "torsam/resolution.hpp"

namespace torsam {

namespace {

Poly transplant(const Poly& p, const PolyRing* target) { return Poly(target, p.terms()); }

std::vector<std::string> fresh_names(const std::vector<std::string>& taken, int t) {
  for (std::string stem : {"y", "w", "u", "v"}) {
    std::vector<std::string> out;
    if (t == 1) {
      out.push_back(stem);
    } else {
      for (int i = 1; i <= t; ++i) out.push_back(stem + std::to_string(i));
    }
    bool clash = false;
    for (auto& n : out)
      if (std::find(taken.begin(), taken.end(), n) != taken.end()) clash = true;
    if (!clash) return out;
  }
  throw Error("could not name the new variables");
}

}  // namespace

TrivialExtension trivial_extension(const RingPtr& S, const ModulePresentation& L0) {
  if (L0.ring() != S) throw Error("trivial_extension: module over a different ring");
  ModulePresentation L = minimal_presentation(L0);
  for (int d : L.generator_degrees())
    if (d != 0) throw Error("trivial_extension: L must be generated in degree 0");
  int t = L.rank();
  int n = S->nvars();
  if (n + t > kMaxVars) throw Error("trivial_extension: too many variables");
  TrivialExtension ext;
  ext.S = S;
  ext.L = L;
  std::vector<std::string> names = S->poly_ring().names();
  ext.y_names = t > 0 ? fresh_names(names, t) : std::vector<std::string>{};
  names.insert(names.end(), ext.y_names.begin(), ext.y_names.end());
  auto P = std::make_shared<const PolyRing>(S->field(), names);
  std::vector<Poly> rels;
  for (auto& f : S->relations()) rels.push_back(transplant(f, P.get()));
  for (int i = 0; i < t; ++i)
    for (int j = i; j < t; ++j) rels.push_back(Poly::variable(P.get(), n + i) * Poly::variable(P.get(), n + j));
  for (auto& c : L.relations()) {
    Poly r(P.get());
    for (int l = 0; l < t; ++l) r = r + transplant(c[l], P.get()) * Poly::variable(P.get(), n + l);
    if (!r.is_zero()) rels.push_back(r);
  }
  ext.R = GradedRing::make(P, rels);
  std::vector<Vector> yrel;
  for (int l = 0; l < t; ++l) yrel.push_back({Poly::variable(P.get(), n + l)});
  ext.S_over_R = ModulePresentation(ext.R, {0}, std::move(yrel));
  return ext;
}

NonCMExample noncm_example(int p, int q, PrimeField f) {
  if (q < 1 || p < 0 || p > q - 1) throw Error("noncm_example needs 0 <= p <= q - 1");
  std::vector<std::string> names;
  for (int i = 1; i <= q; ++i) names.push_back("x" + std::to_string(i));
  auto P = std::make_shared<const PolyRing>(f, names);
  RingPtr S = GradedRing::make(P, {});
  std::vector<Vector> rels;
  for (int v = p + 1; v < q; ++v) rels.push_back({Poly::variable(P.get(), v)});
  NonCMExample ex;
  ex.p = p;
  ex.q = q;
  ex.ext = trivial_extension(S, ModulePresentation(S, {0}, std::move(rels)));
  return ex;
}

std::vector<Tor1IdentityRow> tor1_identity_check(const TrivialExtension& ext, int n_max) {
  TorTable t = tor_table(ext.S_over_R, residue_powers(ext.R), {1}, n_max);
  std::vector<Tor1IdentityRow> out;
  HilbertSamuel hs(ext.L);
  for (int n = 0; n <= n_max; ++n) {
    Tor1IdentityRow row;
    row.n = n;
    row.tor_length = t.at(1, n);
    row.graded_rank = hs.value(n) - (n > 0 ? hs.value(n - 1) : 0);
    out.push_back(row);
  }
  return out;
}

Hypersurface hypersurface(const Poly& f) {
  if (f.is_zero() || !f.is_homogeneous() || f.degree() < 2)
    throw Error("hypersurface: need a homogeneous form of degree at least 2");
  Hypersurface h;
  auto P = std::shared_ptr<const PolyRing>(std::make_shared<PolyRing>(*f.ring()));
  h.R = GradedRing::make(P, {Poly(P.get(), f.terms())});
  h.multiplicity = f.degree();
  return h;
}

Poly HyperplaneSection::map(const Poly& f) const {
  const PolyRing* T = S->ctx();
  const PrimeField& fld = T->field();
  // the eliminated variable becomes -(l - c v) / c
  Scalar c = 0;
  std::vector<Term> rest;
  for (auto& t : form.terms()) {
    if (t.mono[eliminated] == 1) {
      c = t.coeff;
    } else {
      int v = 0;
      while (t.mono[v] == 0) ++v;
      rest.push_back({Monomial::variable(v > eliminated ? v - 1 : v), t.coeff});
    }
  }
  Poly image = Poly(T, rest).scaled(fld.neg(fld.inv(c)));
  Poly out(T);
  for (auto& t : f.terms()) {
    std::vector<int> e;
    for (int v = 0; v < R->nvars(); ++v)
      if (v != eliminated) e.push_back(t.mono[v]);
    Poly term = Poly::monomial(T, Monomial::from_exponents(e), t.coeff);
    if (t.mono[eliminated] > 0) term = term * image.pow(t.mono[eliminated]);
    out = out + term;
  }
  return out;
}

HyperplaneSection hyperplane_section(const RingPtr& R, const Poly& l) {
  if (l.is_zero() || !l.is_homogeneous() || l.degree() != 1) throw Error("hyperplane_section: need a linear form");
  if (R->nvars() < 2) throw Error("hyperplane_section: need at least two variables");
  HyperplaneSection h;
  h.R = R;
  h.form = l;
  // eliminate the last variable that occurs in l
  for (auto& t : l.terms())
    for (int v = 0; v < R->nvars(); ++v)
      if (t.mono[v] == 1) h.eliminated = std::max(h.eliminated, v);
  std::vector<std::string> names;
  for (int v = 0; v < R->nvars(); ++v)
    if (v != h.eliminated) names.push_back(R->poly_ring().names()[v]);
  auto P = std::make_shared<const PolyRing>(R->field(), names);
  h.S = GradedRing::make(P, {});
  std::vector<Poly> rels;
  for (auto& f : R->relations()) {
    Poly g = h.map(f);
    if (!g.is_zero()) rels.push_back(g);
  }
  h.S = GradedRing::make(P, rels);
  return h;
}

ModulePresentation restrict_module(const HyperplaneSection& h, const ModulePresentation& M) {
  if (M.ring() != h.R) throw Error("restrict_module: module over a different ring");
  std::vector<Vector> rels;
  for (auto& c : M.relations()) {
    Vector v;
    for (auto& p : c) v.push_back(h.map(p));
    if (!vector_is_zero(v)) rels.push_back(std::move(v));
  }
  return ModulePresentation(h.S, M.generator_degrees(), std::move(rels));
}

}  // namespace torsam
