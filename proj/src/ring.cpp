#include "torsam/ring.hpp"

#include "torsam/groebner.hpp"

namespace torsam {

namespace {

ModVec poly_to_vec(const Poly& p) {
  ModVec v;
  v.reserve(p.size());
  for (auto& t : p.terms()) v.push_back({t.mono, 0, t.coeff});
  return v;
}

Poly vec_to_poly(const ModVec& v, const PolyRing* ring) {
  std::vector<Term> terms;
  for (auto& t : v) terms.push_back({t.mono, t.coeff});
  return Poly(ring, std::move(terms));
}

const ModuleOrder& rank_one_order() {
  static const ModuleOrder ord{{0}, 0, false};
  return ord;
}

}  // namespace

std::shared_ptr<const GradedRing> GradedRing::make(std::shared_ptr<const PolyRing> P,
                                                   std::vector<Poly> relations) {
  std::shared_ptr<GradedRing> R(new GradedRing());
  R->P_ = P;
  for (auto& f : relations) {
    if (f.is_zero()) continue;
    if (f.ring() != nullptr && !f.ring()->same_as(*P)) throw Error("relation from a different ring");
    if (!f.is_homogeneous()) throw Error("relation is not homogeneous: " + f.to_string());
    if (f.degree() < 2) throw Error("relations must have degree at least 2: " + f.to_string());
    R->relations_.push_back(Poly(P.get(), f.terms()));
  }
  if (!R->relations_.empty()) {
    std::vector<GroebnerInput> in;
    for (auto& f : R->relations_) in.push_back({poly_to_vec(f), false});
    GroebnerRun run = buchberger(P->field(), rank_one_order(), std::move(in));
    for (auto& g : run.basis) R->basis_.push_back(vec_to_poly(g, P.get()));
    R->basis_vecs_ = std::move(run.basis);
    R->ambient_ = polynomial(P);
  }
  return R;
}

std::shared_ptr<const GradedRing> GradedRing::ambient() const {
  if (ambient_) return ambient_;
  // no relations: this ring is its own ambient; rebuild a handle sharing P
  return make(P_, {});
}

Poly GradedRing::reduce(const Poly& f) const {
  if (basis_.empty() || f.is_zero()) return Poly(ctx(), f.terms());
  return vec_to_poly(reduce_vec(poly_to_vec(f), basis_vecs_, rank_one_order(), field()), ctx());
}

const std::vector<Monomial>& GradedRing::standard_monomials(int d) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = standard_.find(d);
  if (it != standard_.end()) return it->second;
  std::vector<Monomial> out;
  if (d >= 0) {
    for (auto& m : monomials_of_degree(nvars(), d)) {
      bool standard = true;
      for (auto& g : basis_)
        if (g.lead().mono.divides(m)) {
          standard = false;
          break;
        }
      if (standard) out.push_back(m);
    }
  }
  return standard_.emplace(d, std::move(out)).first->second;
}

std::optional<RingSummary> GradedRing::summary() const {
  std::lock_guard<std::mutex> lock(mu_);
  return summary_;
}

void GradedRing::set_summary(const RingSummary& s) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!summary_) summary_ = s;
}

}  // namespace torsam
