#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "torsam/groebner.hpp"
#include "torsam/poly.hpp"

namespace torsam {

// Cached numerical invariants of a ring, filled by the resolution layer.
struct RingSummary {
  int dim = 0;
  int depth = 0;
  int embdim = 0;
  long long multiplicity = 0;
  std::vector<long long> hilbert_numerator;  // reduced, coefficient of z^k at index k
};

// R = P / I with I homogeneous, generated in degrees >= 2.
class GradedRing {
 public:
  static std::shared_ptr<const GradedRing> make(std::shared_ptr<const PolyRing> P,
                                                std::vector<Poly> relations);
  static std::shared_ptr<const GradedRing> polynomial(std::shared_ptr<const PolyRing> P) {
    return make(std::move(P), {});
  }

  const PolyRing& poly_ring() const { return *P_; }
  const PolyRing* ctx() const { return P_.get(); }
  const std::shared_ptr<const PolyRing>& poly_ring_ptr() const { return P_; }
  int nvars() const { return P_->nvars(); }
  const PrimeField& field() const { return P_->field(); }

  const std::vector<Poly>& relations() const { return relations_; }
  // reduced Groebner basis of I (grevlex)
  const std::vector<Poly>& ideal_basis() const { return basis_; }
  bool is_polynomial_ring() const { return basis_.empty(); }

  Poly reduce(const Poly& f) const;
  Poly var(int v) const { return Poly::variable(ctx(), v); }

  // grevlex-standard monomials of degree d, i.e. a basis of R_d
  const std::vector<Monomial>& standard_monomials(int d) const;
  long long hilbert_function(int d) const {
    return static_cast<long long>(standard_monomials(d).size());
  }

  // P viewed as a graded ring (the same object when I = 0)
  std::shared_ptr<const GradedRing> ambient() const;

  std::optional<RingSummary> summary() const;
  void set_summary(const RingSummary& s) const;

 private:
  GradedRing() = default;
  std::shared_ptr<const PolyRing> P_;
  std::vector<Poly> relations_;
  std::vector<Poly> basis_;
  std::vector<ModVec> basis_vecs_;
  std::shared_ptr<const GradedRing> ambient_;

  mutable std::mutex mu_;
  mutable std::map<int, std::vector<Monomial>> standard_;
  mutable std::optional<RingSummary> summary_;
};

using RingPtr = std::shared_ptr<const GradedRing>;

}  // namespace torsam
