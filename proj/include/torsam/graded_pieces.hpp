#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "torsam/linalg.hpp"
#include "torsam/module.hpp"

namespace torsam {

// Degreewise model of M = coker(A) over R: each M_e gets the basis of
// standard terms of a Groebner basis of im(A) + I*F, and elements of the
// cover map to coordinates by normal form.
class GradedPieces {
 public:
  struct BasisElem {
    int pos;
    Monomial mono;
  };
  using Sparse = std::vector<std::pair<int, Scalar>>;

  explicit GradedPieces(const ModulePresentation& M);

  const ModulePresentation& module() const { return M_; }
  const PrimeField& field() const { return M_.ring()->field(); }

  int dim(int e) const { return static_cast<int>(piece(e).elems.size()); }
  const std::vector<BasisElem>& basis(int e) const { return piece(e).elems; }

  // class of mono * e_pos, in degree deg(mono) + deg(e_pos)
  const Sparse& coordinates(int pos, const Monomial& mono) const;
  // class of a homogeneous cover element of degree e
  Row coordinates(const Vector& v, int e) const;
  // multiplication by a homogeneous f : M_e -> M_{e + deg f}
  DenseMatrix multiplication(const Poly& f, int e) const;

  // smallest generator degree; INT_MAX for the zero module
  int low_degree() const;
  int high_generator_degree() const;
  bool is_zero() const;
  bool finite_length() const;
  // highest nonzero degree, only for finite length; INT_MIN when M = 0
  int top_degree() const;

  const std::vector<ModVec>& groebner_basis() const { return basis_; }
  const ModuleOrder& order() const { return ord_; }

 private:
  struct Piece {
    std::vector<BasisElem> elems;
    std::unordered_map<std::size_t, std::vector<int>> index;  // hash -> candidates
  };
  const Piece& piece(int e) const;
  int find_index(const Piece& p, int pos, const Monomial& m) const;
  bool is_standard(int pos, const Monomial& m) const;

  ModulePresentation M_;
  ModuleOrder ord_;
  std::vector<ModVec> basis_;
  std::vector<std::vector<Monomial>> leads_;  // per position

  mutable std::mutex mu_;
  mutable std::map<int, std::unique_ptr<Piece>> pieces_;
  mutable std::unordered_map<std::size_t, std::vector<std::pair<std::pair<int, Monomial>, std::unique_ptr<Sparse>>>>
      coords_;
};

// (m^s M)_e as a subspace of M_e
RowSpace power_piece(const GradedPieces& X, int s, int e);

}  // namespace torsam
