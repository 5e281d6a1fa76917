#pragma once

#include <vector>

#include "torsam/field.hpp"

namespace torsam {

using Row = std::vector<Scalar>;

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Scalar at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Scalar* row(int r) { return data_.data() + static_cast<std::size_t>(r) * cols_; }
  const Scalar* row(int r) const { return data_.data() + static_cast<std::size_t>(r) * cols_; }
  Row column(int c) const;
  DenseMatrix transposed() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

// Rank kernels. The serial version is the reference; the OpenMP version
// splits row elimination below each pivot across threads.
int rank_serial(const PrimeField& f, DenseMatrix m);
int rank_parallel(const PrimeField& f, DenseMatrix m);
int rank_sparse(const PrimeField& f, const DenseMatrix& m);
// dense below 512 in both dimensions, sparse above
int rank(const PrimeField& f, const DenseMatrix& m);

Row apply(const PrimeField& f, const DenseMatrix& a, const Row& v);

// Subspace of F_p^n kept as a fully reduced echelon basis.
class RowSpace {
 public:
  RowSpace(const PrimeField& f, int n) : f_(f), n_(n) {}

  int ambient() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  Row reduce(Row v) const;
  bool contains(const Row& v) const;
  bool add(Row v);  // true if v was independent

 private:
  PrimeField f_;
  int n_;
  std::vector<Row> rows_;
  std::vector<int> pivots_;
};

// basis of { v : a v = 0 }
std::vector<Row> nullspace(const PrimeField& f, const DenseMatrix& a);
// basis of { v : a v in w }
std::vector<Row> preimage(const PrimeField& f, const DenseMatrix& a, const RowSpace& w);
RowSpace intersection(const PrimeField& f, const RowSpace& a, const RowSpace& b);
RowSpace span(const PrimeField& f, int n, const std::vector<Row>& vectors);
RowSpace column_space(const PrimeField& f, const DenseMatrix& a);

// Basis of a quotient Z / B (B inside Z) with coordinate extraction.
class QuotientBasis {
 public:
  QuotientBasis(const PrimeField& f, const RowSpace& B, const std::vector<Row>& z_vectors);
  int dim() const { return static_cast<int>(ext_.size()); }
  // coordinates of v (assumed in Z) modulo B
  Row coordinates(const Row& v) const;
  const std::vector<Row>& representatives() const { return ext_; }

 private:
  PrimeField f_;
  RowSpace B_;
  std::vector<Row> ext_;
  std::vector<int> ext_piv_;
};

}  // namespace torsam
