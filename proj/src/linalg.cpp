#include "torsam/linalg.hpp"

#include <algorithm>
#include <map>

namespace torsam {

Row DenseMatrix::column(int c) const {
  Row out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

namespace {

// eliminate column `col` from rows [from, rows) using pivot row `prow` (pivot == 1)
inline void eliminate_row(const PrimeField& f, DenseMatrix& m, int prow, int r, int col) {
  Scalar factor = m.at(r, col);
  if (factor == 0) return;
  Scalar neg = f.neg(factor);
  const Scalar* p = m.row(prow);
  Scalar* q = m.row(r);
  for (int c = col; c < m.cols(); ++c)
    if (p[c] != 0) q[c] = f.add(q[c], f.mul(neg, p[c]));
}

inline int find_and_normalize(const PrimeField& f, DenseMatrix& m, int rank, int col) {
  int piv = -1;
  for (int r = rank; r < m.rows(); ++r)
    if (m.at(r, col) != 0) {
      piv = r;
      break;
    }
  if (piv < 0) return -1;
  if (piv != rank)
    for (int c = 0; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(rank, c));
  Scalar inv = f.inv(m.at(rank, col));
  for (int c = col; c < m.cols(); ++c) m.at(rank, c) = f.mul(m.at(rank, c), inv);
  return rank;
}

}  // namespace

int rank_serial(const PrimeField& f, DenseMatrix m) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    if (find_and_normalize(f, m, rank, col) < 0) continue;
    for (int r = rank + 1; r < m.rows(); ++r) eliminate_row(f, m, rank, r, col);
    ++rank;
  }
  return rank;
}

int rank_parallel(const PrimeField& f, DenseMatrix m) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    if (find_and_normalize(f, m, rank, col) < 0) continue;
    const int rows = m.rows();
    const int prow = rank;
#pragma omp parallel for schedule(static) if (rows - prow > 64)
    for (int r = prow + 1; r < rows; ++r) eliminate_row(f, m, prow, r, col);
    ++rank;
  }
  return rank;
}

int rank_sparse(const PrimeField& f, const DenseMatrix& m) {
  using SRow = std::vector<std::pair<int, Scalar>>;
  std::map<int, SRow> pivot_rows;  // leading column -> monic row
  for (int r = 0; r < m.rows(); ++r) {
    SRow cur;
    for (int c = 0; c < m.cols(); ++c)
      if (m.at(r, c) != 0) cur.push_back({c, m.at(r, c)});
    while (!cur.empty()) {
      auto it = pivot_rows.find(cur.front().first);
      if (it == pivot_rows.end()) {
        Scalar inv = f.inv(cur.front().second);
        for (auto& e : cur) e.second = f.mul(e.second, inv);
        pivot_rows.emplace(cur.front().first, std::move(cur));
        break;
      }
      Scalar neg = f.neg(cur.front().second);
      const SRow& p = it->second;
      SRow next;
      next.reserve(cur.size() + p.size());
      std::size_t i = 0, j = 0;
      while (i < cur.size() || j < p.size()) {
        if (j == p.size() || (i < cur.size() && cur[i].first < p[j].first)) {
          next.push_back(cur[i++]);
        } else if (i == cur.size() || p[j].first < cur[i].first) {
          next.push_back({p[j].first, f.mul(neg, p[j].second)});
          ++j;
        } else {
          Scalar s = f.add(cur[i].second, f.mul(neg, p[j].second));
          if (s != 0) next.push_back({cur[i].first, s});
          ++i;
          ++j;
        }
      }
      cur.swap(next);
    }
  }
  return static_cast<int>(pivot_rows.size());
}

int rank(const PrimeField& f, const DenseMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.rows() < 512 && m.cols() < 512) return rank_parallel(f, m);
  return rank_sparse(f, m);
}

Row apply(const PrimeField& f, const DenseMatrix& a, const Row& v) {
  Row out(a.rows(), 0);
  for (int c = 0; c < a.cols(); ++c) {
    if (v[c] == 0) continue;
    for (int r = 0; r < a.rows(); ++r)
      if (a.at(r, c) != 0) out[r] = f.add(out[r], f.mul(a.at(r, c), v[c]));
  }
  return out;
}

Row RowSpace::reduce(Row v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Scalar c = v[pivots_[k]];
    if (c == 0) continue;
    Scalar neg = f_.neg(c);
    const Row& b = rows_[k];
    for (int i = 0; i < n_; ++i)
      if (b[i] != 0) v[i] = f_.add(v[i], f_.mul(neg, b[i]));
  }
  return v;
}

bool RowSpace::contains(const Row& v) const {
  Row r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Scalar s) { return s == 0; });
}

bool RowSpace::add(Row v) {
  v = reduce(std::move(v));
  int piv = -1;
  for (int i = 0; i < n_; ++i)
    if (v[i] != 0) {
      piv = i;
      break;
    }
  if (piv < 0) return false;
  Scalar inv = f_.inv(v[piv]);
  for (auto& x : v) x = f_.mul(x, inv);
  for (auto& b : rows_) {
    Scalar c = b[piv];
    if (c == 0) continue;
    Scalar neg = f_.neg(c);
    for (int i = 0; i < n_; ++i)
      if (v[i] != 0) b[i] = f_.add(b[i], f_.mul(neg, v[i]));
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

std::vector<Row> nullspace(const PrimeField& f, const DenseMatrix& a) {
  // reduced row echelon form
  DenseMatrix m = a;
  std::vector<int> pivcols;
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    if (find_and_normalize(f, m, rank, col) < 0) continue;
    for (int r = 0; r < m.rows(); ++r)
      if (r != rank) eliminate_row(f, m, rank, r, col);
    pivcols.push_back(col);
    ++rank;
  }
  std::vector<char> is_piv(m.cols(), 0);
  for (int c : pivcols) is_piv[c] = 1;
  std::vector<Row> out;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_piv[free]) continue;
    Row v(m.cols(), 0);
    v[free] = 1;
    for (int k = 0; k < rank; ++k) v[pivcols[k]] = f.neg(m.at(k, free));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Row> preimage(const PrimeField& f, const DenseMatrix& a, const RowSpace& w) {
  DenseMatrix residue(a.rows(), a.cols());
  for (int c = 0; c < a.cols(); ++c) {
    Row r = w.reduce(a.column(c));
    for (int i = 0; i < a.rows(); ++i) residue.at(i, c) = r[i];
  }
  return nullspace(f, residue);
}

RowSpace span(const PrimeField& f, int n, const std::vector<Row>& vectors) {
  RowSpace s(f, n);
  for (auto& v : vectors) s.add(v);
  return s;
}

RowSpace column_space(const PrimeField& f, const DenseMatrix& a) {
  RowSpace s(f, a.rows());
  for (int c = 0; c < a.cols(); ++c) s.add(a.column(c));
  return s;
}

RowSpace intersection(const PrimeField& f, const RowSpace& a, const RowSpace& b) {
  int n = a.ambient();
  DenseMatrix res(n, a.dim());
  for (int k = 0; k < a.dim(); ++k) {
    Row r = b.reduce(a.rows()[k]);
    for (int i = 0; i < n; ++i) res.at(i, k) = r[i];
  }
  RowSpace out(f, n);
  for (auto& x : nullspace(f, res)) {
    Row v(n, 0);
    for (int k = 0; k < a.dim(); ++k) {
      if (x[k] == 0) continue;
      for (int i = 0; i < n; ++i) v[i] = f.add(v[i], f.mul(x[k], a.rows()[k][i]));
    }
    out.add(std::move(v));
  }
  return out;
}

QuotientBasis::QuotientBasis(const PrimeField& f, const RowSpace& B, const std::vector<Row>& z)
    : f_(f), B_(B) {
  for (auto& v : z) {
    Row r = B_.reduce(v);
    // reduce against existing extension rows
    for (std::size_t k = 0; k < ext_.size(); ++k) {
      Scalar c = r[ext_piv_[k]];
      if (c == 0) continue;
      Scalar neg = f_.neg(c);
      for (std::size_t i = 0; i < r.size(); ++i)
        if (ext_[k][i] != 0) r[i] = f_.add(r[i], f_.mul(neg, ext_[k][i]));
    }
    int piv = -1;
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i] != 0) {
        piv = static_cast<int>(i);
        break;
      }
    if (piv < 0) continue;
    Scalar inv = f_.inv(r[piv]);
    for (auto& x : r) x = f_.mul(x, inv);
    for (auto& e : ext_) {
      Scalar c = e[piv];
      if (c == 0) continue;
      Scalar neg = f_.neg(c);
      for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] != 0) e[i] = f_.add(e[i], f_.mul(neg, r[i]));
    }
    ext_.push_back(std::move(r));
    ext_piv_.push_back(piv);
  }
}

Row QuotientBasis::coordinates(const Row& v) const {
  Row r = B_.reduce(v);
  Row coords(ext_.size(), 0);
  for (std::size_t k = 0; k < ext_.size(); ++k) coords[k] = r[ext_piv_[k]];
  return coords;
}

}  // namespace torsam
