#include "torsam/graded_pieces.hpp"

#include <climits>

#include "torsam/submodule.hpp"

namespace torsam {

namespace {
std::size_t key_hash(int pos, const Monomial& m) { return m.hash() * 31u + static_cast<std::size_t>(pos); }
}  // namespace

GradedPieces::GradedPieces(const ModulePresentation& M) : M_(M), ord_(top_order(M.generator_degrees())) {
  Submodule U = relation_submodule(M);
  basis_ = U.basis();
  leads_.resize(M.rank());
  for (auto& g : basis_) leads_[g.front().pos].push_back(g.front().mono);
}

bool GradedPieces::is_standard(int pos, const Monomial& m) const {
  for (auto& l : leads_[pos])
    if (l.divides(m)) return false;
  return true;
}

const GradedPieces::Piece& GradedPieces::piece(int e) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = pieces_.find(e);
  if (it != pieces_.end()) return *it->second;
  auto p = std::make_unique<Piece>();
  int n = M_.ring()->nvars();
  for (int pos = 0; pos < M_.rank(); ++pos) {
    int k = e - M_.generator_degrees()[pos];
    if (k < 0) continue;
    for (auto& m : monomials_of_degree(n, k))
      if (is_standard(pos, m)) {
        p->index[key_hash(pos, m)].push_back(static_cast<int>(p->elems.size()));
        p->elems.push_back({pos, m});
      }
  }
  return *pieces_.emplace(e, std::move(p)).first->second;
}

int GradedPieces::find_index(const Piece& p, int pos, const Monomial& m) const {
  auto it = p.index.find(key_hash(pos, m));
  if (it == p.index.end()) return -1;
  for (int idx : it->second)
    if (p.elems[idx].pos == pos && p.elems[idx].mono == m) return idx;
  return -1;
}

const GradedPieces::Sparse& GradedPieces::coordinates(int pos, const Monomial& mono) const {
  std::size_t h = key_hash(pos, mono);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = coords_.find(h);
    if (it != coords_.end())
      for (auto& entry : it->second)
        if (entry.first.first == pos && entry.first.second == mono) return *entry.second;
  }
  int e = mono.deg + M_.generator_degrees()[pos];
  const Piece& p = piece(e);
  auto out = std::make_unique<Sparse>();
  int direct = find_index(p, pos, mono);
  if (direct >= 0) {
    out->push_back({direct, 1});
  } else {
    ModVec v{{mono, pos, 1}};
    ModVec r = reduce_vec(v, basis_, ord_, field());
    for (auto& t : r) {
      int idx = find_index(p, t.pos, t.mono);
      if (idx < 0) throw Error("normal form left the standard basis");
      out->push_back({idx, t.coeff});
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto& bucket = coords_[h];
  for (auto& entry : bucket)
    if (entry.first.first == pos && entry.first.second == mono) return *entry.second;
  bucket.push_back({{pos, mono}, std::move(out)});
  return *bucket.back().second;
}

Row GradedPieces::coordinates(const Vector& v, int e) const {
  Row out(dim(e), 0);
  const PrimeField& f = field();
  for (std::size_t pos = 0; pos < v.size(); ++pos)
    for (auto& t : v[pos].terms()) {
      if (t.mono.deg + M_.generator_degrees()[pos] != e) throw Error("element is not of the requested degree");
      for (auto& [idx, c] : coordinates(static_cast<int>(pos), t.mono))
        out[idx] = f.add(out[idx], f.mul(c, t.coeff));
    }
  return out;
}

DenseMatrix GradedPieces::multiplication(const Poly& g, int e) const {
  int d = g.is_zero() ? 0 : g.degree();
  const auto& src = basis(e);
  DenseMatrix m(dim(e + d), static_cast<int>(src.size()));
  const PrimeField& f = field();
  for (std::size_t j = 0; j < src.size(); ++j)
    for (auto& t : g.terms())
      for (auto& [idx, c] : coordinates(src[j].pos, src[j].mono * t.mono))
        m.at(idx, static_cast<int>(j)) = f.add(m.at(idx, static_cast<int>(j)), f.mul(c, t.coeff));
  return m;
}

int GradedPieces::low_degree() const {
  int lo = INT_MAX;
  for (int d : M_.generator_degrees()) lo = std::min(lo, d);
  return lo;
}

int GradedPieces::high_generator_degree() const {
  int hi = INT_MIN;
  for (int d : M_.generator_degrees()) hi = std::max(hi, d);
  return hi;
}

bool GradedPieces::is_zero() const {
  for (int pos = 0; pos < M_.rank(); ++pos)
    if (is_standard(pos, Monomial::one())) return false;
  return true;
}

bool GradedPieces::finite_length() const {
  int n = M_.ring()->nvars();
  for (int pos = 0; pos < M_.rank(); ++pos) {
    if (!is_standard(pos, Monomial::one())) continue;
    for (int v = 0; v < n; ++v) {
      bool pure = false;
      for (auto& l : leads_[pos]) {
        if (l.deg == l.exp[v]) {
          pure = true;
          break;
        }
      }
      if (!pure) return false;
    }
  }
  return true;
}

int GradedPieces::top_degree() const {
  if (!finite_length()) throw Error("top degree requested for a module of positive dimension");
  int n = M_.ring()->nvars();
  int top = INT_MIN;
  for (int pos = 0; pos < M_.rank(); ++pos) {
    if (!is_standard(pos, Monomial::one())) continue;
    for (int k = 0;; ++k) {
      bool any = false;
      for (auto& m : monomials_of_degree(n, k))
        if (is_standard(pos, m)) {
          any = true;
          break;
        }
      if (!any) break;
      top = std::max(top, k + M_.generator_degrees()[pos]);
    }
  }
  return top;
}

static RowSpace full_space(const PrimeField& f, int n) {
  RowSpace s(f, n);
  for (int i = 0; i < n; ++i) {
    Row v(n, 0);
    v[i] = 1;
    s.add(std::move(v));
  }
  return s;
}

// (m^s N)_e inside N_e
RowSpace power_piece(const GradedPieces& X, int s, int e) {
  const PrimeField& f = X.field();
  int n = X.dim(e);
  RowSpace out(f, n);
  if (n == 0) return out;
  const auto& degs = X.module().generator_degrees();
  bool all = true;
  for (int a : degs)
    if (e - a >= 0 && e - a < s) all = false;
  if (all) return full_space(f, n);
  int nv = X.module().ring()->nvars();
  for (std::size_t j = 0; j < degs.size(); ++j) {
    int k = e - degs[j];
    if (k < s || k < 0) continue;
    for (auto& u : monomials_of_degree(nv, k)) {
      Row v(n, 0);
      for (auto& [idx, c] : X.coordinates(static_cast<int>(j), u)) v[idx] = c;
      out.add(std::move(v));
      if (out.dim() == n) return out;
    }
  }
  return out;
}

}  // namespace torsam
