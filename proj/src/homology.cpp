#include "torsam/homology.hpp"

#include <algorithm>
#include <climits>

#include "torsam/module_ops.hpp"
#include "torsam/submodule.hpp"

namespace torsam {

namespace {

std::vector<int> tensor_offsets(const FreeModule& F, const GradedPieces& X, int degree) {
  std::vector<int> off(F.rank() + 1, 0);
  for (int j = 0; j < F.rank(); ++j) off[j + 1] = off[j] + X.dim(degree - F.degrees[j]);
  return off;
}

std::vector<int> hom_offsets(const FreeModule& F, const GradedPieces& X, int degree) {
  std::vector<int> off(F.rank() + 1, 0);
  for (int j = 0; j < F.rank(); ++j) off[j + 1] = off[j] + X.dim(degree + F.degrees[j]);
  return off;
}

void paste(DenseMatrix& big, const DenseMatrix& block, int r0, int c0) {
  for (int r = 0; r < block.rows(); ++r)
    for (int c = 0; c < block.cols(); ++c)
      if (block.at(r, c) != 0) big.at(r0 + r, c0 + c) = block.at(r, c);
}

// Hom(F_j, M)_d -> Hom(F_{j+1}, M)_d induced by d : F_{j+1} -> F_j
DenseMatrix hom_differential(const GradedMatrix& d, const GradedPieces& X, int degree) {
  auto src = hom_offsets(d.target, X, degree);
  auto dst = hom_offsets(d.source, X, degree);
  DenseMatrix m(dst.back(), src.back());
  for (int k = 0; k < d.target.rank(); ++k)
    for (int kp = 0; kp < d.source.rank(); ++kp) {
      const Poly& p = d.entry(k, kp);
      if (p.is_zero() || src[k + 1] == src[k]) continue;
      paste(m, X.multiplication(p, degree + d.target.degrees[k]), dst[kp], src[k]);
    }
  return m;
}

// sum_j (m^s N)_{d - t_j} inside C(d)
RowSpace power_subcomplex(const FreeModule& F, const GradedPieces& X, int s, int d) {
  auto off = tensor_offsets(F, X, d);
  RowSpace out(X.field(), off.back());
  for (int j = 0; j < F.rank(); ++j) {
    RowSpace p = power_piece(X, s, d - F.degrees[j]);
    for (auto& r : p.rows()) {
      Row v(off.back(), 0);
      std::copy(r.begin(), r.end(), v.begin() + off[j]);
      out.add(std::move(v));
    }
  }
  return out;
}

std::vector<Row> unit_rows(int n) {
  std::vector<Row> out;
  for (int i = 0; i < n; ++i) {
    Row v(n, 0);
    v[i] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

// ----- module route

struct Layer {
  FreeModule cover;
  std::vector<Vector> relations;
};

Layer tensor_layer(const RingPtr& R, const FreeModule& F, const ModulePresentation& N) {
  Layer L;
  int rn = N.rank();
  for (int k = 0; k < F.rank(); ++k)
    for (int l = 0; l < rn; ++l) L.cover.degrees.push_back(F.degrees[k] + N.generator_degrees()[l]);
  for (int k = 0; k < F.rank(); ++k)
    for (auto& c : N.relations()) {
      Vector v = zero_vector(R, L.cover.rank());
      for (int l = 0; l < rn; ++l) v[k * rn + l] = c[l];
      L.relations.push_back(std::move(v));
    }
  return L;
}

// d : F_j -> F_{j-1}, tensored with N
std::vector<Vector> tensor_map(const RingPtr& R, const GradedMatrix& d, const ModulePresentation& N) {
  int rn = N.rank();
  int trank = d.target.rank() * rn;
  std::vector<Vector> cols;
  for (int k = 0; k < d.source.rank(); ++k)
    for (int l = 0; l < rn; ++l) {
      Vector v = zero_vector(R, trank);
      for (int kp = 0; kp < d.target.rank(); ++kp) v[kp * rn + l] = d.entry(kp, k);
      cols.push_back(std::move(v));
    }
  return cols;
}

Layer hom_layer(const RingPtr& R, const FreeModule& F, const ModulePresentation& M) {
  Layer L;
  int rm = M.rank();
  for (int k = 0; k < F.rank(); ++k)
    for (int l = 0; l < rm; ++l) L.cover.degrees.push_back(M.generator_degrees()[l] - F.degrees[k]);
  for (int k = 0; k < F.rank(); ++k)
    for (auto& c : M.relations()) {
      Vector v = zero_vector(R, L.cover.rank());
      for (int l = 0; l < rm; ++l) v[k * rm + l] = c[l];
      L.relations.push_back(std::move(v));
    }
  return L;
}

// Hom(F_j, M) -> Hom(F_{j+1}, M) induced by d : F_{j+1} -> F_j
std::vector<Vector> hom_map(const RingPtr& R, const GradedMatrix& d, const ModulePresentation& M) {
  int rm = M.rank();
  int trank = d.source.rank() * rm;
  std::vector<Vector> cols;
  for (int k = 0; k < d.target.rank(); ++k)
    for (int l = 0; l < rm; ++l) {
      Vector v = zero_vector(R, trank);
      for (int kp = 0; kp < d.source.rank(); ++kp) v[kp * rm + l] = d.entry(k, kp);
      cols.push_back(std::move(v));
    }
  return cols;
}

HilbertSeries homology_at(const RingPtr& R, const std::vector<Vector>* incoming, const Layer& cur,
                          const Layer* next, const std::vector<Vector>* outgoing) {
  HilbertSeries zero;
  if (cur.cover.rank() == 0) return zero;
  std::vector<Vector> zgens;
  if (next == nullptr || next->cover.rank() == 0) {
    for (int j = 0; j < cur.cover.rank(); ++j) zgens.push_back(unit_vector(R, cur.cover.rank(), j));
  } else {
    KernelResult k = kernel_mod(R, next->cover.degrees, *outgoing, cur.cover.degrees, next->relations, false);
    zgens = std::move(k.generators);
    zgens.insert(zgens.end(), cur.relations.begin(), cur.relations.end());
  }
  std::vector<Vector> bgens = cur.relations;
  if (incoming != nullptr) bgens.insert(bgens.end(), incoming->begin(), incoming->end());
  Submodule Z(R, cur.cover, std::move(zgens));
  Submodule B(R, cur.cover, std::move(bgens));
  HilbertSeries h = quotient_series(B) - quotient_series(Z);
  h.reduce();
  return h;
}

}  // namespace

int tensor_dim(const FreeModule& F, const GradedPieces& X, int degree) {
  return tensor_offsets(F, X, degree).back();
}

DenseMatrix tensor_differential(const GradedMatrix& d, const GradedPieces& X, int degree) {
  auto src = tensor_offsets(d.source, X, degree);
  auto dst = tensor_offsets(d.target, X, degree);
  DenseMatrix m(dst.back(), src.back());
  for (int j = 0; j < d.source.rank(); ++j) {
    if (src[j + 1] == src[j]) continue;
    for (int k = 0; k < d.target.rank(); ++k) {
      const Poly& p = d.entry(k, j);
      if (p.is_zero()) continue;
      paste(m, X.multiplication(p, degree - d.source.degrees[j]), dst[k], src[j]);
    }
  }
  return m;
}

std::map<int, long long> tor_by_degree(const FreeComplex& F, const GradedPieces& X, int i) {
  std::map<int, long long> out;
  if (X.is_zero()) return out;
  if (!F.computed(i)) {
    if (F.terminated) return out;
    throw Inconclusive("resolution not computed to index " + std::to_string(i));
  }
  if (F.modules[i].rank() == 0) return out;
  if (!F.complete(i)) throw Inconclusive("resolution truncated in internal degree at index " + std::to_string(i));
  int lo = X.low_degree(), top = X.top_degree();
  int fmin = INT_MAX, fmax = INT_MIN;
  for (int t : F.modules[i].degrees) {
    fmin = std::min(fmin, t);
    fmax = std::max(fmax, t);
  }
  bool have_next = F.computed(i + 1);
  if (!have_next && !F.terminated)
    throw Inconclusive("resolution not computed to index " + std::to_string(i + 1));
  if (have_next && F.exact_through[i + 1] < fmax + top - lo)
    throw Inconclusive("degree bound too small for index " + std::to_string(i + 1));
  bool next_nonzero = have_next && F.modules[i + 1].rank() > 0;

  std::vector<int> degrees;
  for (int d = fmin + lo; d <= fmax + top; ++d) degrees.push_back(d);
  std::vector<long long> h(degrees.size(), 0);
  const PrimeField& f = X.field();
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    int d = degrees[k];
    long long dim = tensor_dim(F.modules[i], X, d);
    if (dim == 0) continue;
    long long r_out = i >= 1 ? rank(f, tensor_differential(F.differential(i), X, d)) : 0;
    long long r_in = next_nonzero ? rank(f, tensor_differential(F.differential(i + 1), X, d)) : 0;
    h[k] = dim - r_out - r_in;
  }
  for (std::size_t k = 0; k < degrees.size(); ++k)
    if (h[k] != 0) out[degrees[k]] = h[k];
  return out;
}

long long tor_length_degreewise(const FreeComplex& F, const GradedPieces& X, int i) {
  long long total = 0;
  for (auto& [d, v] : tor_by_degree(F, X, i)) total += v;
  return total;
}

long long tor_length(const ModulePresentation& M, const ModulePresentation& X, int i) {
  GradedPieces pieces(X);
  if (!pieces.finite_length()) throw Error("tor_length: second argument must have finite length");
  FreeComplex F = minimal_resolution(M, i + 1);
  return tor_length_degreewise(F, pieces, i);
}

HilbertSeries tor_series(const ModulePresentation& M, const ModulePresentation& N, int i) {
  const RingPtr& R = M.ring();
  FreeComplex F = minimal_resolution(M, i + 1);
  if (!F.computed(i)) return HilbertSeries{};
  Layer cur = tensor_layer(R, F.modules[i], N);
  std::vector<Vector> incoming, outgoing;
  Layer next;
  bool has_in = F.computed(i + 1) && F.modules[i + 1].rank() > 0;
  if (has_in) incoming = tensor_map(R, F.differential(i + 1), N);
  if (i >= 1) {
    next = tensor_layer(R, F.modules[i - 1], N);
    outgoing = tensor_map(R, F.differential(i), N);
  }
  return homology_at(R, has_in ? &incoming : nullptr, cur, i >= 1 ? &next : nullptr, &outgoing);
}

HilbertSeries ext_series(const ModulePresentation& A, const ModulePresentation& M, int i) {
  const RingPtr& R = M.ring();
  FreeComplex F = minimal_resolution(A, i + 1);
  if (!F.computed(i)) return HilbertSeries{};
  Layer cur = hom_layer(R, F.modules[i], M);
  std::vector<Vector> incoming, outgoing;
  Layer next;
  bool has_next = F.computed(i + 1) && F.modules[i + 1].rank() > 0;
  if (has_next) {
    next = hom_layer(R, F.modules[i + 1], M);
    outgoing = hom_map(R, F.differential(i + 1), M);
  }
  if (i >= 1) incoming = hom_map(R, F.differential(i), M);
  return homology_at(R, i >= 1 ? &incoming : nullptr, cur, has_next ? &next : nullptr, &outgoing);
}

std::optional<long long> tor_length_general(const ModulePresentation& M, const ModulePresentation& N, int i) {
  return tor_series(M, N, i).length();
}

bool tor_vanishes(const ModulePresentation& M, const ModulePresentation& N, int i) {
  return tor_series(M, N, i).is_zero();
}

long long ext_bass(const ModulePresentation& M, int i) {
  auto len = ext_series(ModulePresentation::residue_field(M.ring()), M, i).length();
  if (!len) throw Error("Ext(k, M) reported positive dimension");
  return *len;
}

WindowResult ext_bass_window(const ModulePresentation& M, int i, int lo, int hi) {
  WindowResult res;
  res.lo = lo;
  res.hi = hi;
  FreeComplex K = minimal_resolution(ModulePresentation::residue_field(M.ring()), i + 1);
  GradedPieces X(M);
  const PrimeField& f = M.ring()->field();
  std::vector<long long> h(hi - lo + 1, 0);
  if (K.computed(i) && K.modules[i].rank() > 0) {
    bool has_next = K.computed(i + 1) && K.modules[i + 1].rank() > 0;
#pragma omp parallel for schedule(dynamic)
    for (int d = lo; d <= hi; ++d) {
      long long dim = hom_offsets(K.modules[i], X, d).back();
      if (dim == 0) continue;
      long long r_out = has_next ? rank(f, hom_differential(K.differential(i + 1), X, d)) : 0;
      long long r_in = i >= 1 ? rank(f, hom_differential(K.differential(i), X, d)) : 0;
      h[d - lo] = dim - r_out - r_in;
    }
  }
  for (auto v : h) res.length += v;
  res.certified = h.front() == 0 && h.back() == 0;
  return res;
}

long long hom_length(const ModulePresentation& L, const ModulePresentation& Xp) {
  GradedPieces X(Xp);
  if (!X.finite_length()) throw Error("hom_length: second argument must have finite length");
  if (X.is_zero()) return 0;
  FreeComplex F = minimal_resolution(L, 1);
  if (F.modules[0].rank() == 0) return 0;
  int lo = X.low_degree(), top = X.top_degree();
  int tmin = INT_MAX, tmax = INT_MIN;
  for (int t : F.modules[0].degrees) {
    tmin = std::min(tmin, t);
    tmax = std::max(tmax, t);
  }
  bool has_next = F.computed(1) && F.modules[1].rank() > 0;
  const PrimeField& f = X.field();
  long long total = 0;
  for (int d = lo - tmax; d <= top - tmin; ++d) {
    long long dim = hom_offsets(F.modules[0], X, d).back();
    long long r = has_next ? rank(f, hom_differential(F.differential(1), X, d)) : 0;
    total += dim - r;
  }
  return total;
}

int ring_depth(const RingPtr& R) {
  if (auto s = R->summary()) return s->depth;
  return depth(ModulePresentation::free(R, {0}));
}

bool is_gorenstein(const RingPtr& R) {
  ModulePresentation Rm = ModulePresentation::free(R, {0});
  int d = ring_depth(R);
  int dim = hilbert_series(Rm).dimension();
  if (d != dim) return false;
  return ext_bass(Rm, d) == 1;
}

bool projdim_finite(const ModulePresentation& M) {
  int d = ring_depth(M.ring());
  FreeComplex F = minimal_resolution(M, d + 1);
  return !F.computed(d + 1) || F.modules[d + 1].rank() == 0;
}

InjdimVerdict injdim_finite(const ModulePresentation& M, int gap, std::optional<bool> gorenstein) {
  InjdimVerdict v;
  v.gap = gap;
  const RingPtr& R = M.ring();
  if (gorenstein ? *gorenstein : is_gorenstein(R)) {
    v.method = "gorenstein";
    v.finite = projdim_finite(M);
    return v;
  }
  v.method = "gap-probe";
  int d = ring_depth(R);
  v.finite = true;
  for (int i = d + 1; i <= d + gap; ++i) {
    long long mu = ext_bass(M, i);
    v.bass.push_back(mu);
    if (mu != 0) {
      v.finite = false;
      return v;
    }
  }
  // vanishing over a finite window does not prove finiteness
  v.heuristic = true;
  return v;
}

bool InducedMapReport::all_injective() const {
  return std::all_of(injective.begin(), injective.end(), [](char c) { return c != 0; });
}

InducedMapReport induced_tor_map(const ModulePresentation& N, int n, int i_max) {
  const RingPtr& R = N.ring();
  const PrimeField& f = R->field();
  InducedMapReport rep;
  rep.n = n;
  rep.i_max = i_max;
  rep.injective.assign(i_max + 1, 1);
  FreeComplex K = minimal_resolution(ModulePresentation::residue_field(R), i_max + 1);
  FreeComplex FN = minimal_resolution(N, i_max);
  GradedPieces X(N);
  for (int i = 0; i <= i_max; ++i) {
    if (!K.computed(i)) break;
    for (auto& [d, cnt] : FN.graded_betti(i)) {
      (void)cnt;
      int dim = tensor_dim(K.modules[i], X, d);
      std::vector<Row> z;
      std::vector<Row> zpp;
      DenseMatrix out;
      if (i >= 1) {
        out = tensor_differential(K.differential(i), X, d);
        z = nullspace(f, out);
        RowSpace W_prev = power_subcomplex(K.modules[i - 1], X, n + 1, d);
        zpp = preimage(f, out, W_prev);
      } else {
        z = unit_rows(dim);
        zpp = z;
      }
      RowSpace B(f, dim);
      if (K.computed(i + 1) && K.modules[i + 1].rank() > 0) B = column_space(f, tensor_differential(K.differential(i + 1), X, d));
      RowSpace Bpp = B;
      RowSpace Wi = power_subcomplex(K.modules[i], X, n + 1, d);
      for (auto& r : Wi.rows()) Bpp.add(r);
      QuotientBasis H(f, B, z), Hp(f, Bpp, zpp);
      InducedMapBlock blk;
      blk.i = i;
      blk.degree = d;
      blk.source_dim = H.dim();
      blk.target_dim = Hp.dim();
      blk.matrix = DenseMatrix(Hp.dim(), H.dim());
      for (int c = 0; c < H.dim(); ++c) {
        Row co = Hp.coordinates(H.representatives()[c]);
        for (int r = 0; r < Hp.dim(); ++r) blk.matrix.at(r, c) = co[r];
      }
      blk.rank = rank_serial(f, blk.matrix);
      if (blk.rank != blk.source_dim) rep.injective[i] = 0;
      rep.blocks.push_back(std::move(blk));
    }
  }
  return rep;
}

bool inclusion_map_vanishes(const ModulePresentation& N, int s, int i_max) {
  const RingPtr& R = N.ring();
  const PrimeField& f = R->field();
  ModulePresentation Ms = power_module(N, s);
  if (Ms.rank() == 0) return true;
  FreeComplex Fs = minimal_resolution(Ms, i_max);
  FreeComplex K = minimal_resolution(ModulePresentation::residue_field(R), i_max + 1);
  GradedPieces X(N);
  for (int i = 0; i <= i_max; ++i) {
    if (!K.computed(i)) break;
    for (auto& [d, cnt] : Fs.graded_betti(i)) {
      (void)cnt;
      int dim = tensor_dim(K.modules[i], X, d);
      RowSpace Ws = power_subcomplex(K.modules[i], X, s, d);
      if (Ws.dim() == 0) continue;
      // cycles inside the smaller subcomplex
      std::vector<Row> zs;
      if (i >= 1) {
        DenseMatrix out = tensor_differential(K.differential(i), X, d);
        DenseMatrix restricted(out.rows(), Ws.dim());
        for (int c = 0; c < Ws.dim(); ++c) {
          Row img = apply(f, out, Ws.rows()[c]);
          for (int r = 0; r < out.rows(); ++r) restricted.at(r, c) = img[r];
        }
        for (auto& x : nullspace(f, restricted)) {
          Row v(dim, 0);
          for (int c = 0; c < Ws.dim(); ++c) {
            if (x[c] == 0) continue;
            for (int k = 0; k < dim; ++k) v[k] = f.add(v[k], f.mul(x[c], Ws.rows()[c][k]));
          }
          zs.push_back(std::move(v));
        }
      } else {
        zs = Ws.rows();
      }
      // boundaries of the larger subcomplex
      RowSpace B(f, dim);
      if (K.computed(i + 1) && K.modules[i + 1].rank() > 0) {
        DenseMatrix in = tensor_differential(K.differential(i + 1), X, d);
        RowSpace W1 = power_subcomplex(K.modules[i + 1], X, s - 1, d);
        for (auto& w : W1.rows()) B.add(apply(f, in, w));
      }
      for (auto& z : zs)
        if (!B.contains(z)) return false;
    }
  }
  return true;
}

Family residue_powers(const RingPtr&) {
  Family fam;
  fam.kind = FamilyKind::quotient_ring;
  fam.description = "R/m^(n+1)";
  return fam;
}

ModulePresentation family_member(const Family& fam, const RingPtr& R, int n) {
  switch (fam.kind) {
    case FamilyKind::quotient_ring:
      return quotient_by_ideal_power(R, fam.ideal, n + 1);
    case FamilyKind::quotient_module:
      return quotient_by_power(*fam.module, n + 1);
    case FamilyKind::power_module:
      return power_module(*fam.module, n + 1);
  }
  throw Error("unknown family");
}

long long TorTable::at(int i, int n) const {
  for (std::size_t k = 0; k < i_values.size(); ++k)
    if (i_values[k] == i) return lengths[k].at(n);
  throw Error("index not in table");
}

TorTable tor_table(const ModulePresentation& M, const Family& fam, const std::vector<int>& i_values, int n_max) {
  TorTable t;
  t.i_values = i_values;
  t.n_max = n_max;
  t.family = fam.description;
  int imax = 0;
  for (int i : i_values) imax = std::max(imax, i);
  t.resolution_index = imax + 1;
  FreeComplex F = minimal_resolution(M, imax + 1);
  t.lengths.assign(i_values.size(), std::vector<long long>(n_max + 1, 0));
  for (int n = 0; n <= n_max; ++n) {
    ModulePresentation X = family_member(fam, M.ring(), n);
    GradedPieces pieces(X);
    bool finite = pieces.finite_length();
    for (std::size_t k = 0; k < i_values.size(); ++k) {
      if (finite) {
        t.lengths[k][n] = tor_length_degreewise(F, pieces, i_values[k]);
      } else {
        auto len = tor_length_general(M, X, i_values[k]);
        if (!len) throw Error("Tor in the family is not of finite length");
        t.lengths[k][n] = *len;
      }
    }
  }
  return t;
}

}  // namespace torsam
