#pragma once

// Brute-force degreewise linear algebra over the ambient polynomial ring.
// Nothing here touches Groebner bases: graded pieces are spans of monomial
// multiples written out in monomial coordinates.

#include <algorithm>
#include <map>
#include <unordered_map>
#include <vector>

#include "torsam/graded_pieces.hpp"
#include "torsam/linalg.hpp"
#include "torsam/module.hpp"
#include "torsam/resolution.hpp"

namespace oracle {

using namespace torsam;

class Monos {
 public:
  explicit Monos(int nvars) : n_(nvars) {}
  const std::vector<Monomial>& of(int d) {
    auto it = list_.find(d);
    if (it != list_.end()) return it->second;
    auto& l = list_[d];
    if (d >= 0) l = monomials_of_degree(n_, d);
    auto& ix = index_[d];
    for (int i = 0; i < static_cast<int>(l.size()); ++i) ix[l[i]] = i;
    return l;
  }
  int index(const Monomial& m) {
    of(m.deg);
    return index_[m.deg].at(m);
  }
  int nvars() const { return n_; }

 private:
  int n_;
  std::map<int, std::vector<Monomial>> list_;
  std::map<int, std::unordered_map<Monomial, int, MonomialHash>> index_;
};

// coordinates of a free module over P in one degree
struct Block {
  std::vector<int> degrees;
  std::vector<int> offsets;
  int size = 0;
  Block(const std::vector<int>& degs, int e, Monos& m) : degrees(degs) {
    for (int t : degs) {
      offsets.push_back(size);
      size += e - t >= 0 ? static_cast<int>(m.of(e - t).size()) : 0;
    }
  }
};

inline Row coords(const Vector& v, const Block& b, Monos& m, const PrimeField&) {
  Row r(b.size, 0);
  for (std::size_t j = 0; j < v.size(); ++j)
    for (auto& t : v[j].terms()) r[b.offsets[j] + m.index(t.mono)] = t.coeff;
  return r;
}

// span of { u * g : g in gens, deg u = e - deg g } inside the degree-e block
inline RowSpace span_in_degree(const std::vector<Vector>& gens, const std::vector<int>& gen_degs,
                               const Block& b, int e, Monos& m, const PrimeField& f) {
  RowSpace s(f, b.size);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    int k = e - gen_degs[g];
    if (k < 0) continue;
    for (auto& u : m.of(k)) {
      Vector w;
      for (auto& p : gens[g]) w.push_back(p.times_monomial(u));
      s.add(coords(w, b, m, f));
    }
  }
  return s;
}

// I * F for the ring relations, as generators
inline std::pair<std::vector<Vector>, std::vector<int>> ideal_times_free(const RingPtr& R,
                                                                           const std::vector<int>& degs) {
  std::vector<Vector> g;
  std::vector<int> d;
  for (std::size_t j = 0; j < degs.size(); ++j)
    for (auto& f : R->relations()) {
      Vector v = zero_vector(R, static_cast<int>(degs.size()));
      v[j] = f;
      g.push_back(v);
      d.push_back(degs[j] + f.degree());
    }
  return {g, d};
}

// A free resolution over R (not necessarily minimal at F_1), with kernel
// generators found degree by degree up to max_degree.
struct Resolution {
  std::vector<std::vector<int>> degrees;        // F_0, F_1, ...
  std::vector<std::vector<Vector>> maps;        // maps[i-1]: images of F_i generators in F_{i-1}
};

inline Resolution resolve(const ModulePresentation& M, int length, int max_degree) {
  const RingPtr& R = M.ring();
  const PrimeField& f = R->field();
  Monos mon(R->nvars());
  Resolution res;
  res.degrees.push_back(M.generator_degrees());
  {
    // minimal subset of the relations, degree by degree
    const PrimeField& fl = R->field();
    auto [iF, iF_d] = ideal_times_free(R, M.generator_degrees());
    std::vector<std::size_t> order(M.relations().size());
    for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return M.relation_degrees()[a] < M.relation_degrees()[b]; });
    std::vector<Vector> kept;
    std::vector<int> kept_d;
    for (std::size_t j : order) {
      int e = M.relation_degrees()[j];
      if (e > max_degree) continue;
      Block b(M.generator_degrees(), e, mon);
      RowSpace s = span_in_degree(kept, kept_d, b, e, mon, fl);
      RowSpace ib = span_in_degree(iF, iF_d, b, e, mon, fl);
      for (auto& r : ib.rows()) s.add(r);
      if (s.contains(coords(M.relations()[j], b, mon, fl))) continue;
      kept.push_back(M.relations()[j]);
      kept_d.push_back(e);
    }
    res.degrees.push_back(kept_d);
    res.maps.push_back(kept);
  }
  for (int i = 2; i <= length; ++i) {
    const auto& src = res.degrees[i - 1];
    const auto& tgt = res.degrees[i - 2];
    const auto& dmap = res.maps[i - 2];
    std::vector<Vector> gens;
    std::vector<int> gdegs;
    auto [isrc, isrc_d] = ideal_times_free(R, src);
    auto [itgt, itgt_d] = ideal_times_free(R, tgt);
    int e0 = src.empty() ? 0 : *std::min_element(src.begin(), src.end());
    for (int e = e0; e <= max_degree; ++e) {
      Block bs(src, e, mon), bt(tgt, e, mon);
      if (bs.size == 0) continue;
      RowSpace Is = span_in_degree(isrc, isrc_d, bs, e, mon, f);
      RowSpace It = span_in_degree(itgt, itgt_d, bt, e, mon, f);
      // map each source monomial basis vector into the target modulo I
      DenseMatrix A(bt.size, bs.size);
      for (std::size_t j = 0; j < src.size(); ++j) {
        int k = e - src[j];
        if (k < 0) continue;
        const auto& us = mon.of(k);
        for (std::size_t a = 0; a < us.size(); ++a) {
          Vector w;
          for (auto& p : dmap[j]) w.push_back(p.times_monomial(us[a]));
          Row r = It.reduce(coords(w, bt, mon, f));
          for (int x = 0; x < bt.size; ++x) A.at(x, bs.offsets[j] + static_cast<int>(a)) = r[x];
        }
      }
      // kernel modulo I*F_src
      std::vector<Row> ker = preimage(f, A, RowSpace(f, bt.size));
      RowSpace have = span_in_degree(gens, gdegs, bs, e, mon, f);
      for (auto& r : Is.rows()) have.add(r);
      for (auto& z : ker) {
        if (have.contains(z)) continue;
        have.add(z);
        Vector v = zero_vector(R, static_cast<int>(src.size()));
        for (std::size_t j = 0; j < src.size(); ++j) {
          int k = e - src[j];
          if (k < 0) continue;
          const auto& us = mon.of(k);
          std::vector<Term> terms;
          for (std::size_t a = 0; a < us.size(); ++a) {
            Scalar c = z[bs.offsets[j] + a];
            if (c != 0) terms.push_back({us[a], c});
          }
          v[j] = Poly(R->ctx(), terms);
        }
        gens.push_back(v);
        gdegs.push_back(e);
      }
    }
    res.degrees.push_back(gdegs);
    res.maps.push_back(gens);
  }
  return res;
}

// dim Tor_i(M, X)_d from a resolution of M, for d in [lo, hi]
inline std::map<int, long long> tor_by_degree(const Resolution& F, const ModulePresentation& X, int i, int lo,
                                               int hi) {
  const RingPtr& R = X.ring();
  const PrimeField& f = R->field();
  Monos mon(R->nvars());
  std::map<int, long long> out;
  auto [iX, iX_d] = ideal_times_free(R, X.generator_degrees());
  std::vector<Vector> xrel = X.relations();
  std::vector<int> xrel_d = X.relation_degrees();
  xrel.insert(xrel.end(), iX.begin(), iX.end());
  xrel_d.insert(xrel_d.end(), iX_d.begin(), iX_d.end());
  const auto& xd = X.generator_degrees();
  int rX = X.rank();

  // C~_j(d) = sum_k cover(X)_{d - t_k};  W~_j = sum_k relations(X)_{d - t_k}
  struct Piece {
    std::vector<int> off;
    int size = 0;
    std::vector<Block> blocks;
    RowSpace W;
  };
  auto piece = [&](int j, int d) {
    Piece p{{}, 0, {}, RowSpace(f, 0)};
    if (j < 0 || j >= static_cast<int>(F.degrees.size())) return p;
    for (int t : F.degrees[j]) {
      p.off.push_back(p.size);
      p.blocks.emplace_back(xd, d - t, mon);
      p.size += p.blocks.back().size;
    }
    p.W = RowSpace(f, p.size);
    for (std::size_t k = 0; k < F.degrees[j].size(); ++k) {
      RowSpace w = span_in_degree(xrel, xrel_d, p.blocks[k], d - F.degrees[j][k], mon, f);
      for (auto& r : w.rows()) {
        Row full(p.size, 0);
        std::copy(r.begin(), r.end(), full.begin() + p.off[k]);
        p.W.add(full);
      }
    }
    return p;
  };
  // matrix of d_j : C~_j(d) -> C~_{j-1}(d)
  auto diff = [&](int j, const Piece& src, const Piece& tgt, int d) {
    DenseMatrix A(tgt.size, src.size);
    const auto& cols = F.maps[j - 1];
    for (std::size_t k = 0; k < F.degrees[j].size(); ++k) {
      int e = d - F.degrees[j][k];
      for (int l = 0; l < rX; ++l) {
        int m = e - xd[l];
        if (m < 0) continue;
        const auto& us = mon.of(m);
        for (std::size_t a = 0; a < us.size(); ++a) {
          Row col(tgt.size, 0);
          for (std::size_t kp = 0; kp < F.degrees[j - 1].size(); ++kp) {
            Poly q = cols[k][kp].times_monomial(us[a]);
            for (auto& t : q.terms()) {
              int idx = tgt.off[kp] + tgt.blocks[kp].offsets[l] + mon.index(t.mono);
              col[idx] = f.add(col[idx], t.coeff);
            }
          }
          int c = src.off[k] + src.blocks[k].offsets[l] + static_cast<int>(a);
          for (int r = 0; r < tgt.size; ++r) A.at(r, c) = col[r];
        }
      }
    }
    return A;
  };
  for (int d = lo; d <= hi; ++d) {
    Piece ci = piece(i, d);
    if (ci.size == 0) continue;
    // cycles: preimage of W~_{i-1}; boundaries: image of d_{i+1} plus W~_i
    long long zdim;
    if (i >= 1) {
      Piece cm = piece(i - 1, d);
      zdim = static_cast<long long>(preimage(f, diff(i, ci, cm, d), cm.W).size());
    } else {
      zdim = ci.size;
    }
    RowSpace B = ci.W;
    if (i + 1 < static_cast<int>(F.degrees.size())) {
      Piece cp = piece(i + 1, d);
      if (cp.size > 0) {
        DenseMatrix D = diff(i + 1, cp, ci, d);
        for (int c = 0; c < D.cols(); ++c) B.add(D.column(c));
      }
    }
    long long h = zdim - B.dim();
    if (h != 0) out[d] = h;
  }
  return out;
}

// dim of the degree-e piece of M, by brute force
inline long long piece_dim(const ModulePresentation& M, int e) {
  const RingPtr& R = M.ring();
  Monos mon(R->nvars());
  auto [iM, iM_d] = ideal_times_free(R, M.generator_degrees());
  std::vector<Vector> rel = M.relations();
  std::vector<int> rel_d = M.relation_degrees();
  rel.insert(rel.end(), iM.begin(), iM.end());
  rel_d.insert(rel_d.end(), iM_d.begin(), iM_d.end());
  Block b(M.generator_degrees(), e, mon);
  return b.size - span_in_degree(rel, rel_d, b, e, mon, R->field()).dim();
}

// the library supplies only the degree bound; beyond it Tor vanishes
inline int support_bound(const ModulePresentation& M, const ModulePresentation& X, int i) {
  auto F = minimal_resolution(M, i + 1);
  return F.max_generator_degree(i) + GradedPieces(X).top_degree();
}

inline long long tor_length(const ModulePresentation& M, const ModulePresentation& X, int i) {
  int hi = support_bound(M, X, i);
  auto F = resolve(M, i + 1, hi);
  long long total = 0;
  for (auto& [d, v] : tor_by_degree(F, X, i, -10, hi)) total += v;
  return total;
}

}  // namespace oracle
