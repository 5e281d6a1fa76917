#include "torsam/groebner.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace torsam {

void sort_vec(ModVec& v, const ModuleOrder& ord, const PrimeField& f) {
  std::sort(v.begin(), v.end(), [&](const VTerm& a, const VTerm& b) {
    return ord.compare(a.pos, a.mono, b.pos, b.mono) > 0;
  });
  ModVec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().pos == t.pos && out.back().mono == t.mono)
      out.back().coeff = f.add(out.back().coeff, t.coeff);
    else
      out.push_back(t);
    if (out.back().coeff == 0) out.pop_back();
  }
  v.swap(out);
}

int weighted_degree(const ModVec& v, const ModuleOrder& ord) {
  if (v.empty()) return INT_MIN;
  return v.front().mono.deg + ord.degrees[v.front().pos];
}

bool is_homogeneous(const ModVec& v, const ModuleOrder& ord) {
  int d = weighted_degree(v, ord);
  for (auto& t : v)
    if (t.mono.deg + ord.degrees[t.pos] != d) return false;
  return true;
}

ModVec scale_vec(const ModVec& v, Scalar c, const PrimeField& f) {
  ModVec out;
  if (c == 0) return out;
  out.reserve(v.size());
  for (auto& t : v) out.push_back({t.mono, t.pos, f.mul(t.coeff, c)});
  return out;
}

ModVec mul_vec(const ModVec& v, const Monomial& m, Scalar c, const PrimeField& f) {
  ModVec out;
  if (c == 0) return out;
  out.reserve(v.size());
  for (auto& t : v) out.push_back({t.mono * m, t.pos, f.mul(t.coeff, c)});
  return out;
}

namespace {

// a[from..] + c * m * b, assuming m*b stays sorted (order is multiplicative)
ModVec merge_shifted(const ModVec& a, std::size_t from, const ModVec& b, std::size_t bfrom,
                     const Monomial& m, Scalar c, const ModuleOrder& ord, const PrimeField& f) {
  ModVec out;
  out.reserve(a.size() - from + b.size() - bfrom);
  std::size_t i = from, j = bfrom;
  bool have = false;
  VTerm bt{};
  auto load = [&] {
    if (j < b.size()) {
      bt = {b[j].mono * m, b[j].pos, f.mul(c, b[j].coeff)};
      have = true;
    } else {
      have = false;
    }
  };
  load();
  while (i < a.size() || have) {
    int cmp;
    if (i == a.size()) cmp = -1;
    else if (!have) cmp = 1;
    else cmp = ord.compare(a[i].pos, a[i].mono, bt.pos, bt.mono);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(bt);
      ++j;
      load();
    } else {
      Scalar s = f.add(a[i].coeff, bt.coeff);
      if (s != 0) out.push_back({a[i].mono, a[i].pos, s});
      ++i;
      ++j;
      load();
    }
  }
  return out;
}

struct LeadIndex {
  // per position: indices into basis
  std::vector<std::vector<int>> by_pos;
  const std::vector<ModVec>* basis = nullptr;

  void add(int idx) {
    int p = (*basis)[idx].front().pos;
    if (static_cast<int>(by_pos.size()) <= p) by_pos.resize(p + 1);
    by_pos[p].push_back(idx);
  }
  int find(int pos, const Monomial& m, int skip = -1) const {
    if (pos >= static_cast<int>(by_pos.size())) return -1;
    for (int idx : by_pos[pos]) {
      if (idx == skip) continue;
      if ((*basis)[idx].front().mono.divides(m)) return idx;
    }
    return -1;
  }
};

ModVec reduce_with(const ModVec& v, const std::vector<ModVec>& basis, const LeadIndex& index,
                   const ModuleOrder& ord, const PrimeField& f, int skip = -1) {
  ModVec cur = v;
  ModVec result;
  std::size_t start = 0;
  while (start < cur.size()) {
    const VTerm& t = cur[start];
    int r = index.find(t.pos, t.mono, skip);
    if (r < 0) {
      result.push_back(t);
      ++start;
      continue;
    }
    const ModVec& g = basis[r];
    Monomial m = t.mono.quotient(g.front().mono);
    Scalar c = f.neg(f.div(t.coeff, g.front().coeff));
    cur = merge_shifted(cur, start + 1, g, 1, m, c, ord, f);
    start = 0;
  }
  return result;
}

void make_monic(ModVec& v, const PrimeField& f) {
  if (v.empty() || v.front().coeff == 1) return;
  Scalar c = f.inv(v.front().coeff);
  for (auto& t : v) t.coeff = f.mul(t.coeff, c);
}

struct Pair {
  int i, j;
  Monomial lcm;
  int pos;
  int deg;
};

}  // namespace

ModVec add_vec(const ModVec& a, const ModVec& b, Scalar cb, const ModuleOrder& ord,
               const PrimeField& f) {
  return merge_shifted(a, 0, b, 0, Monomial::one(), cb, ord, f);
}

ModVec reduce_vec(const ModVec& v, const std::vector<ModVec>& basis, const ModuleOrder& ord,
                  const PrimeField& f) {
  LeadIndex index;
  index.basis = &basis;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!basis[i].empty()) index.add(static_cast<int>(i));
  return reduce_with(v, basis, index, ord, f);
}

GroebnerRun buchberger(const PrimeField& f, const ModuleOrder& ord, std::vector<GroebnerInput> inputs,
                       int degree_cap) {
  GroebnerRun run;
  run.degree_cap = degree_cap;
  run.kept.assign(inputs.size(), 0);

  std::vector<int> in_deg(inputs.size());
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    sort_vec(inputs[k].vec, ord, f);
    in_deg[k] = weighted_degree(inputs[k].vec, ord);
  }
  std::vector<int> in_order;
  for (std::size_t k = 0; k < inputs.size(); ++k)
    if (!inputs[k].vec.empty()) in_order.push_back(static_cast<int>(k));
  std::stable_sort(in_order.begin(), in_order.end(), [&](int a, int b) {
    if (in_deg[a] != in_deg[b]) return in_deg[a] < in_deg[b];
    return inputs[a].ambient && !inputs[b].ambient;
  });

  std::vector<ModVec> G;
  std::vector<char> single;  // element supported on one position only
  LeadIndex index;
  index.basis = &G;
  std::vector<Pair> pairs;

  auto coprime_ok = [&](const Pair& p) {
    return single[p.i] && single[p.j] && G[p.i].front().mono.coprime(G[p.j].front().mono);
  };

  auto add_element = [&](ModVec h) {
    make_monic(h, f);
    int hidx = static_cast<int>(G.size());
    bool one_pos = true;
    for (auto& t : h)
      if (t.pos != h.front().pos) one_pos = false;
    G.push_back(std::move(h));
    single.push_back(one_pos);
    index.add(hidx);
    const ModVec& hv = G[hidx];
    int hpos = hv.front().pos;
    const Monomial& hl = hv.front().mono;

    std::vector<Pair> C;
    if (hpos < static_cast<int>(index.by_pos.size()))
      for (int g : index.by_pos[hpos]) {
        if (g == hidx) continue;
        Monomial l = G[g].front().mono.lcm(hl);
        C.push_back({g, hidx, l, hpos, l.deg + ord.degrees[hpos]});
      }
    std::vector<Pair> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      const Pair& p = C[a];
      if (coprime_ok(p)) {
        D.push_back(p);
        continue;
      }
      bool divisible = false;
      for (std::size_t b = a + 1; b < C.size() && !divisible; ++b)
        if (C[b].lcm.divides(p.lcm)) divisible = true;
      for (std::size_t b = 0; b < D.size() && !divisible; ++b)
        if (D[b].lcm.divides(p.lcm)) divisible = true;
      if (!divisible) D.push_back(p);
    }
    std::vector<Pair> kept_pairs;
    kept_pairs.reserve(pairs.size());
    for (auto& p : pairs) {
      if (p.pos == hpos && hl.divides(p.lcm)) {
        Monomial l1 = G[p.i].front().mono.lcm(hl);
        Monomial l2 = G[p.j].front().mono.lcm(hl);
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) continue;
      }
      kept_pairs.push_back(p);
    }
    for (auto& p : D)
      if (!coprime_ok(p)) kept_pairs.push_back(p);
    pairs.swap(kept_pairs);
  };

  std::size_t next = 0;
  while (true) {
    int dp = INT_MAX;
    for (auto& p : pairs) dp = std::min(dp, p.deg);
    int di = next < in_order.size() ? in_deg[in_order[next]] : INT_MAX;
    int d = std::min(dp, di);
    if (d == INT_MAX) break;
    if (degree_cap >= 0 && d > degree_cap) {
      run.truncated = true;
      break;
    }
    while (true) {
      std::vector<Pair> now;
      std::vector<Pair> later;
      for (auto& p : pairs) (p.deg == d ? now : later).push_back(p);
      if (now.empty()) break;
      pairs.swap(later);
      std::sort(now.begin(), now.end(), [&](const Pair& a, const Pair& b) {
        int c = ord.compare(a.pos, a.lcm, b.pos, b.lcm);
        if (c != 0) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
      });
      for (auto& p : now) {
        const ModVec& gi = G[p.i];
        const ModVec& gj = G[p.j];
        Monomial ui = p.lcm.quotient(gi.front().mono);
        Monomial uj = p.lcm.quotient(gj.front().mono);
        // both monic: ui*gi - uj*gj, leading terms cancel
        ModVec s = merge_shifted(mul_vec(gi, ui, 1, f), 1, gj, 1, uj, f.neg(1), ord, f);
        ModVec r = reduce_with(s, G, index, ord, f);
        if (!r.empty()) add_element(std::move(r));
      }
    }
    while (next < in_order.size() && in_deg[in_order[next]] == d) {
      int k = in_order[next++];
      ModVec r = reduce_with(inputs[k].vec, G, index, ord, f);
      if (!r.empty()) {
        run.kept[k] = 1;
        add_element(std::move(r));
      }
    }
  }

  // leads are already minimal in the homogeneous setting; reduce tails
  std::vector<ModVec> reduced(G.size());
  for (std::size_t k = 0; k < G.size(); ++k) {
    ModVec tail(G[k].begin() + 1, G[k].end());
    ModVec r = reduce_with(tail, G, index, ord, f, static_cast<int>(k));
    reduced[k].reserve(r.size() + 1);
    reduced[k].push_back(G[k].front());
    reduced[k].insert(reduced[k].end(), r.begin(), r.end());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const ModVec& a, const ModVec& b) {
    return ord.compare(a.front().pos, a.front().mono, b.front().pos, b.front().mono) < 0;
  });
  run.basis = std::move(reduced);
  return run;
}

}  // namespace torsam
