#include "torsam/invariants.hpp"

#include <algorithm>
#include <climits>

#include "torsam/fitter.hpp"
#include "torsam/module_ops.hpp"

namespace torsam {

RingSummary ring_summary(const RingPtr& R) {
  if (auto s = R->summary()) return *s;
  ModulePresentation Rm = ModulePresentation::free(R, {0});
  HilbertSeries h = hilbert_series(Rm);
  RingSummary s;
  s.dim = h.dimension();
  s.depth = depth(Rm);
  s.embdim = R->nvars();
  s.multiplicity = h.multiplicity();
  s.hilbert_numerator = h.numerator;
  R->set_summary(s);
  return s;
}

DepthDim depth_dim(const ModulePresentation& M) {
  HilbertSeries h = hilbert_series(M);
  if (h.is_zero()) throw Error("depth and dimension of the zero module");
  return {depth(M), h.dimension()};
}

HilbertSamuel::HilbertSamuel(const ModulePresentation& M0) {
  ModulePresentation M = minimal_presentation(M0);
  whole_ = hilbert_series(M);
  if (M.rank() == 0 || whole_.is_zero()) {
    poly_ = {Rational(0)};
    return;
  }
  const auto& degs = M.generator_degrees();
  a_min_ = *std::min_element(degs.begin(), degs.end());
  a_max_ = *std::max_element(degs.begin(), degs.end());
  int ri = whole_.regularity_index();
  for (int delta = a_min_; delta < a_max_; ++delta) {
    std::vector<Vector> gens;
    for (int j = 0; j < M.rank(); ++j)
      if (degs[j] <= delta) gens.push_back(unit_vector(M.ring(), M.rank(), j));
    HilbertSeries h = hilbert_series(image_module(M, gens));
    if (!h.is_zero()) ri = std::max(ri, h.regularity_index());
    partial_[delta] = h;
  }
  int n_start = std::max(0, ri - a_min_);
  int d = whole_.dimension();
  std::vector<long long> vals;
  for (int k = 0; k <= d + 1; ++k) vals.push_back(value(n_start + k));
  poly_ = interpolate(n_start, std::vector<long long>(vals.begin(), vals.end() - 1));
  if (eval_polynomial(poly_, n_start + d + 1) != Rational(vals.back()))
    throw Error("Hilbert-Samuel values are not polynomial where expected");
  post_ = n_start;
  while (post_ > 0 && eval_polynomial(poly_, post_ - 1) == Rational(value(post_ - 1))) --post_;
}

long long HilbertSamuel::value(int n) const {
  if (whole_.is_zero()) return 0;
  long long v = 0;
  for (int e = a_min_; e <= n + a_min_; ++e) v += whole_.value(e);
  for (auto& [delta, h] : partial_) v += whole_.value(n + 1 + delta) - h.value(n + 1 + delta);
  return v;
}

long long hs_function(const ModulePresentation& M, int n) { return HilbertSamuel(M).value(n); }
int postulation_number(const ModulePresentation& M) { return HilbertSamuel(M).postulation_number(); }

namespace {

// colon subspaces of M_e computed degreewise
class ColonChecker {
 public:
  ColonChecker(const Poly& x, const ModulePresentation& M) : X_(M), x_(x), f_(M.ring()->field()) {
    const auto& degs = M.generator_degrees();
    if (!degs.empty()) {
      a_min_ = *std::min_element(degs.begin(), degs.end());
      a_max_ = *std::max_element(degs.begin(), degs.end());
    }
  }

  bool empty() const { return X_.is_zero(); }

  // (m^{n+1}M : x) = m^n M
  bool equal(int n) {
    if (empty()) return true;
    for (int e = a_min_; e < n + a_max_; ++e) {
      const RowSpace& Pn = power(n, e);
      for (auto& q : colon(n, e))
        if (!Pn.contains(q)) return false;
    }
    return true;
  }

  // (m^{n+1}M : x) ∩ m^c M = m^n M, for n >= c
  bool equal_within(int c, int n) {
    if (empty()) return true;
    for (int e = a_min_; e < n + a_max_; ++e) {
      const RowSpace& Pn = power(n, e);
      int dim = X_.dim(e);
      RowSpace Q = span(f_, dim, colon(n, e));
      RowSpace both = intersection(f_, Q, power(c, e));
      for (auto& q : both.rows())
        if (!Pn.contains(q)) return false;
    }
    return true;
  }

 private:
  const RowSpace& power(int k, int e) {
    auto key = std::make_pair(k, e);
    auto it = pow_.find(key);
    if (it == pow_.end()) it = pow_.emplace(key, power_piece(X_, k, e)).first;
    return it->second;
  }
  const std::vector<Row>& colon(int n, int e) {
    auto key = std::make_pair(n, e);
    auto it = colon_.find(key);
    if (it == colon_.end()) {
      DenseMatrix mult = X_.multiplication(x_, e);
      it = colon_.emplace(key, preimage(f_, mult, power(n + 1, e + 1))).first;
    }
    return it->second;
  }

  GradedPieces X_;
  Poly x_;
  PrimeField f_;
  int a_min_ = 0, a_max_ = 0;
  std::map<std::pair<int, int>, RowSpace> pow_;
  std::map<std::pair<int, int>, std::vector<Row>> colon_;
};

}  // namespace

bool colon_equals_power(const Poly& x, const ModulePresentation& M, int n) { return ColonChecker(x, M).equal(n); }

SuperficialCheck is_superficial(const Poly& x, const ModulePresentation& M, int n_max) {
  if (!x.is_zero() && (!x.is_homogeneous() || x.degree() != 1)) throw Error("superficial elements are linear forms here");
  SuperficialCheck r;
  r.n_max = n_max;
  ColonChecker chk(x, M);
  for (int c = 0; c <= n_max - 1; ++c) {
    bool ok = true;
    for (int n = c; n <= n_max && ok; ++n) ok = chk.equal_within(c, n);
    if (ok) {
      r.superficial = true;
      r.c = c;
      return r;
    }
  }
  return r;
}

Poly random_linear_form(const RingPtr& R, std::mt19937_64& rng) {
  const PrimeField& f = R->field();
  while (true) {
    std::vector<Term> terms;
    for (int v = 0; v < R->nvars(); ++v) {
      Scalar c = static_cast<Scalar>(rng() % f.characteristic());
      if (c != 0) terms.push_back({Monomial::variable(v), c});
    }
    Poly x(R->ctx(), terms);
    if (!x.is_zero()) return x;
  }
}

SuperficialSearch find_superficial(const std::vector<ModulePresentation>& targets, int trials, std::uint64_t seed,
                                   int n_max) {
  if (targets.empty()) throw Error("find_superficial: no targets");
  std::mt19937_64 rng(seed);
  const RingPtr& R = targets.front().ring();
  std::string failing;
  for (int t = 1; t <= trials; ++t) {
    Poly x = random_linear_form(R, rng);
    bool ok = true;
    for (std::size_t j = 0; j < targets.size() && ok; ++j) {
      ok = is_superficial(x, targets[j], n_max).superficial;
      if (!ok) failing = "target " + std::to_string(j);
    }
    if (ok) return {x, t, seed};
  }
  throw Error("no superficial element found in " + std::to_string(trials) + " trials (" + failing + " failed)");
}

int rho(const Poly& x, const ModulePresentation& M, int n_max) {
  ColonChecker chk(x, M);
  if (!chk.equal(n_max)) throw Inconclusive("colon equality fails at n_max = " + std::to_string(n_max));
  int r = n_max;
  while (r > 0 && chk.equal(r - 1)) --r;
  return r;
}

std::optional<int> polyreg(const ModulePresentation& M0) {
  ModulePresentation M = minimal_presentation(M0);
  if (M.rank() == 0) return std::nullopt;
  const auto& degs = M.generator_degrees();
  for (int d : degs)
    if (d != degs.front()) return std::nullopt;
  return regularity(M) - degs.front();
}

IndexResult avramov_index(const ModulePresentation& N, int i_max, int n_max) {
  IndexResult r;
  r.i_max = i_max;
  r.bound = n_max;
  for (int n = 0; n <= n_max; ++n)
    if (induced_tor_map(N, n, i_max).all_injective()) {
      r.value = n;
      return r;
    }
  throw Inconclusive("no injective map for n <= " + std::to_string(n_max));
}

IndexResult levin_index(const ModulePresentation& N, int i_max, int s_max) {
  IndexResult r;
  r.i_max = i_max;
  r.bound = s_max;
  if (!inclusion_map_vanishes(N, s_max, i_max)) throw Inconclusive("inclusion map nonzero at s_max = " + std::to_string(s_max));
  int n = s_max;
  while (n > 1 && inclusion_map_vanishes(N, n - 1, i_max)) --n;
  r.value = n;
  return r;
}

}  // namespace torsam
