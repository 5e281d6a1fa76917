#include "torsam/hilbert.hpp"

#include <algorithm>
#include <climits>

namespace torsam {

namespace {

long long binom(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// polynomial product, coefficient lists
std::vector<Rational> pmul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

using Num = std::vector<long long>;

Num num_add(const Num& a, const Num& b, long long sign, int bshift) {
  Num out(std::max(a.size(), b.size() + bshift), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i + bshift] += sign * b[i];
  return out;
}

void minimalize(std::vector<Monomial>& g) {
  std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return compare_grevlex(a, b) < 0;
  });
  std::vector<Monomial> out;
  for (auto& m : g) {
    bool redundant = false;
    for (auto& o : out)
      if (o.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  g.swap(out);
}

Num numerator_rec(std::vector<Monomial> g) {
  minimalize(g);
  if (g.empty()) return {1};
  // pairwise coprime: product of (1 - z^deg)
  int shared_var = -1, best = 0;
  for (int v = 0; v < kMaxVars; ++v) {
    int cnt = 0;
    for (auto& m : g)
      if (m.exp[v] > 0) ++cnt;
    if (cnt >= 2 && cnt > best) {
      best = cnt;
      shared_var = v;
    }
  }
  if (shared_var < 0) {
    Num acc{1};
    for (auto& m : g) acc = num_add(acc, acc, -1, m.deg);
    return acc;
  }
  Monomial p = Monomial::variable(shared_var);
  std::vector<Monomial> plus;
  for (auto& m : g)
    if (m.exp[shared_var] == 0) plus.push_back(m);
  plus.push_back(p);
  std::vector<Monomial> quot;
  for (auto& m : g) {
    Monomial q = m;
    if (q.exp[shared_var] > 0) {
      --q.exp[shared_var];
      --q.deg;
    }
    quot.push_back(q);
  }
  return num_add(numerator_rec(plus), numerator_rec(quot), 1, 1);
}

}  // namespace

std::vector<long long> monomial_numerator(std::vector<Monomial> gens) { return numerator_rec(std::move(gens)); }

void HilbertSeries::reduce() {
  while (!numerator.empty() && numerator.back() == 0) numerator.pop_back();
  while (!numerator.empty() && numerator.front() == 0) {
    numerator.erase(numerator.begin());
    ++shift;
  }
  if (numerator.empty()) {
    shift = 0;
    pole_order = 0;
    return;
  }
  while (pole_order > 0) {
    long long at_one = 0;
    for (auto c : numerator) at_one += c;
    if (at_one != 0) break;
    // divide by (1 - z): q_k = sum_{i<=k} a_i
    Num q(numerator.size() - 1);
    long long run = 0;
    for (std::size_t k = 0; k + 1 < numerator.size(); ++k) {
      run += numerator[k];
      q[k] = run;
    }
    numerator.swap(q);
    --pole_order;
    while (!numerator.empty() && numerator.back() == 0) numerator.pop_back();
  }
}

bool HilbertSeries::is_zero() const {
  return std::all_of(numerator.begin(), numerator.end(), [](long long c) { return c == 0; });
}

long long HilbertSeries::value(int e) const {
  long long v = 0;
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    long long m = static_cast<long long>(e) - shift - static_cast<long long>(k);
    if (m < 0) continue;
    if (pole_order == 0)
      v += m == 0 ? numerator[k] : 0;
    else
      v += numerator[k] * binom(m + pole_order - 1, pole_order - 1);
  }
  return v;
}

int HilbertSeries::dimension() const {
  HilbertSeries h = *this;
  h.reduce();
  if (h.is_zero()) return -1;
  return h.pole_order;
}

long long HilbertSeries::multiplicity() const {
  HilbertSeries h = *this;
  h.reduce();
  long long s = 0;
  for (auto c : h.numerator) s += c;
  return s;
}

std::vector<Rational> HilbertSeries::polynomial() const {
  HilbertSeries h = *this;
  h.reduce();
  std::vector<Rational> out{Rational(0)};
  if (h.pole_order == 0) return out;
  int d = h.pole_order;
  long long fact = 1;
  for (int i = 2; i <= d - 1; ++i) fact *= i;
  for (std::size_t k = 0; k < h.numerator.size(); ++k) {
    long long s = h.shift + static_cast<long long>(k);
    // C(e - s + d - 1, d - 1) = prod_{i=1}^{d-1} (e - s + i) / (d-1)!
    std::vector<Rational> term{Rational(1)};
    for (int i = 1; i <= d - 1; ++i) term = pmul(term, {Rational(i - s), Rational(1)});
    if (out.size() < term.size()) out.resize(term.size(), Rational(0));
    for (std::size_t j = 0; j < term.size(); ++j) out[j] += term[j] * Rational(h.numerator[k], fact);
  }
  while (out.size() > 1 && out.back() == Rational(0)) out.pop_back();
  return out;
}

Rational eval_polynomial(const std::vector<Rational>& c, long long x) {
  Rational acc(0);
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * Rational(x) + c[k];
  return acc;
}

int HilbertSeries::regularity_index() const {
  HilbertSeries h = *this;
  h.reduce();
  if (h.is_zero()) return INT_MIN;
  if (h.pole_order == 0) return h.top_numerator_degree() + 1;
  auto poly = h.polynomial();
  int e = h.top_numerator_degree() - h.pole_order + 1;
  // below the support the function is 0 and the polynomial has finitely many roots
  while (Rational(h.value(e - 1)) == eval_polynomial(poly, e - 1)) --e;
  return e;
}

std::optional<long long> HilbertSeries::length() const {
  HilbertSeries h = *this;
  h.reduce();
  if (h.pole_order > 0) return std::nullopt;
  long long s = 0;
  for (auto c : h.numerator) s += c;
  return s;
}

HilbertSeries HilbertSeries::shifted(int s) const {
  HilbertSeries h = *this;
  h.shift += s;
  return h;
}

HilbertSeries HilbertSeries::operator+(const HilbertSeries& o) const {
  HilbertSeries a = *this, b = o;
  // bring to a common pole order by multiplying with (1-z)
  auto raise = [](HilbertSeries& h, int target) {
    while (h.pole_order < target) {
      h.numerator = num_add(h.numerator, h.numerator, -1, 1);
      ++h.pole_order;
    }
  };
  int d = std::max(a.pole_order, b.pole_order);
  raise(a, d);
  raise(b, d);
  if (a.numerator.empty()) return b;
  if (b.numerator.empty()) return a;
  int s = std::min(a.shift, b.shift);
  HilbertSeries out;
  out.shift = s;
  out.pole_order = d;
  out.numerator = num_add(Num(a.numerator.size() + (a.shift - s), 0), a.numerator, 1, a.shift - s);
  out.numerator = num_add(out.numerator, b.numerator, 1, b.shift - s);
  out.reduce();
  return out;
}

HilbertSeries HilbertSeries::operator-(const HilbertSeries& o) const {
  HilbertSeries neg = o;
  for (auto& c : neg.numerator) c = -c;
  return *this + neg;
}

bool HilbertSeries::operator==(const HilbertSeries& o) const {
  HilbertSeries a = *this, b = o;
  a.reduce();
  b.reduce();
  return a.numerator == b.numerator && a.shift == b.shift && a.pole_order == b.pole_order;
}

HilbertSeries quotient_series(const Submodule& U) {
  int r = U.ambient().rank();
  int n = U.ring()->nvars();
  std::vector<std::vector<Monomial>> leads(r);
  for (auto& g : U.basis()) leads[g.front().pos].push_back(g.front().mono);
  HilbertSeries total;
  total.pole_order = n;
  for (int p = 0; p < r; ++p) {
    HilbertSeries h;
    h.numerator = monomial_numerator(leads[p]);
    h.shift = U.ambient().degrees[p];
    h.pole_order = n;
    total = total + h;
  }
  total.reduce();
  return total;
}

HilbertSeries hilbert_series(const ModulePresentation& M) {
  FreeComplex F = ambient_resolution(M);
  int lo = INT_MAX, hi = INT_MIN;
  for (int i = 0; i <= F.length(); ++i)
    for (int d : F.modules[i].degrees) {
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  HilbertSeries h;
  h.pole_order = M.ring()->nvars();
  if (lo == INT_MAX) {
    h.pole_order = 0;
    return h;
  }
  h.shift = lo;
  h.numerator.assign(hi - lo + 1, 0);
  for (int i = 0; i <= F.length(); ++i)
    for (int d : F.modules[i].degrees) h.numerator[d - lo] += (i % 2 == 0) ? 1 : -1;
  h.reduce();
  return h;
}

}  // namespace torsam
