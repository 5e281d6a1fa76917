#include "torsam/monomial.hpp"

#include <algorithm>

#include "torsam/field.hpp"

namespace torsam {

Monomial Monomial::variable(int v) {
  Monomial m;
  m.exp[v] = 1;
  m.deg = 1;
  return m;
}

Monomial Monomial::from_exponents(const std::vector<int>& e) {
  if (e.size() > static_cast<std::size_t>(kMaxVars)) throw Error("too many variables");
  Monomial m;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] > 255) throw Error("exponent out of range");
    m.exp[i] = static_cast<std::uint8_t>(e[i]);
    m.deg += e[i];
  }
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    int s = exp[i] + o.exp[i];
    if (s > 255) throw Error("exponent overflow");
    r.exp[i] = static_cast<std::uint8_t>(s);
  }
  r.deg = deg + o.deg;
  return r;
}

Monomial Monomial::quotient(const Monomial& d) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint8_t>(exp[i] - d.exp[i]);
  r.deg = deg - d.deg;
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    r.exp[i] = std::max(exp[i], o.exp[i]);
    r.deg += r.exp[i];
  }
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exp) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

int compare_lex(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
  return 0;
}

std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  int c = order == MonomialOrder::grevlex ? compare_grevlex(a, b) : compare_lex(a, b);
  return c <=> 0;
}

namespace {
void fill(int nvars, int var, int left, Monomial& cur, std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur.exp[var] = static_cast<std::uint8_t>(left);
    out.push_back(cur);
    cur.exp[var] = 0;
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur.exp[var] = static_cast<std::uint8_t>(e);
    fill(nvars, var + 1, left - e, cur, out);
  }
  cur.exp[var] = 0;
}
}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0 || nvars <= 0) {
    if (d == 0) out.push_back(Monomial::one());
    return out;
  }
  Monomial cur;
  fill(nvars, 0, d, cur, out);
  for (auto& m : out) m.deg = d;
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return compare_grevlex(a, b) > 0; });
  return out;
}

}  // namespace torsam
