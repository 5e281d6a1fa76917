#include "torsam/fitter.hpp"

namespace torsam {

std::vector<Rational> interpolate(long long x0, const std::vector<long long>& values) {
  // Newton form p(n) = sum_j D^j(x0) * C(n - x0, j)
  std::vector<Rational> out{Rational(0)};
  std::vector<long long> diff = values;
  std::vector<Rational> basis{Rational(1)};  // C(n - x0, j) in the standard basis
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (diff[0] != 0) {
      if (out.size() < basis.size()) out.resize(basis.size(), Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) out[k] += basis[k] * Rational(diff[0]);
    }
    // next binomial: multiply by (n - x0 - j) / (j + 1)
    std::vector<Rational> next(basis.size() + 1, Rational(0));
    Rational shift(-x0 - static_cast<long long>(j));
    for (std::size_t k = 0; k < basis.size(); ++k) {
      next[k + 1] += basis[k];
      next[k] += basis[k] * shift;
    }
    for (auto& c : next) c /= Rational(static_cast<long long>(j) + 1);
    basis.swap(next);
    for (std::size_t k = 0; k + 1 < diff.size(); ++k) diff[k] = diff[k + 1] - diff[k];
    diff.pop_back();
    if (diff.empty()) break;
  }
  while (out.size() > 1 && out.back() == Rational(0)) out.pop_back();
  return out;
}

FittedPolynomial fit_values(const std::vector<long long>& values) {
  const int N = static_cast<int>(values.size());
  FittedPolynomial fp;
  fp.n_max = N - 1;
  std::vector<long long> d = values;
  for (int k = 0; k + 3 <= N; ++k) {
    // d holds k-th differences, d[j] = D^k(j), j = 0..N-1-k
    int m = static_cast<int>(d.size());
    int s = m - 1;
    while (s > 0 && d[s - 1] == d[m - 1]) --s;
    int points = (m - s) + k;
    if (points >= k + 3) {
      std::vector<long long> tail(values.begin() + s, values.begin() + s + k + 1);
      fp.coeffs = interpolate(s, tail);
      bool zero = fp.coeffs.size() == 1 && fp.coeffs[0] == Rational(0);
      fp.degree = zero ? -1 : static_cast<int>(fp.coeffs.size()) - 1;
      int n0 = s;
      while (n0 > 0 && fp(n0 - 1) == Rational(values[n0 - 1])) --n0;
      fp.n0 = n0;
      fp.window = N - s;
      return fp;
    }
    for (int j = 0; j + 1 < m; ++j) d[j] = d[j + 1] - d[j];
    d.pop_back();
  }
  throw Inconclusive("no stable window in the table; increase n_max");
}

DegreeCheck degree_check(const FittedPolynomial& p, int dim, int depth, bool projdim_at_least_i) {
  DegreeCheck c;
  c.degree = p.degree;
  c.dim = dim;
  c.depth = depth;
  c.projdim_at_least_i = projdim_at_least_i;
  c.upper_ok = p.degree <= dim - 1;
  c.lower_ok = !projdim_at_least_i || p.degree >= depth - 1;
  c.cm_equality = depth == dim;
  if (c.cm_equality && projdim_at_least_i) c.lower_ok = c.lower_ok && p.degree == dim - 1;
  return c;
}

std::string polynomial_to_string(const std::vector<Rational>& coeffs, const std::string& var) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    Rational c = coeffs[k];
    if (c == Rational(0)) continue;
    bool neg = c < Rational(0);
    Rational a = neg ? -c : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string num = std::to_string(a.numerator());
    if (a.denominator() != 1) num = "(" + num + "/" + std::to_string(a.denominator()) + ")";
    if (k == 0) {
      out += num;
    } else {
      if (a != Rational(1)) out += num + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace torsam
