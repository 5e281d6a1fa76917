#pragma once

#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "torsam/resolution.hpp"
#include "torsam/submodule.hpp"

namespace torsam {

using Rational = boost::rational<long long>;

// sum_k numerator[k] z^(shift+k) / (1-z)^pole_order
struct HilbertSeries {
  std::vector<long long> numerator;
  int shift = 0;
  int pole_order = 0;

  // cancel (1-z) factors and trim; the zero series gets pole order 0
  void reduce();
  bool is_zero() const;
  long long value(int e) const;
  // Krull dimension of the module; -1 for zero
  int dimension() const;
  long long multiplicity() const;
  // Hilbert polynomial, coefficient of e^k at index k
  std::vector<Rational> polynomial() const;
  // least e with value(e') == polynomial(e') for all e' >= e
  int regularity_index() const;
  std::optional<long long> length() const;
  int top_numerator_degree() const { return shift + static_cast<int>(numerator.size()) - 1; }

  HilbertSeries operator+(const HilbertSeries& o) const;
  HilbertSeries operator-(const HilbertSeries& o) const;
  HilbertSeries shifted(int s) const;
  bool operator==(const HilbertSeries& o) const;
};

Rational eval_polynomial(const std::vector<Rational>& coeffs, long long x);

// numerator of P/J over (1-z)^n for a monomial ideal J
std::vector<long long> monomial_numerator(std::vector<Monomial> gens);

// F/U from the leading terms of U's Groebner basis (includes I*F)
HilbertSeries quotient_series(const Submodule& U);

// from the alternating graded Betti numbers over the ambient polynomial ring
HilbertSeries hilbert_series(const ModulePresentation& M);

}  // namespace torsam
