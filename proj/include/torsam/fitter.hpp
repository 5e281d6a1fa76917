#pragma once

#include <string>
#include <vector>

#include "torsam/hilbert.hpp"

namespace torsam {

struct FittedPolynomial {
  std::vector<Rational> coeffs;  // standard basis, constant term first
  int degree = -1;               // -1 for the zero polynomial
  int n0 = 0;                    // least n from which the table agrees
  int window = 0;                // points in the witness window
  int n_max = 0;

  Rational operator()(long long n) const { return eval_polynomial(coeffs, n); }
  Rational leading() const { return coeffs.back(); }
};

// values[n] for n = 0..n_max; throws Inconclusive when no window of
// k+3 points has constant k-th differences
FittedPolynomial fit_values(const std::vector<long long>& values);

// the interpolating polynomial through (x0 + j, values[j])
std::vector<Rational> interpolate(long long x0, const std::vector<long long>& values);

struct DegreeCheck {
  int degree = -1;
  int dim = 0;
  int depth = 0;
  bool projdim_at_least_i = true;
  bool upper_ok = true;  // degree <= dim R - 1
  bool lower_ok = true;  // degree >= depth R - 1 (only when projdim M >= i)
  bool cm_equality = false;  // depth = dim, so degree = dim R - 1 is expected
  bool holds() const { return upper_ok && lower_ok; }
};

DegreeCheck degree_check(const FittedPolynomial& p, int dim, int depth, bool projdim_at_least_i);

std::string polynomial_to_string(const std::vector<Rational>& coeffs, const std::string& var = "n");

}  // namespace torsam
