#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace torsam {

inline constexpr int kMaxVars = 16;

struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};
  int deg = 0;

  static Monomial one() { return {}; }
  static Monomial variable(int v);
  static Monomial from_exponents(const std::vector<int>& e);

  int operator[](int v) const { return exp[v]; }
  bool is_one() const { return deg == 0; }

  bool divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (exp[i] > o.exp[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const;
  // pre: d divides *this
  Monomial quotient(const Monomial& d) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exp[i] != 0 && o.exp[i] != 0) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return exp == o.exp; }
  std::size_t hash() const;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class MonomialOrder { grevlex, lex };

// >0 if a > b
inline int compare_grevlex(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (int i = kMaxVars - 1; i >= 0; --i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  return 0;
}

int compare_lex(const Monomial& a, const Monomial& b);
std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b,
                                      MonomialOrder order = MonomialOrder::grevlex);

// all monomials of degree d in the first nvars variables, in descending grevlex
std::vector<Monomial> monomials_of_degree(int nvars, int d);

}  // namespace torsam
