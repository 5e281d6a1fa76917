#pragma once

#include <memory>
#include <string>
#include <vector>

#include "torsam/field.hpp"
#include "torsam/monomial.hpp"

namespace torsam {

// Ambient polynomial ring F_p[x_1..x_n], standard grading.
class PolyRing {
 public:
  PolyRing(PrimeField field, std::vector<std::string> names);

  const PrimeField& field() const { return field_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;  // -1 if absent

  bool same_as(const PolyRing& o) const { return field_ == o.field_ && names_ == o.names_; }

 private:
  PrimeField field_;
  std::vector<std::string> names_;
};

struct Term {
  Monomial mono;
  Scalar coeff;
};

// Sparse polynomial, terms strictly descending in grevlex, no zero coefficients.
// The ring pointer is non-owning; the zero polynomial may carry none.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const PolyRing* ring) : ring_(ring) {}
  // combines like terms and sorts
  Poly(const PolyRing* ring, std::vector<Term> terms);

  static Poly constant(const PolyRing* ring, long long c);
  static Poly variable(const PolyRing* ring, int v);
  static Poly monomial(const PolyRing* ring, const Monomial& m, Scalar c = 1);

  const PolyRing* ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Term& lead() const { return terms_.front(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  int degree() const;       // -1 for zero
  int low_degree() const;   // -1 for zero
  bool is_homogeneous() const;
  Poly homogeneous_part(int d) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(Scalar c) const;
  Poly times_monomial(const Monomial& m, Scalar c = 1) const;
  Poly pow(int e) const;

  bool operator==(const Poly& o) const;

  std::string to_string() const;

 private:
  const PolyRing* ring_ = nullptr;
  std::vector<Term> terms_;

  const PolyRing* common(const Poly& o) const;
  friend Poly add_scaled(const Poly&, const Poly&, Scalar);
};

// a + c*b
Poly add_scaled(const Poly& a, const Poly& b, Scalar c);

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);

}  // namespace torsam
