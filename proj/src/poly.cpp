#include "torsam/poly.hpp"

#include <algorithm>
#include <sstream>

namespace torsam {

PolyRing::PolyRing(PrimeField field, std::vector<std::string> names)
    : field_(field), names_(std::move(names)) {
  if (names_.empty()) throw Error("a ring needs at least one variable");
  if (names_.size() > static_cast<std::size_t>(kMaxVars))
    throw Error("at most " + std::to_string(kMaxVars) + " variables are supported");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw Error("duplicate variable name " + names_[i]);
}

int PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

Poly::Poly(const PolyRing* ring, std::vector<Term> terms) : ring_(ring) {
  if (terms.empty()) return;
  const PrimeField& f = ring->field();
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return compare_grevlex(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    t.coeff %= f.characteristic();
    if (!terms_.empty() && terms_.back().mono == t.mono)
      terms_.back().coeff = f.add(terms_.back().coeff, t.coeff);
    else
      terms_.push_back(t);
    if (terms_.back().coeff == 0) terms_.pop_back();
  }
}

Poly Poly::constant(const PolyRing* ring, long long c) {
  Scalar s = ring->field().from_int(c);
  Poly p(ring);
  if (s != 0) p.terms_.push_back({Monomial::one(), s});
  return p;
}

Poly Poly::variable(const PolyRing* ring, int v) { return monomial(ring, Monomial::variable(v)); }

Poly Poly::monomial(const PolyRing* ring, const Monomial& m, Scalar c) {
  Poly p(ring);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (auto& t : terms_) d = std::max(d, t.mono.deg);
  return d;
}

int Poly::low_degree() const {
  if (terms_.empty()) return -1;
  int d = terms_.front().mono.deg;
  for (auto& t : terms_) d = std::min(d, t.mono.deg);
  return d;
}

bool Poly::is_homogeneous() const {
  for (auto& t : terms_)
    if (t.mono.deg != terms_.front().mono.deg) return false;
  return true;
}

Poly Poly::homogeneous_part(int d) const {
  Poly p(ring_);
  for (auto& t : terms_)
    if (t.mono.deg == d) p.terms_.push_back(t);
  return p;
}

const PolyRing* Poly::common(const Poly& o) const {
  if (ring_ == nullptr) return o.ring_;
  if (o.ring_ == nullptr || o.ring_ == ring_) return ring_;
  if (!ring_->same_as(*o.ring_)) throw Error("polynomials from different rings");
  return ring_;
}

Poly add_scaled(const Poly& a, const Poly& b, Scalar c) {
  const PolyRing* r = a.common(b);
  Poly out(r);
  if (b.is_zero() || c == 0) {
    out.terms_ = a.terms_;
    return out;
  }
  const PrimeField& f = r->field();
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    int cmp;
    if (i == a.terms_.size()) cmp = -1;
    else if (j == b.terms_.size()) cmp = 1;
    else cmp = compare_grevlex(a.terms_[i].mono, b.terms_[j].mono);
    if (cmp > 0) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (cmp < 0) {
      out.terms_.push_back({b.terms_[j].mono, f.mul(c, b.terms_[j].coeff)});
      ++j;
    } else {
      Scalar s = f.add(a.terms_[i].coeff, f.mul(c, b.terms_[j].coeff));
      if (s != 0) out.terms_.push_back({a.terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  return out;
}

Poly Poly::operator+(const Poly& o) const { return add_scaled(*this, o, 1); }

Poly Poly::operator-(const Poly& o) const {
  const PolyRing* r = common(o);
  if (r == nullptr) return Poly();
  return add_scaled(*this, o, r->field().characteristic() - 1);
}

Poly Poly::operator-() const { return Poly(ring_) - *this; }

Poly Poly::scaled(Scalar c) const {
  Poly p(ring_);
  if (c == 0) return p;
  for (auto& t : terms_) p.terms_.push_back({t.mono, ring_->field().mul(t.coeff, c)});
  return p;
}

Poly Poly::times_monomial(const Monomial& m, Scalar c) const {
  Poly p(ring_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (auto& t : terms_) p.terms_.push_back({t.mono * m, ring_->field().mul(t.coeff, c)});
  return p;
}

Poly Poly::operator*(const Poly& o) const {
  const PolyRing* r = common(o);
  Poly acc(r);
  for (auto& t : o.terms_) acc = acc + times_monomial(t.mono, t.coeff);
  return acc;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw Error("negative exponent");
  Poly acc = Poly::constant(ring_, 1);
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t v = 0; v < names.size(); ++v) {
    if (m.exp[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[v];
    if (m.exp[v] > 1) s += "^" + std::to_string(m.exp[v]);
  }
  return s.empty() ? "1" : s;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& t : terms_) {
    long long c = ring_->field().to_signed(t.coeff);
    if (c < 0) {
      out << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      out << " + ";
    }
    if (t.mono.is_one()) {
      out << c;
    } else {
      if (c != 1) out << c << "*";
      out << monomial_to_string(t.mono, ring_->names());
    }
    first = false;
  }
  return out.str();
}

}  // namespace torsam
