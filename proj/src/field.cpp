#include "torsam/field.hpp"

#include <cstdlib>

namespace torsam {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  // p must stay below 2^31 so that a + b never wraps
  if (p >= (1u << 31) || !is_prime(p))
    throw Error("field characteristic must be a prime below 2^31, got " + std::to_string(p));
}

Scalar PrimeField::inv(Scalar a) const {
  if (a == 0) throw Error("division by zero in F_p");
  long long t = 0, nt = 1, r = p_, nr = a;
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Scalar>(t);
}

Scalar PrimeField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Scalar>(r);
}

long long PrimeField::to_signed(Scalar a) const {
  if (a > p_ / 2) return static_cast<long long>(a) - static_cast<long long>(p_);
  return a;
}

PrimeField field_from_environment() {
  const char* env = std::getenv("TORSAM_FIELD");
  if (env == nullptr || *env == '\0') return PrimeField();
  char* end = nullptr;
  unsigned long v = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0') throw Error(std::string("TORSAM_FIELD is not a number: ") + env);
  return PrimeField(static_cast<std::uint32_t>(v));
}

}  // namespace torsam
