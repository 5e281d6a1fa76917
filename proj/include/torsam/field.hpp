#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace torsam {

using Scalar = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// raised when a bounded computation cannot certify its answer
class Inconclusive : public Error {
 public:
  using Error::Error;
};

bool is_prime(std::uint64_t n);

// F_p with canonical representatives in [0, p)
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultCharacteristic = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultCharacteristic);

  std::uint32_t characteristic() const { return p_; }

  Scalar add(Scalar a, Scalar b) const {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  Scalar from_int(long long v) const;
  // representative in (-p/2, p/2], used for printing
  long long to_signed(Scalar a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

// Field selected by TORSAM_FIELD, falling back to the default prime.
PrimeField field_from_environment();

}  // namespace torsam
