#pragma once

#include <cstdint>

namespace hl {

/// Field elements are residues in [0, p) stored as 32-bit words.
using Scalar = std::uint32_t;

inline constexpr std::uint32_t kDefaultPrime = 32003;

bool is_prime(std::uint64_t n);

/// Arithmetic in the prime field F_p, 2 <= p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t modulus() const { return p_; }

  Scalar add(Scalar a, Scalar b) const {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + (p_ - b); }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Multiplicative inverse; throws DomainError for zero.
  Scalar inv(Scalar a) const;
  Scalar from_int(std::int64_t v) const;
  /// Symmetric lift to (-p/2, p/2].
  std::int64_t to_int(Scalar a) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace hl
