#include "hilbertlab/field.hpp"

#include <string>

#include "hilbertlab/errors.hpp"

namespace hl {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw DomainError("characteristic " + std::to_string(p) + " exceeds 2^31");
  if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
}

Scalar PrimeField::inv(Scalar a) const {
  if (a == 0) throw DomainError("inverse of zero in F_" + std::to_string(p_));
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Scalar>(t);
}

Scalar PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Scalar>(r);
}

std::int64_t PrimeField::to_int(Scalar a) const {
  return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
}

}  // namespace hl
