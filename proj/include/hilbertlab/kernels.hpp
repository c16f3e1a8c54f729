#pragma once

// Row kernels for dense vectors over F_p.
//
// Every kernel exists as a scalar reference and, where the target supports
// it, an AVX2 or NEON variant. The active table is chosen once at runtime
// from CPU features; HILBERTLAB_KERNELS=scalar|avx2|neon|auto overrides it.
// The vector variants require p < kSimdPrimeLimit; the free functions below
// fall back to the scalar table for larger primes.

#include <cstddef>
#include <cstdint>
#include <span>

#include "hilbertlab/field.hpp"

namespace hl::kernels {

/// Vector kernels reduce through a float quotient estimate, exact for p < 2^15.
inline constexpr std::uint32_t kSimdPrimeLimit = 1u << 15;

struct Table {
  const char* name;
  /// y[i] <- (y[i] + c * x[i]) mod p
  void (*axpy)(Scalar* y, const Scalar* x, std::size_t n, Scalar c, std::uint32_t p);
  /// y[i] <- (c * y[i]) mod p
  void (*scale)(Scalar* y, std::size_t n, Scalar c, std::uint32_t p);
  /// index of the first nonzero entry, or n
  std::size_t (*first_nonzero)(const Scalar* x, std::size_t n);
};

const Table& scalar_table();
/// nullptr when not compiled for this target or unsupported by the CPU.
const Table* avx2_table();
const Table* neon_table();

/// The table selected for this process.
const Table& active();
/// Overrides the selection (tests and benchmarks).
void set_active(const Table& table);

inline const Table& for_prime(std::uint32_t p) {
  return p < kSimdPrimeLimit ? active() : scalar_table();
}

inline void axpy(std::span<Scalar> y, std::span<const Scalar> x, Scalar c, std::uint32_t p) {
  if (c == 0 || y.empty()) return;
  for_prime(p).axpy(y.data(), x.data(), y.size(), c, p);
}

inline void scale(std::span<Scalar> y, Scalar c, std::uint32_t p) {
  if (y.empty()) return;
  for_prime(p).scale(y.data(), y.size(), c, p);
}

inline std::size_t first_nonzero(std::span<const Scalar> x) {
  return active().first_nonzero(x.data(), x.size());
}

}  // namespace hl::kernels
