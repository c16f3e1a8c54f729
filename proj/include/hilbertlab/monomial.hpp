#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace hl {

using Exponents = std::vector<std::uint16_t>;

unsigned total_degree(const Exponents& e);

/// Strict "a < b" in degree-reverse-lexicographic order with x_1 > x_2 > ... > x_v.
bool degrevlex_less(const Exponents& a, const Exponents& b);

struct DegrevlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const { return degrevlex_less(a, b); }
};

/// Whether every exponent of `a` is at most the matching exponent of `b`.
bool divides(const Exponents& a, const Exponents& b);

/// All monomials of total degree k in v variables, in ascending degrevlex order.
std::vector<Exponents> monomials_of_degree(std::size_t nvars, unsigned k);

/// Number of monomials of degree < n in v variables, binom(n + v - 1, v).
std::uint64_t monomial_count_below(std::size_t nvars, unsigned n);

/// Exponent vector packed 8 bits per variable; supports up to 16 variables
/// and exponents below 256.
struct MonoKey {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  friend bool operator==(const MonoKey&, const MonoKey&) = default;
};

inline constexpr std::size_t kMaxVariables = 16;
inline constexpr unsigned kMaxExponent = 255;

MonoKey pack(const Exponents& e);
Exponents unpack(const MonoKey& k, std::size_t nvars);

/// Componentwise sum of two packed keys. Caller guarantees no lane overflows.
inline MonoKey key_add(const MonoKey& a, const MonoKey& b) { return {a.lo + b.lo, a.hi + b.hi}; }

struct MonoKeyHash {
  std::size_t operator()(const MonoKey& k) const noexcept {
    std::uint64_t h = k.lo * 0x9e3779b97f4a7c15ULL;
    h ^= (k.hi + 0x632be59bd9b4e019ULL) * 0xc2b2ae3d27d4eb4fULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }
};

}  // namespace hl
