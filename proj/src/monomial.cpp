#include "hilbertlab/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "hilbertlab/errors.hpp"

namespace hl {

unsigned total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

bool degrevlex_less(const Exponents& a, const Exponents& b) {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // Same degree: a > b iff the last nonzero entry of a - b is negative.
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

namespace {

void fill_degree(std::size_t var, unsigned remaining, Exponents& cur, std::vector<Exponents>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = static_cast<std::uint16_t>(remaining);
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e) {
    cur[var] = static_cast<std::uint16_t>(e);
    fill_degree(var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Exponents> monomials_of_degree(std::size_t nvars, unsigned k) {
  std::vector<Exponents> out;
  if (nvars == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  Exponents cur(nvars, 0);
  fill_degree(0, k, cur, out);
  std::sort(out.begin(), out.end(), degrevlex_less);
  return out;
}

std::uint64_t monomial_count_below(std::size_t nvars, unsigned n) {
  // binom(n + v - 1, v)
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= nvars; ++i) {
    r = r * (n - 1 + i) / i;
  }
  return n == 0 ? 0 : r;
}

MonoKey pack(const Exponents& e) {
  if (e.size() > kMaxVariables) throw DomainError("at most 16 variables are supported");
  MonoKey k;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > kMaxExponent) throw DomainError("exponent exceeds 255");
    const std::uint64_t v = e[i];
    if (i < 8) k.lo |= v << (8 * i);
    else k.hi |= v << (8 * (i - 8));
  }
  return k;
}

Exponents unpack(const MonoKey& k, std::size_t nvars) {
  Exponents e(nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    const std::uint64_t w = i < 8 ? k.lo >> (8 * i) : k.hi >> (8 * (i - 8));
    e[i] = static_cast<std::uint16_t>(w & 0xff);
  }
  return e;
}

}  // namespace hl
