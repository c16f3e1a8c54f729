#include "hilbertlab/hilbert.hpp"

#include <string>

#include "hilbertlab/errors.hpp"

namespace hl {

std::vector<ColengthCertificate> hilbert_table(PowerCache& i_powers, unsigned n_hi) {
  std::vector<ColengthCertificate> out;
  for (unsigned n = 0; n <= n_hi; ++n) out.push_back(i_powers(n + 1).colength());
  return out;
}

Integer hilbert_polynomial(const std::vector<Integer>& e, std::int64_t n) {
  const auto d = static_cast<std::int64_t>(e.size()) - 1;
  Integer v = 0;
  for (std::int64_t i = 0; i <= d; ++i) {
    const Integer term = e[static_cast<std::size_t>(i)] * binomial(n + d - i, d - i);
    if (i % 2 == 0) v += term;
    else v -= term;
  }
  return v;
}

std::vector<Integer> solve_coefficients(const std::vector<Integer>& table, unsigned d, unsigned lo) {
  if (table.size() < lo + d + 1) {
    throw DomainError("polynomial regime not reached; extend table (need n up to " + std::to_string(lo + d) + ")");
  }
  const std::size_t k = d + 1;
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k + 1));
  for (std::size_t row = 0; row < k; ++row) {
    const std::int64_t n = lo + static_cast<std::int64_t>(row);
    for (std::size_t i = 0; i < k; ++i) {
      Rational c(binomial(n + d - static_cast<std::int64_t>(i), d - static_cast<std::int64_t>(i)));
      m[row][i] = i % 2 == 0 ? c : Rational(-c);
    }
    m[row][k] = Rational(table[lo + row]);
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && m[piv][col] == 0) ++piv;
    if (piv == k) throw InvariantViolation("binomial basis system is singular");
    std::swap(m[piv], m[col]);
    for (std::size_t row = 0; row < k; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational f = m[row][col] / m[col][col];
      for (std::size_t j = col; j <= k; ++j) m[row][j] -= f * m[col][j];
    }
  }
  std::vector<Integer> e;
  for (std::size_t i = 0; i < k; ++i) {
    Rational x = m[i][k] / m[i][i];
    x.canonicalize();
    if (x.get_den() != 1) throw DomainError("polynomial regime not reached; extend table (non-integral fit)");
    e.push_back(x.get_num());
  }
  return e;
}

std::vector<Integer> fit_coefficients(const std::vector<Integer>& table, unsigned d, unsigned r) {
  if (table.size() < r + 2 * d + 1) {
    throw DomainError("polynomial regime not reached; extend table (need n up to " + std::to_string(r + 2 * d) + ")");
  }
  std::vector<Integer> e = solve_coefficients(table, d, r);
  for (unsigned n = r + d + 1; n <= r + 2 * d; ++n) {
    if (hilbert_polynomial(e, n) != table[n]) {
      throw DomainError("polynomial regime not reached; extend table (validation fails at n = " + std::to_string(n) + ")");
    }
  }
  if (e[0] < 1) throw DomainError("fitted multiplicity is below 1; declared dimension is likely wrong");
  return e;
}

std::vector<Integer> h_vector(const std::vector<Integer>& table, unsigned d) {
  // ℓ(I^n/I^{n+1}) from consecutive colengths.
  std::vector<Integer> g(table.size());
  for (std::size_t n = 0; n < table.size(); ++n) g[n] = n == 0 ? table[0] : Integer(table[n] - table[n - 1]);
  std::vector<Integer> h(table.size());
  for (std::size_t k = 0; k < table.size(); ++k) {
    for (std::size_t j = 0; j <= d && j <= k; ++j) {
      const Integer term = binomial(d, static_cast<std::int64_t>(j)) * g[k - j];
      if (j % 2 == 0) h[k] += term;
      else h[k] -= term;
    }
  }
  std::size_t zeros = 0;
  while (zeros < h.size() && h[h.size() - 1 - zeros] == 0) ++zeros;
  if (zeros < d + 1u || zeros == h.size()) throw DomainError("series not rational in range");
  h.resize(h.size() - zeros);
  return h;
}

}  // namespace hl
