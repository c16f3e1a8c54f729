#pragma once

#include <optional>
#include <vector>

#include "hilbertlab/rational.hpp"
#include "hilbertlab/reduction.hpp"

namespace hl {

struct HilbertDatum {
  std::vector<Integer> table;           // n -> ℓ(A/I^{n+1}) for 0 <= n <= n_hi
  std::vector<unsigned> stabilized_at;  // Nakayama order of each I^{n+1}
  std::vector<Integer> coefficients;    // e_0 .. e_d
  unsigned fit_lo = 0;                  // solved on [fit_lo, fit_lo + d]
  unsigned fit_hi = 0;                  // validated on (fit_lo + d, fit_hi]
  std::optional<std::vector<Integer>> h_vector;
};

/// ℓ(A/I^{n+1}) for 0 <= n <= n_hi, with the certificate of each entry.
std::vector<ColengthCertificate> hilbert_table(PowerCache& i_powers, unsigned n_hi);

/// Σ_i (-1)^i e_i binom(n+d-i, d-i).
Integer hilbert_polynomial(const std::vector<Integer>& e, std::int64_t n);

/// Exact solution on the d+1 points lo..lo+d, no validation. Throws
/// DomainError when the table is too short or the solution is not integral.
std::vector<Integer> solve_coefficients(const std::vector<Integer>& table, unsigned d, unsigned lo);

/// Solves on [r, r+d] and validates on [r+d+1, r+2d]; a mismatch or e_0 < 1
/// throws DomainError ("polynomial regime not reached; extend table").
std::vector<Integer> fit_coefficients(const std::vector<Integer>& table, unsigned d, unsigned r);

/// Numerator of Σ ℓ(I^n/I^{n+1}) t^n = h(t)/(1-t)^d. The computed
/// coefficients must end in at least d+1 zeros; otherwise DomainError
/// ("series not rational in range"). Trailing zeros are dropped.
std::vector<Integer> h_vector(const std::vector<Integer>& table, unsigned d);

}  // namespace hl
