#pragma once

#include <string>
#include <vector>

#include "hilbertlab/presentation.hpp"
#include "hilbertlab/reduction.hpp"

namespace hl {

/// k[x_ij] / (maximal minors of the generic s x t matrix), with I = (x_ij)
/// and the parameter ideal q stored as the presentation's reduction:
///   x_ij              for j - i < 0 or j - i > t - s,
///   x_ij - x_{i-1,j-1} for 2 <= i <= s and 0 <= j - i <= t - s.
/// Variables are ordered row by row.
struct DeterminantalInstance {
  unsigned s = 0, t = 0;
  RingPresentation presentation;

  std::size_t var(unsigned row, unsigned col) const { return (row - 1) * t + (col - 1); }
};

/// Throws DomainError unless 2 <= s <= t.
DeterminantalInstance build_determinantal(unsigned s, unsigned t, std::uint32_t characteristic = kDefaultPrime);

struct MatrixEntry {
  unsigned row = 0, col = 0;  // 1-based
  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

struct StraighteningResult {
  enum class Status { in_qI, standard };
  Status status = Status::standard;
  std::vector<unsigned> indices;  // i_1 < ... < i_s when standard
  std::vector<std::string> trace;
};

/// Rewrites a product of s entries modulo q I^{s-1}: a factor outside the band
/// 0 <= col - row <= t - s lies in q; otherwise each factor is shifted up to
/// row 1, the columns are sorted, and the product is spread back to
/// x_{1,k_1} x_{2,k_2+1} ... x_{s,k_s+s-1}. Throws DomainError on a wrong
/// factor count or an index out of range.
StraighteningResult straighten(unsigned s, unsigned t, const std::vector<MatrixEntry>& factors);

/// x_{1,i_1} x_{2,i_2} ... x_{s,i_s}
std::vector<MatrixEntry> standard_monomial(const std::vector<unsigned>& indices);

struct SymbolicStep {
  std::vector<unsigned> columns;  // a = (i_1 < ... < i_s)
  unsigned terms_in_qI = 0;       // non-identity terms of det(a) killed outright
  unsigned terms_lower = 0;       // non-identity terms straightening to some a' < a
  bool ok = false;                // every non-identity term is one of the two
};

struct PowerReductionCertificate {
  bool linear = false;    // I^s = q I^{s-1} by subspace comparison
  bool symbolic = false;  // every x_a reduced by lexicographic induction on det(a) = 0
  std::vector<SymbolicStep> steps;
};

/// Both routes for I^s = q I^{s-1}; disagreement throws InvariantViolation.
PowerReductionCertificate verify_power_reduction(const DeterminantalInstance& inst);

/// Symbolic route alone.
std::vector<SymbolicStep> symbolic_power_reduction(unsigned s, unsigned t);

struct StraighteningCheck {
  std::vector<MatrixEntry> monomial;
  StraighteningResult result;
  bool congruence_certified = false;  // monomial - result ∈ Q L^{s-1} in the polynomial ring
  bool standard_survives = true;      // the standard form itself is not in Q L^{s-1}
};

/// Every degree-s monomial in the entries, straightened and certified in the
/// polynomial ring k[x_ij] (the moves never use the minors).
std::vector<StraighteningCheck> check_straightening(const DeterminantalInstance& inst);

struct DeterminantalReduction {
  std::optional<unsigned> reduction_number;
  bool previous_power_differs = false;  // m^{s-1} ≠ q m^{s-2}
  std::vector<ValabregaVallaEntry> vv;
};

/// Reduction number of m with respect to q and the Valabrega–Valla table up
/// to n_max (computed for n <= reduction number, by reduction beyond).
DeterminantalReduction verify_valabrega_valla(const DeterminantalInstance& inst, unsigned n_max);

/// I^i ∩ J^j = I^i J^j in k[x_1..x_a, y_1..y_b] with I = (x), J = (y), for
/// all i <= i_max, j <= j_max.
bool verify_disjoint_intersections(unsigned i_vars, unsigned j_vars, unsigned i_max, unsigned j_max);

}  // namespace hl
