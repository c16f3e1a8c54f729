#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilbertlab/rational.hpp"
#include "hilbertlab/reduction.hpp"

namespace hl {

enum class VerdictStatus { holds, violated, refused, not_applicable };

const char* to_string(VerdictStatus s);

struct CrossCheck {
  std::string name;
  bool passed = false;
};

struct TheoremVerdict {
  std::string claim_id;
  std::string claimed;  // relation asserted between lhs and rhs: ">=", "<=" or "="
  VerdictStatus status = VerdictStatus::not_applicable;
  std::string reason;   // for refused / not_applicable
  std::optional<Rational> lhs, rhs;
  int comparison = 0;   // sign(lhs - rhs)
  std::string expression;
  std::optional<MainBoundHypotheses> hypotheses;
  std::vector<CrossCheck> checks;
  std::vector<std::pair<std::string, std::string>> details;

  bool equality() const { return lhs && comparison == 0; }
};

/// Everything the verdicts read, all measured independently.
struct Measurements {
  unsigned d = 0;
  std::vector<Integer> table;  // ℓ(A/I^{n+1})
  std::vector<Integer> e;      // e_0..e_d
  unsigned reduction_number = 0;
  FiltrationLengths lengths;
  MainBoundHypotheses hypotheses;

  Integer len_a_i() const { return table.at(0); }
  Integer coefficient(std::size_t i) const { return i < e.size() ? e[i] : Integer(0); }
};

TheoremVerdict verdict_northcott(const Measurements& m);
std::pair<TheoremVerdict, TheoremVerdict> verdict_itoh_ev(const Measurements& m);
TheoremVerdict verdict_main(const Measurements& m);
TheoremVerdict verdict_half_gap(const Measurements& m);

/// The bound on the embedding dimension v = ℓ(m/m^2) from the maximal
/// ideal's coefficients. `main_equality` is the equality flag of the main
/// verdict for I = m when it was computed.
TheoremVerdict verdict_embedding_dimension(const std::vector<Integer>& e_m, std::size_t v, unsigned d,
                                           bool m4_eq_qm3, std::optional<bool> main_equality);

/// e_1 - e_0 + ℓ(A/I) - ℓ(I^2/QI): the rank of the correction module.
Integer rank_certificate(const Measurements& m);

/// Hilbert function predicted in the equality case, for n >= 1.
Integer predicted_main(const Measurements& m, std::int64_t n);
/// Hilbert function predicted in the half-gap case with c = ℓ(I^3/QI^2) - r + 1, for n >= 1.
/// The term from P/(X_1..X_c) is its Hilbert function in degree n-1.
Integer predicted_half_gap(const Measurements& m, std::int64_t n);
/// Same with that term written as binom(n+d-c-1, d-c-1) - binom(n+d-c-2, d-c-2)
/// and binom(n+i, i) = 0 for i < 0; differs at n = 1 when c = d.
Integer predicted_half_gap_displayed(const Measurements& m, std::int64_t n);

struct IdentityCheck {
  std::string id;
  VerdictStatus status = VerdictStatus::not_applicable;
  std::string lhs, rhs;
  std::string reason;
};

/// ℓ(I^2/QI) = e_0 + (d-1)ℓ(A/I) - ℓ(I/I^2).
IdentityCheck check_length_identity(const Measurements& m);
/// ℓ(A/I^{n+1}) = e_0 C(n+d,d) - [e_0 - ℓ(A/I) + ℓ(I^2/QI)] C(n+d-1,d-1)
///                + ℓ(I^2/QI) C(n+d-2,d-2) - ℓ(C_n), for every n with ℓ(C_n) measured.
IdentityCheck check_correction_term_identity(const Measurements& m);

}  // namespace hl
