#include "hilbertlab/verdicts.hpp"

namespace hl {

namespace {

const char* text_symbol(const std::string& claimed) {
  if (claimed == ">=") return "≥";
  if (claimed == "<=") return "≤";
  return "=";
}

int sign(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return (c > 0) - (c < 0);
}

bool relation_holds(const std::string& claimed, int c) {
  if (claimed == ">=") return c >= 0;
  if (claimed == "<=") return c <= 0;
  return c == 0;
}

// Fills comparison, status and the bracketed tag of the expression.
void settle(TheoremVerdict& v, const std::string& middle) {
  v.comparison = sign(*v.lhs, *v.rhs);
  bool ok = relation_holds(v.claimed, v.comparison);
  for (const auto& c : v.checks) ok = ok && c.passed;
  v.status = ok ? VerdictStatus::holds : VerdictStatus::violated;
  std::string tag = !ok ? "VIOLATED" : v.comparison == 0 ? "EQUALITY" : "STRICT";
  v.expression = to_string(*v.lhs) + " " + text_symbol(v.claimed) + " " + middle + " [" + tag + "]";
}

TheoremVerdict refuse(TheoremVerdict v, const std::string& reason) {
  v.status = VerdictStatus::refused;
  v.reason = reason;
  return v;
}

TheoremVerdict not_applicable(TheoremVerdict v, const std::string& reason) {
  v.status = VerdictStatus::not_applicable;
  v.reason = reason;
  return v;
}

std::optional<std::string> closedness_refusal(const MainBoundHypotheses& h) {
  switch (h.closedness) {
    case ClosednessStatus::verified:
    case ClosednessStatus::asserted: return std::nullopt;
    case ClosednessStatus::refuted: return "hypothesis_false: I is not integrally closed";
    case ClosednessStatus::unverified: break;
  }
  return "hypothesis_unverified: integral closedness neither verified nor asserted";
}

std::optional<std::string> main_refusal(const Measurements& m) {
  if (auto r = closedness_refusal(m.hypotheses)) return r;
  if (!m.hypotheses.q_cap_i2_eq_qi) return "hypothesis_false: Q ∩ I^2 ≠ QI";
  if (!m.hypotheses.i4_eq_qi3) return "hypothesis_false: I^4 ≠ QI^3";
  if (!m.hypotheses.mi3_in_qi2) return "hypothesis_false: mI^3 ⊄ QI^2";
  return std::nullopt;
}

Rational main_rhs(const Measurements& m) {
  const Rational half(Integer(m.coefficient(2) + m.lengths.len_i2_qi), Integer(2));
  Rational r = Rational(m.coefficient(0) - m.coefficient(1)) + half;
  r.canonicalize();
  return r;
}

bool table_matches(const Measurements& m, Integer (*predict)(const Measurements&, std::int64_t)) {
  for (std::size_t n = 1; n < m.table.size(); ++n) {
    if (predict(m, static_cast<std::int64_t>(n)) != m.table[n]) return false;
  }
  return true;
}

Integer B(std::int64_t n, std::int64_t k) { return binomial(n, k); }

}  // namespace

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::holds: return "holds";
    case VerdictStatus::violated: return "violated";
    case VerdictStatus::refused: return "refused";
    case VerdictStatus::not_applicable: return "not_applicable";
  }
  return "not_applicable";
}

Integer rank_certificate(const Measurements& m) {
  return m.coefficient(1) - m.coefficient(0) + m.len_a_i() - Integer(m.lengths.len_i2_qi);
}

TheoremVerdict verdict_northcott(const Measurements& m) {
  TheoremVerdict v;
  v.claim_id = "northcott_bound";
  v.claimed = ">=";
  if (m.d < 1) return not_applicable(v, "needs dimension at least 1");
  v.lhs = Rational(m.len_a_i());
  v.rhs = Rational(m.coefficient(0) - m.coefficient(1));
  const bool eq = cmp(*v.lhs, *v.rhs) == 0;
  v.checks.push_back({"equality iff I^2 = QI", eq == (m.reduction_number <= 1)});
  settle(v, to_string(m.coefficient(0)) + " - " + to_string(m.coefficient(1)) + " = " + to_string(*v.rhs));
  return v;
}

std::pair<TheoremVerdict, TheoremVerdict> verdict_itoh_ev(const Measurements& m) {
  TheoremVerdict a, b;
  a.claim_id = "itoh_upper_bound";
  a.claimed = "<=";
  b.claim_id = "elias_valla_bound";
  b.claimed = ">=";
  a.hypotheses = b.hypotheses = m.hypotheses;
  if (auto r = closedness_refusal(m.hypotheses)) return {refuse(a, *r), refuse(b, *r)};
  if (m.d < 2) {
    a = not_applicable(a, "needs dimension at least 2");
  } else {
    a.lhs = Rational(m.len_a_i());
    a.rhs = Rational(m.coefficient(0) - m.coefficient(1) + m.coefficient(2));
    settle(a, to_string(m.coefficient(0)) + " - " + to_string(m.coefficient(1)) + " + " + to_string(m.coefficient(2)) +
                  " = " + to_string(*a.rhs));
  }
  if (m.d < 1) return {a, not_applicable(b, "needs dimension at least 1")};
  b.lhs = Rational(m.len_a_i());
  b.rhs = Rational(m.coefficient(0) - m.coefficient(1) + Integer(m.lengths.len_i2_qi));
  const bool eq = cmp(*b.lhs, *b.rhs) == 0;
  b.checks.push_back({"equality iff I^3 = QI^2", eq == (m.reduction_number <= 2)});
  if (eq && m.d >= 2) b.checks.push_back({"equality gives e_2 = l(I^2/QI)", m.coefficient(2) == m.lengths.len_i2_qi});
  settle(b, to_string(Integer(m.coefficient(0) - m.coefficient(1))) + " + " + std::to_string(m.lengths.len_i2_qi) + " = " +
                to_string(*b.rhs));
  return {a, b};
}

Integer predicted_main(const Measurements& m, std::int64_t n) {
  const std::int64_t d = m.d;
  const Integer l2(m.lengths.len_i2_qi), l3(m.lengths.len_i3_qi2);
  const Integer& e0 = m.coefficient(0);
  return e0 * B(n + d, d) - (e0 - m.len_a_i() + l2 + l3) * B(n + d - 1, d - 1) + (l2 + 2 * l3) * B(n + d - 2, d - 2) -
         l3 * B(n + d - 3, d - 3);
}

namespace {

// Terms shared by both forms of the half-gap Hilbert function.
Integer half_gap_common(const Measurements& m, std::int64_t n, const Integer& r) {
  const std::int64_t d = m.d;
  const Integer l2(m.lengths.len_i2_qi);
  const Integer& e0 = m.coefficient(0);
  return e0 * B(n + d, d) - (e0 - m.len_a_i() + l2 + r) * B(n + d - 1, d - 1) + (l2 + 2 * r - 1) * B(n + d - 2, d - 2) -
         (r - 1) * B(n + d - 3, d - 3);
}

std::int64_t half_gap_c(const Measurements& m, const Integer& r) {
  return static_cast<std::int64_t>(m.lengths.len_i3_qi2) - r.get_si() + 1;
}

}  // namespace

Integer predicted_half_gap(const Measurements& m, std::int64_t n) {
  const Integer r = rank_certificate(m);
  const std::int64_t free_vars = static_cast<std::int64_t>(m.d) - half_gap_c(m, r);
  // Monomials of degree n-1 in d-c variables; a polynomial ring in no
  // variables is k in degree 0.
  Integer tail = 0;
  if (free_vars == 0) {
    tail = n == 1 ? 1 : 0;
  } else if (free_vars > 0) {
    tail = B(n + free_vars - 2, free_vars - 1);
  }
  return half_gap_common(m, n, r) + tail;
}

Integer predicted_half_gap_displayed(const Measurements& m, std::int64_t n) {
  const Integer r = rank_certificate(m);
  const std::int64_t dc = static_cast<std::int64_t>(m.d) - half_gap_c(m, r);
  return half_gap_common(m, n, r) + B(n + dc - 1, dc - 1) - B(n + dc - 2, dc - 2);
}

TheoremVerdict verdict_main(const Measurements& m) {
  TheoremVerdict v;
  v.claim_id = "reduction_three_bound";
  v.claimed = ">=";
  v.hypotheses = m.hypotheses;
  if (m.d < 2) return not_applicable(v, "needs dimension at least 2");
  if (auto r = main_refusal(m)) return refuse(v, *r);

  v.lhs = Rational(m.len_a_i());
  v.rhs = main_rhs(m);
  const bool eq = cmp(*v.lhs, *v.rhs) == 0;
  const Integer rank = rank_certificate(m);
  const bool rank_identity = rank == m.lengths.len_i3_qi2;
  const bool predicted = table_matches(m, predicted_main);
  v.checks.push_back({"equality iff rank certificate equals l(I^3/QI^2)", eq == rank_identity});
  v.checks.push_back({"equality iff predicted Hilbert function matches", eq == predicted});

  const Integer shift = Integer(m.lengths.len_i2_qi) + 2 * rank - m.coefficient(2);
  v.details.emplace_back("rank_certificate", to_string(rank));
  v.details.emplace_back("rank_certificate_expression", to_string(m.coefficient(1)) + " - " + to_string(m.coefficient(0)) +
                                                            " + " + to_string(m.len_a_i()) + " - " +
                                                            std::to_string(m.lengths.len_i2_qi) + " = " + to_string(rank));
  v.details.emplace_back("len_I3_QI2", std::to_string(m.lengths.len_i3_qi2));
  v.details.emplace_back("rank_identity", rank_identity ? "true" : "false");
  v.details.emplace_back("predicted_table_matches", predicted ? "true" : "false");
  v.details.emplace_back("shift_m_plus_2", to_string(shift));
  if (eq && rank_identity && predicted) v.details.emplace_back("depth_G", "at least " + std::to_string(m.d - 1));
  settle(v, to_string(Integer(m.coefficient(0) - m.coefficient(1))) + " + " +
                to_string(Integer(m.coefficient(2) + m.lengths.len_i2_qi)) + "/2 = " + to_string(*v.rhs));
  return v;
}

TheoremVerdict verdict_half_gap(const Measurements& m) {
  TheoremVerdict v;
  v.claim_id = "half_gap_case";
  v.claimed = "=";
  v.hypotheses = m.hypotheses;
  if (m.d < 2) return not_applicable(v, "needs dimension at least 2");
  if (auto r = main_refusal(m)) return refuse(v, *r);
  const Rational gap = Rational(m.len_a_i()) - main_rhs(m);
  if (gap != Rational(1, 2)) return not_applicable(v, "gap is " + to_string(gap) + ", not 1/2");

  v.lhs = Rational(m.len_a_i());
  Rational rhs = Rational(m.coefficient(0) - m.coefficient(1)) +
                 Rational(Integer(m.coefficient(2) + m.lengths.len_i2_qi + 1), Integer(2));
  rhs.canonicalize();
  v.rhs = rhs;
  const Integer r = rank_certificate(m);
  const Integer c = Integer(m.lengths.len_i3_qi2) - r + 1;
  v.checks.push_back({"c >= 2", c >= 2});
  v.checks.push_back({"c <= d", c <= m.d});
  v.checks.push_back({"predicted Hilbert function matches", table_matches(m, predicted_half_gap)});
  v.details.emplace_back("rank", to_string(r));
  v.details.emplace_back("c", to_string(c));
  v.details.emplace_back("depth_G", to_string(Integer(m.d - c)));
  // The closed form with binom(n+i, i) = 0 for i < 0 loses the degree-0
  // term of P/(X_1..X_c) when c = d; report where it differs from the table.
  std::string mismatches;
  for (std::size_t n = 1; n < m.table.size(); ++n) {
    if (predicted_half_gap_displayed(m, static_cast<std::int64_t>(n)) != m.table[n]) {
      mismatches += (mismatches.empty() ? "" : ",") + std::to_string(n);
    }
  }
  v.details.emplace_back("closed_form_mismatch_at_n", mismatches.empty() ? "none" : mismatches);
  settle(v, to_string(Integer(m.coefficient(0) - m.coefficient(1))) + " + " +
                to_string(Integer(m.coefficient(2) + m.lengths.len_i2_qi + 1)) + "/2 = " + to_string(*v.rhs));
  return v;
}

TheoremVerdict verdict_embedding_dimension(const std::vector<Integer>& e_m, std::size_t v_dim, unsigned d,
                                           bool m4_eq_qm3, std::optional<bool> main_equality) {
  TheoremVerdict v;
  v.claim_id = "embedding_dimension_bound";
  v.claimed = "<=";
  if (d < 2) return not_applicable(v, "needs dimension at least 2");
  if (!m4_eq_qm3) return refuse(v, "hypothesis_false: m^4 ≠ Qm^3");
  auto e = [&](std::size_t i) { return i < e_m.size() ? e_m[i] : Integer(0); };
  const Integer lhs = 3 * e(0) - 2 * e(1) + e(2) + Integer(d) - 3;
  v.lhs = Rational(lhs);
  v.rhs = Rational(Integer(static_cast<unsigned long>(v_dim)));
  if (main_equality) v.checks.push_back({"equality iff main bound is an equality", (lhs == v_dim) == *main_equality});
  v.details.emplace_back("embedding_dimension", std::to_string(v_dim));
  v.details.emplace_back("v_minus_lhs", to_string(Integer(Integer(static_cast<unsigned long>(v_dim)) - lhs)));
  settle(v, "v = " + std::to_string(v_dim));
  v.expression = "3*" + to_string(e(0)) + " - 2*" + to_string(e(1)) + " + " + to_string(e(2)) + " + " +
                 std::to_string(d) + " - 3 = " + v.expression;
  return v;
}

IdentityCheck check_length_identity(const Measurements& m) {
  IdentityCheck c;
  c.id = "length_identity";
  if (m.table.size() < 2) {
    c.reason = "table too short";
    return c;
  }
  const Integer len_i_i2 = m.table[1] - m.table[0];
  const Integer rhs = m.coefficient(0) + Integer(m.d - 1) * m.len_a_i() - len_i_i2;
  c.lhs = std::to_string(m.lengths.len_i2_qi);
  c.rhs = to_string(rhs);
  c.status = rhs == m.lengths.len_i2_qi ? VerdictStatus::holds : VerdictStatus::violated;
  return c;
}

IdentityCheck check_correction_term_identity(const Measurements& m) {
  IdentityCheck c;
  c.id = "correction_term_identity";
  if (!m.hypotheses.q_cap_i2_eq_qi) {
    c.reason = "requires Q ∩ I^2 = QI";
    return c;
  }
  const std::int64_t d = m.d;
  const Integer l2(m.lengths.len_i2_qi);
  const Integer& e0 = m.coefficient(0);
  bool ok = true;
  std::string lhs, rhs;
  for (std::size_t n = 0; n < m.table.size(); ++n) {
    Integer len_c = 0;
    if (n >= 2) {
      auto it = m.lengths.len_c.find(static_cast<unsigned>(n));
      if (it == m.lengths.len_c.end()) break;
      len_c = Integer(static_cast<unsigned long>(it->second));
    }
    const auto k = static_cast<std::int64_t>(n);
    const Integer value =
        e0 * B(k + d, d) - (e0 - m.len_a_i() + l2) * B(k + d - 1, d - 1) + l2 * B(k + d - 2, d - 2) - len_c;
    ok = ok && value == m.table[n];
    lhs += (n ? "," : "") + to_string(m.table[n]);
    rhs += (n ? "," : "") + to_string(value);
  }
  c.lhs = lhs;
  c.rhs = rhs;
  c.status = ok ? VerdictStatus::holds : VerdictStatus::violated;
  return c;
}

}  // namespace hl
