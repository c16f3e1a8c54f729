#include "hilbertlab/session.hpp"

#include <algorithm>
#include <memory>

#include "hilbertlab/closure.hpp"
#include "hilbertlab/errors.hpp"

namespace hl {

namespace {

HostPtr make_host(const RingPresentation& p, unsigned order) {
  try {
    return std::make_shared<const TruncatedLocalAlgebra>(p, order);
  } catch (const TruncationExhausted& e) {
    throw RefusalError(std::string("truncation too large for this input: ") + e.what());
  }
}

// The maximal ideal is integrally closed in any local ring.
ClosednessStatus decide_closedness(const IdealSubspace& i, bool is_maximal, bool asserted,
                                   std::optional<std::vector<std::string>>& gens) {
  if (is_maximal) return ClosednessStatus::verified;
  if (i.host().presentation().relations.empty() && monomial_generators(i)) {
    std::vector<SparseVec> vecs;
    std::vector<std::string> text;
    auto closure = closure_minimal_generators(i);
    std::sort(closure.begin(), closure.end(), [](const Exponents& a, const Exponents& b) { return degrevlex_less(b, a); });
    for (const auto& a : closure) {
      const std::uint32_t c = i.host().column_of(a);
      if (c == TruncatedLocalAlgebra::none) continue;
      vecs.push_back(SparseVec{{c}, {1}});
      text.push_back(format_element(i.host(), vecs.back()));
    }
    gens = std::move(text);
    return ideal_equal(ideal_from_generators(i.host_ptr(), vecs), i) ? ClosednessStatus::verified
                                                                     : ClosednessStatus::refuted;
  }
  return asserted ? ClosednessStatus::asserted : ClosednessStatus::unverified;
}

IdentityCheck identity(std::string id, bool holds, std::string lhs, std::string rhs) {
  IdentityCheck c;
  c.id = std::move(id);
  c.status = holds ? VerdictStatus::holds : VerdictStatus::violated;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  return c;
}

IdentityCheck skipped(std::string id, std::string reason) {
  IdentityCheck c;
  c.id = std::move(id);
  c.reason = std::move(reason);
  return c;
}

std::string join(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s;
}

void run(Analysis& a, const HostPtr& host) {
  const RingPresentation& pres = a.presentation;
  const unsigned d = a.d;
  PowerCache ipow(ideal_from_polynomials(host, pres.ideal));
  const IdealSubspace& i = ipow.base();
  if (!i.certified()) throw NotPrimaryError("possibly not m-primary: no Nakayama stabilization for I");
  a.ideal_floor = *i.floor();

  if (!pres.reduction.empty()) {
    a.reduction_source = "supplied";
    a.reduction = ReductionDatum{};
    a.reduction.seed = a.options.seed;
    for (const auto& f : pres.reduction) a.reduction.q_generators.push_back(host->normal_form(f, host->order()));
    ReductionTower probe(ipow, ideal_from_generators(host, a.reduction.q_generators));
    if (!ideal_contains(i, probe.q())) throw RefusalError("the supplied reduction is not contained in I");
    const auto r = check_reduction(probe, a.n_max);
    if (!r) throw RefusalError("the supplied ideal is not a reduction of I within n_max = " + std::to_string(a.n_max));
    a.reduction.reduction_number = *r;
  } else {
    a.reduction_source = "random";
    a.reduction = find_minimal_reduction(ipow, d, a.options.seed, a.options.max_attempts, a.n_max);
  }
  // The reduction number depends on Q; sample other random choices.
  a.spectrum.clear();
  for (unsigned k = 0; k < a.options.spectrum_seeds; ++k) {
    SpectrumEntry e;
    e.seed = a.options.seed + k;
    try {
      e.reduction_number = find_minimal_reduction(ipow, d, e.seed, 1, a.n_max).reduction_number;
    } catch (const RefusalError&) {
    }
    a.spectrum.push_back(e);
  }
  ReductionTower tower(ipow, ideal_from_generators(host, a.reduction.q_generators));
  a.reduction_text.clear();
  for (const auto& g : a.reduction.q_generators) a.reduction_text.push_back(format_element(*host, g));
  const unsigned r = a.reduction.reduction_number;
  a.len_a_q = length_of_quotient(tower.q());
  a.q_floor = *tower.q().floor();

  a.n_hi = std::max(a.n_max, r + 2 * d);
  a.hilbert = HilbertDatum{};
  for (const auto& c : hilbert_table(ipow, a.n_hi)) {
    a.hilbert.table.emplace_back(static_cast<unsigned long>(c.value));
    a.hilbert.stabilized_at.push_back(c.stabilized_at);
  }
  try {
    a.hilbert.coefficients = fit_coefficients(a.hilbert.table, d, r);
  } catch (const DomainError& e) {
    throw RefusalError(std::string("Hilbert fit failed (check the declared dimension): ") + e.what());
  }
  a.hilbert.fit_lo = r;
  a.hilbert.fit_hi = r + 2 * d;
  a.h_vector_note.clear();
  try {
    a.hilbert.h_vector = h_vector(a.hilbert.table, d);
  } catch (const DomainError& e) {
    a.h_vector_note = e.what();
  }

  a.lengths = filtration_lengths(tower, a.n_max);
  a.vv = check_vv_condition(tower, r, a.n_max);
  a.closure_generators.reset();
  a.ideal_is_maximal = ideal_equal(i, tower.maximal());
  const ClosednessStatus closed =
      decide_closedness(i, a.ideal_is_maximal, a.options.assume_integrally_closed, a.closure_generators);
  a.hypotheses = check_main_bound_hypotheses(tower, closed);

  Measurements m;
  m.d = d;
  m.table = a.hilbert.table;
  m.e = a.hilbert.coefficients;
  m.reduction_number = r;
  m.lengths = a.lengths;
  m.hypotheses = a.hypotheses;

  a.identities.clear();
  a.identities.push_back(check_length_identity(m));
  a.identities.push_back(check_correction_term_identity(m));
  if (pres.cohen_macaulay) {
    a.identities.push_back(identity("reduction_multiplicity", Integer(static_cast<unsigned long>(a.len_a_q)) == m.e[0],
                                    std::to_string(a.len_a_q), to_string(m.e[0])));
  } else {
    a.identities.push_back(skipped("reduction_multiplicity", "ring not asserted Cohen-Macaulay"));
  }
  if (a.hilbert.h_vector) {
    Integer sum = 0;
    for (const auto& h : *a.hilbert.h_vector) sum += h;
    a.identities.push_back(identity("h_vector_sum", sum == m.e[0], to_string(sum), to_string(m.e[0])));
  } else {
    a.identities.push_back(skipped("h_vector_sum", a.h_vector_note));
  }
  const auto shifted = solve_coefficients(a.hilbert.table, d, r + 1);
  a.identities.push_back(identity("fit_stability", shifted == m.e, join(m.e), join(shifted)));

  a.verdicts.clear();
  a.verdicts.push_back(verdict_northcott(m));
  auto [itoh, ev] = verdict_itoh_ev(m);
  a.verdicts.push_back(itoh);
  a.verdicts.push_back(ev);
  TheoremVerdict main = verdict_main(m);
  a.verdicts.push_back(main);
  if (a.ideal_is_maximal) {
    std::optional<bool> main_eq;
    if (main.lhs) main_eq = main.equality();
    const auto v = static_cast<std::size_t>(Integer(a.hilbert.table[1] - a.hilbert.table[0]).get_ui());
    a.verdicts.push_back(verdict_embedding_dimension(m.e, v, d, a.hypotheses.i4_eq_qi3, main_eq));
  } else {
    TheoremVerdict v;
    v.claim_id = "embedding_dimension_bound";
    v.claimed = "<=";
    v.reason = "the ideal is not the maximal ideal";
    a.verdicts.push_back(v);
  }
  a.verdicts.push_back(verdict_half_gap(m));
  for (auto& v : a.verdicts) {
    if (!v.hypotheses) v.hypotheses = a.hypotheses;
  }
}

}  // namespace

bool Analysis::violation() const {
  for (const auto& v : verdicts) {
    if (v.status == VerdictStatus::violated) return true;
  }
  for (const auto& c : identities) {
    if (c.status == VerdictStatus::violated) return true;
  }
  return false;
}

Analysis analyze(const RingPresentation& presentation, const AnalyzeOptions& options) {
  validate_presentation(presentation);
  if (presentation.ideal.empty()) throw RefusalError("the ideal has no generators");
  if (presentation.dimension < 1) throw RefusalError("dimension 0 is not supported");

  Analysis a;
  a.presentation = presentation;
  a.options = options;
  a.d = presentation.dimension;
  a.n_max = std::max(options.n_max.value_or(0), 2 * a.d + 2);

  // Locate m^f ⊆ I in a small host first.
  unsigned order = std::min(8u, options.max_order);
  unsigned floor = 0;
  for (;;) {
    const HostPtr host = make_host(presentation, order);
    const IdealSubspace i = ideal_from_polynomials(host, presentation.ideal);
    if (i.certified()) {
      floor = *i.floor();
      break;
    }
    if (order >= options.max_order) {
      throw NotPrimaryError("possibly not m-primary: no Nakayama stabilization below order " + std::to_string(order));
    }
    order = std::min(options.max_order, 2 * order);
  }

  order = std::max(order, std::min(options.max_order, floor * (a.n_max + 2) + 2));
  for (;;) {
    const HostPtr host = make_host(presentation, order);
    try {
      a.host_order = order;
      run(a, host);
      return a;
    } catch (const TruncationExhausted& e) {
      if (order >= options.max_order) {
        throw RefusalError(std::string("truncation order limit reached: ") + e.what());
      }
      order = std::min(options.max_order, std::max(order + order / 2, static_cast<unsigned>(e.required_order())));
      ++a.host_rebuilds;
    }
  }
}

ClosureReport closure_report(const RingPresentation& presentation, unsigned max_order) {
  validate_presentation(presentation);
  if (!presentation.relations.empty()) {
    throw RefusalError("closure undecidable here: the ring has relations; use --assume-integrally-closed");
  }
  ClosureReport rep;
  rep.presentation = presentation;
  for (unsigned order = 8;; order = std::min(max_order, 2 * order)) {
    const HostPtr host = make_host(presentation, order);
    const IdealSubspace i = ideal_from_polynomials(host, presentation.ideal);
    if (!monomial_generators(i)) {
      throw RefusalError("closure undecidable here: a generator is not a monomial; use --assume-integrally-closed");
    }
    if (!i.certified()) {
      if (order >= max_order) throw NotPrimaryError("possibly not m-primary: closure needs an m-primary monomial ideal");
      continue;
    }
    // Both lists run from the largest monomial down, as polynomials print.
    auto descending = [](const Exponents& a, const Exponents& b) { return degrevlex_less(b, a); };
    auto closure = closure_minimal_generators(i);
    std::sort(closure.begin(), closure.end(), descending);
    std::vector<SparseVec> vecs;
    for (const auto& a : closure) {
      vecs.push_back(SparseVec{{host->column_of(a)}, {1}});
      rep.closure.push_back(format_element(*host, vecs.back()));
    }
    const IdealSubspace closed = ideal_from_generators(host, vecs);
    rep.closed = ideal_equal(closed, i);
    // Minimal generators of I: monomials of I not divisible by another one.
    const auto gens = *monomial_generators(i);
    std::vector<Exponents> minimal;
    for (const auto& g : gens) {
      bool redundant = false;
      for (const auto& h : gens) redundant = redundant || (h != g && divides(h, g));
      if (!redundant && std::find(minimal.begin(), minimal.end(), g) == minimal.end()) minimal.push_back(g);
    }
    std::sort(minimal.begin(), minimal.end(), descending);
    for (const auto& g : minimal) rep.generators.push_back(format_element(*host, SparseVec{{host->column_of(g)}, {1}}));
    return rep;
  }
}

bool DetringReport::straightening_agrees() const {
  return std::all_of(straightening.begin(), straightening.end(),
                     [](const StraighteningCheck& c) { return c.congruence_certified && c.standard_survives; });
}

bool DetringReport::violation() const {
  const unsigned s = instance.s;
  bool ok = power.linear && power.symbolic && straightening_agrees();
  ok = ok && reduction.reduction_number == s - 1 && reduction.previous_power_differs;
  for (const auto& e : reduction.vv) ok = ok && e.holds;
  if (routes_agree) ok = ok && *routes_agree;
  // The Northcott verdict already checks equality against m^2 = Q m.
  if (northcott) ok = ok && northcott->status == VerdictStatus::holds;
  return !ok;
}

DetringReport detring(unsigned s, unsigned t, const DetringOptions& options) {
  if (s < 2 || s > t) {
    throw RefusalError("shape error: need 2 <= s <= t (got s=" + std::to_string(s) + ", t=" + std::to_string(t) + ")");
  }
  if (s * t > options.max_cells) {
    throw RefusalError("shape cap exceeded: st = " + std::to_string(s * t) + " > " + std::to_string(options.max_cells));
  }
  DetringReport rep;
  rep.instance = build_determinantal(s, t);
  rep.options = options;
  rep.power = verify_power_reduction(rep.instance);
  rep.straightening = check_straightening(rep.instance);
  rep.reduction = verify_valabrega_valla(rep.instance, std::max(options.n_max, s - 1));

  const unsigned d = rep.instance.presentation.dimension;
  if (!rep.reduction.reduction_number) {
    rep.hilbert_note = "no reduction number";
    return rep;
  }
  const unsigned r = *rep.reduction.reduction_number;
  bool vv = true;
  for (const auto& e : rep.reduction.vv) vv = vv && e.holds;

  Measurements meas;
  meas.d = d;
  meas.table = {1};
  meas.reduction_number = r;
  if (vv) {
    const HostPtr small = make_host(rep.instance.presentation, s + 2);
    PowerCache m(maximal_ideal(small));
    const IdealSubspace q = ideal_from_polynomials(small, rep.instance.presentation.reduction);
    std::size_t prev = 0;
    for (unsigned k = 0; k <= s; ++k) {
      const std::size_t len = length_of_quotient(ideal_sum(q, m(k + 1)));
      rep.q_h_vector.emplace_back(static_cast<unsigned long>(len - prev));
      prev = len;
    }
    while (!rep.q_h_vector.empty() && rep.q_h_vector.back() == 0) rep.q_h_vector.pop_back();
    for (unsigned i = 0; i <= d; ++i) {
      Integer e = 0;
      for (std::size_t k = 0; k < rep.q_h_vector.size(); ++k) e += binomial(k, i) * rep.q_h_vector[k];
      rep.q_coefficients.push_back(e);
    }
    meas.e = rep.q_coefficients;
  }

  const unsigned order = r + 2 * d + 2;
  const std::uint64_t size = monomial_count_below(rep.instance.presentation.nvars(), order);
  if (size > options.fit_monomial_limit) {
    rep.hilbert_note = "direct fit skipped: truncation order " + std::to_string(order) + " needs " + std::to_string(size) +
                       " monomials (limit " + std::to_string(options.fit_monomial_limit) + ")";
  } else {
    const HostPtr host = make_host(rep.instance.presentation, order);
    PowerCache m(maximal_ideal(host));
    HilbertDatum h;
    for (const auto& c : hilbert_table(m, r + 2 * d)) {
      h.table.emplace_back(static_cast<unsigned long>(c.value));
      h.stabilized_at.push_back(c.stabilized_at);
    }
    h.coefficients = fit_coefficients(h.table, d, r);
    h.fit_lo = r;
    h.fit_hi = r + 2 * d;
    try {
      h.h_vector = h_vector(h.table, d);
    } catch (const DomainError&) {
    }
    if (vv) rep.routes_agree = h.coefficients == rep.q_coefficients;
    meas.table = h.table;
    meas.e = h.coefficients;
    rep.hilbert = std::move(h);
  }
  if (!meas.e.empty()) rep.northcott = verdict_northcott(meas);
  return rep;
}

}  // namespace hl
