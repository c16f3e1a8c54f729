#include "hilbertlab/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace hl {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

Json num(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json nums(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(num(z));
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + v[k];
  return out;
}

std::string join(const std::vector<Integer>& v, const std::string& sep = ", ") {
  std::vector<std::string> s;
  for (const auto& z : v) s.push_back(to_string(z));
  return join(s, sep);
}

std::vector<std::string> printed(const std::vector<PolyExpr>& polys, const std::vector<std::string>& vars) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(print_polynomial(p, vars));
  return out;
}

Json presentation_json(const RingPresentation& p) {
  Json j;
  j["text"] = serialize_presentation(p);
  j["characteristic"] = p.characteristic;
  j["variables"] = p.variables;
  j["relations"] = printed(p.relations, p.variables);
  j["dimension"] = p.dimension;
  j["cohen_macaulay"] = p.cohen_macaulay;
  j["ideal"] = printed(p.ideal, p.variables);
  if (!p.reduction.empty()) j["reduction"] = printed(p.reduction, p.variables);
  return j;
}

Json hypotheses_json(const MainBoundHypotheses& h) {
  Json j;
  j["integrally_closed"] = to_string(h.closedness);
  j["I4_eq_QI3"] = h.i4_eq_qi3;
  j["mI3_in_QI2"] = h.mi3_in_qi2;
  j["Q_cap_I2_eq_QI"] = h.q_cap_i2_eq_qi;
  j["all"] = h.all();
  return j;
}

Json verdict_json(const TheoremVerdict& v) {
  Json j;
  j["claim_id"] = v.claim_id;
  j["claimed"] = v.claimed;
  j["status"] = to_string(v.status);
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.lhs) j["lhs"] = v.lhs->get_str();
  if (v.rhs) j["rhs"] = v.rhs->get_str();
  if (v.lhs && v.rhs) {
    j["relation"] = relation_symbol(v.comparison);
    j["equality"] = v.equality();
  }
  if (!v.expression.empty()) j["expression"] = v.expression;
  if (v.hypotheses) j["hypotheses"] = hypotheses_json(*v.hypotheses);
  Json checks = Json::array();
  for (const auto& c : v.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}});
  j["cross_checks"] = checks;
  Json details = Json::object();
  for (const auto& [k, val] : v.details) details[k] = val;
  j["details"] = details;
  return j;
}

Json vv_json(const std::vector<ValabregaVallaEntry>& vv) {
  Json out = Json::array();
  for (const auto& e : vv) out.push_back(Json{{"n", e.n}, {"holds", e.holds}, {"by_reduction", e.by_reduction}});
  return out;
}

std::string dump(const Json& j) { return j.dump(2, ' ', false) + "\n"; }

std::string verdict_line(const TheoremVerdict& v) {
  std::ostringstream out;
  out << "  " << std::left << std::setw(26) << v.claim_id << std::setw(15) << to_string(v.status);
  if (!v.expression.empty()) {
    out << v.expression;
  } else if (!v.reason.empty()) {
    out << v.reason;
  }
  return out.str();
}

}  // namespace

std::string analysis_json(const Analysis& a) {
  Json j;
  j["format"] = "hilbertlab-report";
  j["version"] = kFormatVersion;
  j["command"] = "analyze";
  j["presentation"] = presentation_json(a.presentation);

  Json cfg;
  cfg["seed"] = a.options.seed;
  cfg["n_max"] = a.n_max;
  cfg["table_depth"] = a.n_hi;
  cfg["max_attempts"] = a.options.max_attempts;
  cfg["assume_integrally_closed"] = a.options.assume_integrally_closed;
  j["config"] = cfg;

  Json tr;
  tr["host_order"] = a.host_order;
  tr["rebuilds"] = a.host_rebuilds;
  tr["ideal_floor"] = a.ideal_floor;
  tr["reduction_floor"] = a.q_floor;
  j["truncation"] = tr;

  Json red;
  red["source"] = a.reduction_source;
  red["seed"] = a.reduction.seed;
  red["attempts"] = a.reduction.attempts;
  red["generators"] = a.reduction_text;
  red["reduction_number"] = a.reduction.reduction_number;
  red["len_A_Q"] = a.len_a_q;
  Json spectrum = Json::array();
  for (const auto& e : a.spectrum) {
    spectrum.push_back(Json{{"seed", e.seed}, {"reduction_number", e.reduction_number ? Json(*e.reduction_number) : Json(nullptr)}});
  }
  red["spectrum"] = spectrum;
  j["reduction"] = red;

  Json hil;
  Json table = Json::array();
  for (std::size_t n = 0; n < a.hilbert.table.size(); ++n) {
    table.push_back(Json{{"n", n}, {"length", num(a.hilbert.table[n])}, {"stabilized_at", a.hilbert.stabilized_at.at(n)}});
  }
  hil["table"] = table;
  hil["coefficients"] = nums(a.hilbert.coefficients);
  hil["fit_window"] = Json::array({a.hilbert.fit_lo, a.hilbert.fit_lo + a.d});
  hil["validation_window"] = Json::array({a.hilbert.fit_lo + a.d + 1, a.hilbert.fit_hi});
  hil["h_vector"] = a.hilbert.h_vector ? nums(*a.hilbert.h_vector) : Json(nullptr);
  if (!a.h_vector_note.empty()) hil["h_vector_note"] = a.h_vector_note;
  j["hilbert"] = hil;

  Json len;
  len["A_I"] = num(a.hilbert.table.at(0));
  len["I_I2"] = num(a.hilbert.table.at(1) - a.hilbert.table.at(0));
  len["I2_QI"] = a.lengths.len_i2_qi;
  len["I3_QI2"] = a.lengths.len_i3_qi2;
  Json c = Json::array();
  for (const auto& [n, l] : a.lengths.len_c) c.push_back(Json{{"n", n}, {"length", l}});
  len["C"] = c;
  Json l = Json::array();
  for (const auto& [n, v] : a.lengths.len_l) l.push_back(Json{{"n", n}, {"length", v}});
  len["L"] = l;
  j["lengths"] = len;

  j["hypotheses"] = hypotheses_json(a.hypotheses);
  j["integral_closure"] = a.closure_generators ? Json(*a.closure_generators) : Json(nullptr);
  j["valabrega_valla"] = vv_json(a.vv);

  Json ids = Json::array();
  for (const auto& c : a.identities) {
    Json e{{"id", c.id}, {"status", to_string(c.status)}};
    if (!c.lhs.empty()) e["lhs"] = c.lhs;
    if (!c.rhs.empty()) e["rhs"] = c.rhs;
    if (!c.reason.empty()) e["reason"] = c.reason;
    ids.push_back(e);
  }
  j["identities"] = ids;

  Json vs = Json::array();
  for (const auto& v : a.verdicts) vs.push_back(verdict_json(v));
  j["verdicts"] = vs;
  j["violation"] = a.violation();
  return dump(j);
}

std::string analysis_text(const Analysis& a) {
  std::ostringstream out;
  const auto& p = a.presentation;
  out << "ring      k[" << join(p.variables) << "]";
  if (!p.relations.empty()) out << " / (" << join(printed(p.relations, p.variables)) << ")";
  out << ", char " << p.characteristic << ", dim " << a.d << "\n";
  out << "ideal     (" << join(printed(p.ideal, p.variables)) << ")\n";
  out << "reduction (" << join(a.reduction_text) << ")  [" << a.reduction_source << ", seed " << a.reduction.seed
      << ", attempts " << a.reduction.attempts << "]\n";
  out << "          reduction number " << a.reduction.reduction_number << ", l(A/Q) = " << a.len_a_q << "\n";
  if (!a.spectrum.empty()) {
    out << "          other seeds:";
    for (const auto& e : a.spectrum) {
      out << " " << e.seed << ":" << (e.reduction_number ? std::to_string(*e.reduction_number) : std::string(">n_max"));
    }
    out << "\n";
  }
  out << "host      order " << a.host_order << " (rebuilds " << a.host_rebuilds << "), m^" << a.ideal_floor
      << " in I, m^" << a.q_floor << " in Q\n\n";

  out << "Hilbert function l(A/I^{n+1})\n";
  for (std::size_t n = 0; n < a.hilbert.table.size(); ++n) {
    out << "  n=" << std::setw(2) << n << "  " << std::setw(10) << to_string(a.hilbert.table[n]) << "   m^"
        << a.hilbert.stabilized_at[n] << " in I^" << n + 1 << "\n";
  }
  out << "coefficients e = (" << join(a.hilbert.coefficients) << ")  fit [" << a.hilbert.fit_lo << ", "
      << a.hilbert.fit_lo + a.d << "], validated to " << a.hilbert.fit_hi << "\n";
  if (a.hilbert.h_vector) {
    out << "h-vector (" << join(*a.hilbert.h_vector) << ")\n";
  } else {
    out << "h-vector unavailable: " << a.h_vector_note << "\n";
  }
  out << "\nlengths   l(A/I) = " << to_string(a.hilbert.table.at(0))
      << ", l(I/I^2) = " << to_string(Integer(a.hilbert.table.at(1) - a.hilbert.table.at(0)))
      << ", l(I^2/QI) = " << a.lengths.len_i2_qi << ", l(I^3/QI^2) = " << a.lengths.len_i3_qi2 << "\n";
  out << "  C_n:";
  for (const auto& [n, l] : a.lengths.len_c) out << " " << n << ":" << l;
  out << "\n  L_n:";
  for (const auto& [n, l] : a.lengths.len_l) out << " " << n << ":" << l;
  out << "\n";
  const auto& h = a.hypotheses;
  out << "hypotheses integrally closed " << to_string(h.closedness) << ", I^4=QI^3 " << (h.i4_eq_qi3 ? "yes" : "no")
      << ", mI^3 in QI^2 " << (h.mi3_in_qi2 ? "yes" : "no") << ", Q cap I^2 = QI " << (h.q_cap_i2_eq_qi ? "yes" : "no")
      << "\n";
  if (a.closure_generators) out << "closure   (" << join(*a.closure_generators) << ")\n";
  out << "Q cap I^{n+1} = QI^n:";
  for (const auto& e : a.vv) out << " " << e.n << (e.holds ? "+" : "-") << (e.by_reduction ? "*" : "");
  out << "   (* by reduction)\n\nidentities\n";
  for (const auto& c : a.identities) {
    out << "  " << std::left << std::setw(26) << c.id << std::setw(15) << to_string(c.status);
    if (!c.lhs.empty()) out << c.lhs << " = " << c.rhs;
    if (!c.reason.empty()) out << c.reason;
    out << "\n";
  }
  out << "\nverdicts\n";
  for (const auto& v : a.verdicts) {
    out << verdict_line(v) << "\n";
    for (const auto& [k, val] : v.details) out << "      " << k << ": " << val << "\n";
  }
  out << "\n" << (a.violation() ? "VIOLATION" : "consistent") << "\n";
  return out.str();
}

std::string detring_json(const DetringReport& r) {
  Json j;
  j["format"] = "hilbertlab-report";
  j["version"] = kFormatVersion;
  j["command"] = "detring";
  j["shape"] = Json{{"s", r.instance.s}, {"t", r.instance.t}};
  j["presentation"] = presentation_json(r.instance.presentation);
  j["config"] = Json{{"n_max", r.options.n_max}, {"max_cells", r.options.max_cells}};

  Json pw;
  pw["linear"] = r.power.linear;
  pw["symbolic"] = r.power.symbolic;
  Json steps = Json::array();
  for (const auto& st : r.power.steps) {
    steps.push_back(Json{{"columns", st.columns}, {"terms_in_qI", st.terms_in_qI}, {"terms_lower", st.terms_lower}, {"ok", st.ok}});
  }
  pw["steps"] = steps;
  j["power_reduction"] = pw;

  unsigned certified = 0, standard = 0;
  for (const auto& c : r.straightening) {
    certified += c.congruence_certified;
    standard += c.result.status == StraighteningResult::Status::standard;
  }
  j["straightening"] = Json{{"monomials", r.straightening.size()}, {"standard", standard},
                            {"congruence_certified", certified}, {"agrees", r.straightening_agrees()}};

  Json red;
  red["reduction_number"] = r.reduction.reduction_number ? Json(*r.reduction.reduction_number) : Json(nullptr);
  red["previous_power_differs"] = r.reduction.previous_power_differs;
  red["valabrega_valla"] = vv_json(r.reduction.vv);
  bool all = !r.reduction.vv.empty();
  for (const auto& e : r.reduction.vv) all = all && e.holds;
  red["associated_graded"] = all ? "Cohen-Macaulay by the Valabrega-Valla criterion" : "not certified";
  j["reduction"] = red;

  if (r.hilbert) {
    j["hilbert"] = Json{{"table", nums(r.hilbert->table)}, {"coefficients", nums(r.hilbert->coefficients)}};
  } else {
    j["hilbert"] = nullptr;
  }
  if (!r.hilbert_note.empty()) j["hilbert_note"] = r.hilbert_note;
  j["h_vector_mod_Q"] = nums(r.q_h_vector);
  j["coefficients_from_h_vector"] = nums(r.q_coefficients);
  j["routes_agree"] = r.routes_agree ? Json(*r.routes_agree) : Json(nullptr);
  j["northcott"] = r.northcott ? verdict_json(*r.northcott) : Json(nullptr);
  j["violation"] = r.violation();
  return dump(j);
}

std::string detring_text(const DetringReport& r) {
  std::ostringstream out;
  const auto& p = r.instance.presentation;
  out << "generic " << r.instance.s << "x" << r.instance.t << " matrix, maximal minors, dim " << p.dimension << "\n";
  out << "Q = (" << join(printed(p.reduction, p.variables)) << ")\n";
  out << "m^s = Q m^{s-1}: linear " << (r.power.linear ? "true" : "false") << ", symbolic "
      << (r.power.symbolic ? "true" : "false") << "\n";
  std::size_t certified = 0;
  for (const auto& c : r.straightening) certified += c.congruence_certified;
  out << "straightening: " << certified << "/" << r.straightening.size() << " degree-" << r.instance.s
      << " monomials certified\n";
  out << "reduction number "
      << (r.reduction.reduction_number ? std::to_string(*r.reduction.reduction_number) : std::string("not found"))
      << ", m^{s-1} != Q m^{s-2}: " << (r.reduction.previous_power_differs ? "true" : "false") << "\n";
  out << "Q cap m^{n+1} = Q m^n:";
  for (const auto& e : r.reduction.vv) out << " " << e.n << (e.holds ? "+" : "-") << (e.by_reduction ? "*" : "");
  out << "\n";
  if (r.hilbert) {
    out << "Hilbert function (" << join(r.hilbert->table) << "), e = (" << join(r.hilbert->coefficients) << ")\n";
  } else {
    out << r.hilbert_note << "\n";
  }
  if (!r.q_h_vector.empty()) {
    out << "h-vector of A/Q (" << join(r.q_h_vector) << "), e = (" << join(r.q_coefficients) << ")";
    if (r.routes_agree) out << (*r.routes_agree ? ", agrees with the fit" : ", DISAGREES with the fit");
    out << "\n";
  }
  if (r.northcott) out << verdict_line(*r.northcott) << "\n";
  out << (r.violation() ? "VIOLATION" : "consistent") << "\n";
  return out.str();
}

std::string closure_json(const ClosureReport& r) {
  Json j;
  j["format"] = "hilbertlab-report";
  j["version"] = kFormatVersion;
  j["command"] = "closure";
  j["presentation"] = presentation_json(r.presentation);
  j["generators"] = r.generators;
  j["closure"] = r.closure;
  j["closed"] = r.closed;
  return dump(j);
}

std::string closure_text(const ClosureReport& r) {
  std::ostringstream out;
  out << "ideal    (" << join(r.generators) << ")\n";
  out << "closure  (" << join(r.closure) << ")\n";
  out << "closed   " << (r.closed ? "yes" : "no") << "\n";
  return out.str();
}

std::string fuzz_json(const FuzzSummary& s) {
  Json j;
  j["format"] = "hilbertlab-report";
  j["version"] = kFormatVersion;
  j["command"] = "fuzz";
  j["config"] = Json{{"vars", s.options.vars}, {"max_deg", s.options.max_deg}, {"trials", s.options.trials},
                     {"seed", s.options.seed}};
  Json tallies = Json::object();
  for (const auto& [id, t] : s.tallies) tallies[id] = Json{{"checked", t.checked}, {"violated", t.violated}};
  j["tallies"] = tallies;
  j["main_bound_population"] = s.main_population;
  j["main_bound_equalities"] = s.main_equalities;
  j["pipeline_errors"] = s.errors;
  Json trials = Json::array();
  for (const auto& t : s.trials) {
    Json e;
    e["index"] = t.index;
    e["seed"] = t.seed;
    e["ideal"] = t.ideal;
    e["reduction_number"] = t.reduction_number ? Json(*t.reduction_number) : Json(nullptr);
    e["main_hypotheses"] = t.main_hypotheses;
    e["main_equality"] = t.main_equality;
    e["violations"] = t.violations;
    if (!t.error.empty()) e["error"] = t.error;
    if (!t.reproducer.empty()) e["reproducer"] = t.reproducer;
    trials.push_back(e);
  }
  j["trials"] = trials;
  j["violation"] = s.violation();
  return dump(j);
}

std::string fuzz_text(const FuzzSummary& s) {
  std::ostringstream out;
  out << s.options.trials << " trials, " << s.options.vars << " variables, degree <= " << s.options.max_deg
      << ", seed " << s.options.seed << "\n";
  out << "  " << std::left << std::setw(28) << "check" << std::right << std::setw(8) << "checked" << std::setw(10)
      << "violated" << "\n";
  for (const auto& [id, t] : s.tallies) {
    out << "  " << std::left << std::setw(28) << id << std::right << std::setw(8) << t.checked << std::setw(10)
        << t.violated << "\n";
  }
  out << "main bound hypotheses met in " << s.main_population << " trials, equality in " << s.main_equalities << "\n";
  out << "pipeline errors " << s.errors << "\n";
  for (const auto& t : s.trials) {
    if (!t.violations.empty()) {
      out << "  trial " << t.index << " (" << t.ideal << "): " << join(t.violations);
      if (!t.reproducer.empty()) out << " -> " << t.reproducer;
      out << "\n";
    }
    if (!t.error.empty()) out << "  trial " << t.index << " error: " << t.error << "\n";
  }
  out << (s.violation() ? "VIOLATION" : "consistent") << "\n";
  return out.str();
}

std::string error_json(const std::string& command, const std::string& kind, const std::string& message) {
  Json j;
  j["format"] = "hilbertlab-report";
  j["version"] = kFormatVersion;
  j["command"] = command;
  j["error"] = Json{{"kind", kind}, {"message", message}};
  return dump(j);
}

}  // namespace hl
