#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hilbertlab/determinantal.hpp"
#include "hilbertlab/hilbert.hpp"
#include "hilbertlab/presentation.hpp"
#include "hilbertlab/reduction.hpp"
#include "hilbertlab/verdicts.hpp"

namespace hl {

struct AnalyzeOptions {
  std::uint64_t seed = 0;
  std::optional<unsigned> n_max;  // raised to at least 2d+2
  unsigned max_attempts = 8;
  bool assume_integrally_closed = false;
  unsigned max_order = 160;  // largest host truncation order tried
  unsigned spectrum_seeds = 0;  // extra random reductions sampled for the spectrum
};

/// Reduction number of the random reduction drawn from one seed, or nullopt
/// when it exceeds n_max.
struct SpectrumEntry {
  std::uint64_t seed = 0;
  std::optional<unsigned> reduction_number;
};

struct Analysis {
  RingPresentation presentation;
  AnalyzeOptions options;
  unsigned d = 0;
  unsigned n_max = 0;
  unsigned n_hi = 0;  // Hilbert table depth, max(n_max, r + 2d)
  unsigned host_order = 0;
  unsigned host_rebuilds = 0;
  unsigned ideal_floor = 0;  // m^floor ⊆ I

  std::string reduction_source;  // "supplied" or "random"
  ReductionDatum reduction;
  std::vector<std::string> reduction_text;
  std::vector<SpectrumEntry> spectrum;  // seeds seed .. seed + spectrum_seeds - 1
  std::size_t len_a_q = 0;
  unsigned q_floor = 0;

  HilbertDatum hilbert;
  std::string h_vector_note;
  FiltrationLengths lengths;
  MainBoundHypotheses hypotheses;
  std::optional<std::vector<std::string>> closure_generators;
  std::vector<ValabregaVallaEntry> vv;
  std::vector<IdentityCheck> identities;
  std::vector<TheoremVerdict> verdicts;
  bool ideal_is_maximal = false;

  bool violation() const;
};

/// Runs the whole pipeline: reduction, Hilbert table and fit, filtration
/// lengths, hypotheses, identities and verdicts. The host truncation is
/// raised and everything recomputed when a product needs a deeper order.
/// Pipeline-level failures (ideal not m-primary, no reduction found, fit
/// outside the table) raise RefusalError or NotPrimaryError.
Analysis analyze(const RingPresentation& presentation, const AnalyzeOptions& options);

struct DetringOptions {
  unsigned n_max = 3;
  unsigned max_cells = 9;                   // st cap
  std::size_t fit_monomial_limit = 200000;  // skip the Hilbert fit above this host size
};

struct DetringReport {
  DeterminantalInstance instance;
  DetringOptions options;
  PowerReductionCertificate power;
  std::vector<StraighteningCheck> straightening;
  DeterminantalReduction reduction;
  std::optional<HilbertDatum> hilbert;  // of the maximal ideal, by direct fit
  std::string hilbert_note;
  // Second route, valid once Q ∩ m^{n+1} = Q m^n holds for all n: the
  // h-vector of m is the Hilbert function of A/Q, and e_i = Σ_k binom(k, i) h_k.
  std::vector<Integer> q_h_vector;
  std::vector<Integer> q_coefficients;
  std::optional<bool> routes_agree;  // set when both routes ran
  std::optional<TheoremVerdict> northcott;

  bool straightening_agrees() const;
  bool violation() const;
};

struct ClosureReport {
  RingPresentation presentation;
  std::vector<std::string> generators;  // minimal monomial generators of the input ideal
  std::vector<std::string> closure;     // minimal monomial generators of its integral closure
  bool closed = false;
};

/// Newton-polyhedron closure of a monomial ideal of a polynomial ring.
/// RefusalError for relations or non-monomial generators.
ClosureReport closure_report(const RingPresentation& presentation, unsigned max_order = 160);

/// Throws RefusalError for a shape outside 2 <= s <= t or above the cap.
DetringReport detring(unsigned s, unsigned t, const DetringOptions& options);

}  // namespace hl
