#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hilbertlab/presentation.hpp"
#include "hilbertlab/session.hpp"

namespace hl {

struct FuzzOptions {
  unsigned vars = 2;
  unsigned max_deg = 4;
  unsigned trials = 100;
  std::uint64_t seed = 0;
  std::optional<std::string> reproducer_dir;  // written only when a trial violates a check
};

struct FuzzTrial {
  unsigned index = 0;
  std::uint64_t seed = 0;
  std::string ideal;  // generators, comma separated
  std::optional<unsigned> reduction_number;
  bool main_hypotheses = false;
  bool main_equality = false;
  std::vector<std::string> violations;
  std::string error;  // pipeline refusal, if any
  std::string reproducer;
};

struct CheckTally {
  unsigned checked = 0;
  unsigned violated = 0;
};

struct FuzzSummary {
  FuzzOptions options;
  std::vector<FuzzTrial> trials;
  std::map<std::string, CheckTally> tallies;
  unsigned main_population = 0;  // trials meeting every hypothesis of the main bound
  unsigned main_equalities = 0;
  unsigned errors = 0;

  bool violation() const;
};

/// Newton-closed m-primary monomial ideal in `vars` variables: pure powers
/// x_i^{a_i} (1 <= a_i <= max_deg) plus up to two random monomials, then
/// replaced by its integral closure.
RingPresentation random_closed_monomial_ideal(unsigned vars, unsigned max_deg, std::mt19937_64& rng);

/// Writes `dir`/fuzz-trial-<index>.txt: comment lines with the command line
/// and the violated checks, then the presentation. Returns the path.
std::string write_reproducer(const std::string& dir, const RingPresentation& p, const FuzzTrial& t);

/// Throws DomainError unless 2 <= vars <= 3 and max_deg >= 1.
FuzzSummary run_fuzz(const FuzzOptions& options);

}  // namespace hl
