#include "hilbertlab/fuzz.hpp"

#include <filesystem>
#include <fstream>
#include <memory>

#include "hilbertlab/closure.hpp"
#include "hilbertlab/errors.hpp"

namespace hl {

namespace {

// Claims checked in every trial; the main bound only where its hypotheses hold.
const char* const kTallied[] = {"northcott_bound",  "itoh_upper_bound",       "elias_valla_bound",
                                "q_cap_i2_eq_qi",   "length_identity",        "correction_term_identity",
                                "fit_stability",    "reduction_multiplicity", "h_vector_sum",
                                "reduction_three_bound"};

}  // namespace

std::string write_reproducer(const std::string& dir, const RingPresentation& p, const FuzzTrial& t) {
  std::filesystem::create_directories(dir);
  const std::string path = dir + "/fuzz-trial-" + std::to_string(t.index) + ".txt";
  std::ofstream out(path, std::ios::binary);
  out << "# reproduce with: analyze " << path << " --seed " << t.seed << "\n";
  for (const auto& v : t.violations) out << "# violated: " << v << "\n";
  out << serialize_presentation(p);
  return path;
}

bool FuzzSummary::violation() const {
  for (const auto& [_, t] : tallies) {
    if (t.violated) return true;
  }
  return false;
}

RingPresentation random_closed_monomial_ideal(unsigned vars, unsigned max_deg, std::mt19937_64& rng) {
  RingPresentation p;
  for (unsigned i = 0; i < vars; ++i) p.variables.push_back(std::string(1, "xyz"[i]));
  p.dimension = vars;
  p.cohen_macaulay = true;

  std::vector<Exponents> gens;
  for (unsigned i = 0; i < vars; ++i) {
    Exponents e(vars, 0);
    e[i] = static_cast<std::uint16_t>(1 + rng() % max_deg);
    gens.push_back(e);
  }
  const unsigned extras = static_cast<unsigned>(rng() % 3);
  for (unsigned k = 0; k < extras; ++k) {
    Exponents e(vars, 0);
    while (total_degree(e) == 0) {
      for (auto& x : e) x = static_cast<std::uint16_t>(rng() % max_deg);
    }
    gens.push_back(e);
  }

  const auto host = std::make_shared<const TruncatedLocalAlgebra>(p, vars * max_deg + 2);
  std::vector<SparseVec> vecs;
  for (const auto& g : gens) vecs.push_back(SparseVec{{host->column_of(g)}, {1}});
  const IdealSubspace i = ideal_from_generators(host, vecs);
  for (const auto& a : closure_minimal_generators(i)) {
    ExpandedPoly mono;
    mono[a] = 1;
    p.ideal.push_back(from_expanded(mono, vars));
  }
  return p;
}

FuzzSummary run_fuzz(const FuzzOptions& options) {
  if (options.vars < 2 || options.vars > 3) throw DomainError("fuzz supports 2 or 3 variables");
  if (options.max_deg < 1) throw DomainError("max-deg must be at least 1");
  FuzzSummary sum;
  sum.options = options;
  for (const char* id : kTallied) sum.tallies[id];

  std::mt19937_64 master(options.seed);
  for (unsigned index = 0; index < options.trials; ++index) {
    FuzzTrial t;
    t.index = index;
    t.seed = master();
    std::mt19937_64 rng(t.seed);
    const RingPresentation p = random_closed_monomial_ideal(options.vars, options.max_deg, rng);
    for (std::size_t k = 0; k < p.ideal.size(); ++k) t.ideal += (k ? ", " : "") + print_polynomial(p.ideal[k], p.variables);

    AnalyzeOptions ao;
    ao.seed = t.seed;
    try {
      const Analysis a = analyze(p, ao);
      t.reduction_number = a.reduction.reduction_number;
      t.main_hypotheses = a.hypotheses.all();
      auto tally = [&](const std::string& id, VerdictStatus s) {
        if (s != VerdictStatus::holds && s != VerdictStatus::violated) return;
        auto& c = sum.tallies[id];
        ++c.checked;
        if (s == VerdictStatus::violated) {
          ++c.violated;
          t.violations.push_back(id);
        }
      };
      for (const auto& v : a.verdicts) {
        if (v.claim_id == "reduction_three_bound" && v.status != VerdictStatus::refused) t.main_equality = v.equality();
        if (sum.tallies.count(v.claim_id)) tally(v.claim_id, v.status);
      }
      for (const auto& c : a.identities) tally(c.id, c.status);
      if (a.hypotheses.closedness == ClosednessStatus::verified) {
        tally("q_cap_i2_eq_qi", a.hypotheses.q_cap_i2_eq_qi ? VerdictStatus::holds : VerdictStatus::violated);
      }
      if (t.main_hypotheses) {
        ++sum.main_population;
        if (t.main_equality) ++sum.main_equalities;
      }
    } catch (const Error& e) {
      t.error = e.what();
      ++sum.errors;
    }
    if (!t.violations.empty() && options.reproducer_dir) t.reproducer = write_reproducer(*options.reproducer_dir, p, t);
    sum.trials.push_back(std::move(t));
  }
  return sum;
}

}  // namespace hl
