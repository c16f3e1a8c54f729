#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hilbertlab/errors.hpp"
#include "hilbertlab/fuzz.hpp"
#include "hilbertlab/report.hpp"
#include "hilbertlab/session.hpp"

namespace {

// Exit codes: 0 consistent, 1 violation found, 2 input error or refusal.
constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kRefused = 2;

struct Output {
  std::string format = "text";
  std::string out_path;

  void write(const std::string& text, const std::string& json) const {
    const std::string& body = format == "json" ? json : text;
    if (out_path.empty()) {
      std::cout << body;
    } else {
      std::ofstream(out_path, std::ios::binary) << body;
    }
  }
};

void add_output(CLI::App* cmd, Output& o) {
  cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", o.out_path, "write the report to a file instead of stdout");
}

hl::RingPresentation load(const std::string& path, std::optional<std::uint32_t> prime) {
  hl::RingPresentation p = hl::load_presentation(path);
  if (prime) {
    p.characteristic = *prime;
    hl::validate_presentation(p);
  }
  return p;
}

template <typename F>
int guarded(const std::string& command, const Output& out, F&& body) {
  auto refuse = [&](const std::string& kind, const std::string& msg) {
    std::cerr << command << ": " << kind << ": " << msg << "\n";
    if (out.format == "json") out.write("", hl::error_json(command, kind, msg));
    return kRefused;
  };
  try {
    return body();
  } catch (const hl::ParseError& e) {
    return refuse("parse_error", e.what());
  } catch (const hl::NotPrimaryError& e) {
    return refuse("not_primary", e.what());
  } catch (const hl::RefusalError& e) {
    return refuse("refused", e.what());
  } catch (const hl::DomainError& e) {
    return refuse("domain_error", e.what());
  } catch (const hl::InvariantViolation& e) {
    std::cerr << command << ": invariant violation: " << e.what() << "\n";
    return kViolation;
  } catch (const hl::Error& e) {
    return refuse("error", e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert coefficients, reductions and verdicts for m-primary ideals"};
  app.require_subcommand(1);

  Output out;
  std::string file;
  hl::AnalyzeOptions ao;
  unsigned nmax = 0;
  std::optional<std::uint32_t> prime;
  auto* analyze = app.add_subcommand("analyze", "run the full pipeline on a presentation file");
  analyze->add_option("file", file, "presentation file")->required();
  analyze->add_option("--seed", ao.seed, "seed for the random reduction");
  analyze->add_option("--nmax", nmax, "table depth (raised to at least 2d+2)");
  analyze->add_option("--max-attempts", ao.max_attempts, "random reductions tried");
  analyze->add_option("--prime", prime, "override the characteristic");
  analyze->add_option("--spectrum", ao.spectrum_seeds, "also report the reduction numbers of this many seeded random reductions");
  analyze->add_flag("--assume-integrally-closed", ao.assume_integrally_closed, "assert that I is integrally closed");
  add_output(analyze, out);

  unsigned s = 0, t = 0;
  hl::DetringOptions dopt;
  std::string emit;
  auto* detring = app.add_subcommand("detring", "verify the determinantal instance of a generic s x t matrix");
  detring->add_option("--s", s, "rows")->required();
  detring->add_option("--t", t, "columns")->required();
  detring->add_option("--nmax", dopt.n_max, "Valabrega-Valla table depth");
  detring->add_option("--emit", emit, "write the presentation file of the instance");
  add_output(detring, out);

  auto* closure = app.add_subcommand("closure", "integral closure of a monomial ideal");
  closure->add_option("file", file, "presentation file")->required();
  add_output(closure, out);

  hl::FuzzOptions fopt;
  std::string repro_dir = "fuzz-reproducers";
  auto* fuzz = app.add_subcommand("fuzz", "property campaign over random closed monomial ideals");
  fuzz->add_option("--vars", fopt.vars, "number of variables (2 or 3)");
  fuzz->add_option("--max-deg", fopt.max_deg, "largest pure-power exponent");
  fuzz->add_option("--trials", fopt.trials, "number of trials");
  fuzz->add_option("--seed", fopt.seed, "master seed");
  fuzz->add_option("--reproducers", repro_dir, "directory for reproducer files");
  add_output(fuzz, out);

  CLI11_PARSE(app, argc, argv);

  if (*analyze) {
    return guarded("analyze", out, [&] {
      if (nmax) ao.n_max = nmax;
      const hl::Analysis a = hl::analyze(load(file, prime), ao);
      out.write(hl::analysis_text(a), hl::analysis_json(a));
      return a.violation() ? kViolation : kOk;
    });
  }
  if (*detring) {
    return guarded("detring", out, [&] {
      const hl::DetringReport r = hl::detring(s, t, dopt);
      if (!emit.empty()) std::ofstream(emit, std::ios::binary) << hl::serialize_presentation(r.instance.presentation);
      out.write(hl::detring_text(r), hl::detring_json(r));
      return r.violation() ? kViolation : kOk;
    });
  }
  if (*closure) {
    return guarded("closure", out, [&] {
      const hl::ClosureReport r = hl::closure_report(load(file, std::nullopt));
      out.write(hl::closure_text(r), hl::closure_json(r));
      return kOk;
    });
  }
  return guarded("fuzz", out, [&] {
    fopt.reproducer_dir = repro_dir;
    const hl::FuzzSummary sum = hl::run_fuzz(fopt);
    out.write(hl::fuzz_text(sum), hl::fuzz_json(sum));
    return sum.violation() ? kViolation : kOk;
  });
}
