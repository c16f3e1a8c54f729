#pragma once

#include <string>

#include "hilbertlab/fuzz.hpp"
#include "hilbertlab/session.hpp"

namespace hl {

// Structured reports are ordered JSON documents with no timings or paths
// that vary between runs, so equal inputs give equal bytes.
std::string analysis_json(const Analysis& a);
std::string analysis_text(const Analysis& a);

std::string detring_json(const DetringReport& r);
std::string detring_text(const DetringReport& r);

std::string closure_json(const ClosureReport& r);
std::string closure_text(const ClosureReport& r);

std::string fuzz_json(const FuzzSummary& s);
std::string fuzz_text(const FuzzSummary& s);

/// Structured document for a pipeline-level refusal or input error.
std::string error_json(const std::string& command, const std::string& kind, const std::string& message);

}  // namespace hl
