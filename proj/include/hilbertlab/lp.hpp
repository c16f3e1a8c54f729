#pragma once

#include <cstdint>
#include <vector>

#include "hilbertlab/rational.hpp"

namespace hl {

/// Decides point ∈ conv(generators) + R_{>=0}^v exactly. Solves the phase-one
/// problem of the simplex method over the rationals with Bland's rule.
/// Throws DomainError on an empty generator list or mismatched lengths.
bool rational_lp_member(const std::vector<Rational>& point, const std::vector<std::vector<std::int64_t>>& generators);

/// Integer-point convenience overload.
bool rational_lp_member(const std::vector<std::int64_t>& point, const std::vector<std::vector<std::int64_t>>& generators);

}  // namespace hl
