#pragma once

#include <optional>
#include <vector>

#include "hilbertlab/ideal.hpp"
#include "hilbertlab/monomial.hpp"

namespace hl {

/// Exponent vectors of the generators when every one is a monomial (up to a
/// scalar); nullopt otherwise.
std::optional<std::vector<Exponents>> monomial_generators(const IdealSubspace& k);

/// Monomials whose exponent lies in the Newton polyhedron of the generators,
/// minimal under divisibility. Requires a host without relations, monomial
/// generators and a certified ideal; otherwise RefusalError ("closure
/// undecidable here").
std::vector<Exponents> closure_minimal_generators(const IdealSubspace& k);

/// The ideal generated by closure_minimal_generators(k); contains k.
IdealSubspace monomial_integral_closure(const IdealSubspace& k);

}  // namespace hl
