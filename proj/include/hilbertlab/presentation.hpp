#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hilbertlab/field.hpp"
#include "hilbertlab/polynomial.hpp"

namespace hl {

/// A local ring k[x_1..x_v]_(x) / (relations) together with an ideal of it.
///
/// Text form, one `key: value` entry per line, '#' starts a comment, and a
/// line beginning with whitespace continues the previous value:
///
///   char: 32003
///   vars: x, y, z
///   relations:
///   dim: 3
///   cm: true
///   ideal: x^4, x*(y^3 + z^3)
///   reduction: z^4, y^4 - x^4, x^5      (optional; d elements)
struct RingPresentation {
  std::uint32_t characteristic = kDefaultPrime;
  std::vector<std::string> variables;
  std::vector<PolyExpr> relations;
  unsigned dimension = 0;
  bool cohen_macaulay = true;
  std::vector<PolyExpr> ideal;
  std::vector<PolyExpr> reduction;

  std::size_t nvars() const { return variables.size(); }
};

/// Parses and validates. Syntax problems raise ParseError with a position;
/// semantic problems (non-prime characteristic, relation with a constant
/// term, d > v) raise DomainError.
RingPresentation parse_presentation(std::string_view text);

/// Canonical text; parse_presentation(serialize_presentation(p)) reproduces p
/// and canonical files survive the round trip byte for byte.
std::string serialize_presentation(const RingPresentation& p);

RingPresentation load_presentation(const std::string& path);

/// Semantic checks shared by the parser and programmatic builders.
void validate_presentation(const RingPresentation& p);

}  // namespace hl
