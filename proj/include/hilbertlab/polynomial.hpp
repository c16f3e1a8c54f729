#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hilbertlab/monomial.hpp"
#include "hilbertlab/rational.hpp"

namespace hl {

/// Parsed polynomial expression. The tree is kept as written so that printing
/// reproduces canonical input byte for byte.
struct PolyNode;
using PolyExpr = std::shared_ptr<const PolyNode>;

struct PolyNode {
  enum class Kind { Int, Var, Add, Sub, Mul, Pow, Neg };
  Kind kind;
  Integer value;           // Int
  std::size_t var = 0;     // Var
  unsigned exponent = 0;   // Pow
  PolyExpr lhs, rhs;       // Add, Sub, Mul (both); Pow, Neg (lhs)
};

PolyExpr make_int(const Integer& v);
PolyExpr make_var(std::size_t index);
PolyExpr make_add(PolyExpr a, PolyExpr b);
PolyExpr make_sub(PolyExpr a, PolyExpr b);
PolyExpr make_mul(PolyExpr a, PolyExpr b);
PolyExpr make_pow(PolyExpr base, unsigned exponent);
PolyExpr make_neg(PolyExpr a);

/// Parses one expression over the given variable names. Grammar:
///   expr  := term (('+' | '-') term)*
///   term  := unary ('*' unary)*
///   unary := '-' unary | power
///   power := atom ('^' integer)?
///   atom  := integer | name | '(' expr ')'
/// `line` and `column` locate text[0] for error reporting.
PolyExpr parse_polynomial(std::string_view text, const std::vector<std::string>& vars, std::size_t line = 1,
                          std::size_t column = 1);

/// Comma-separated list of expressions; blank text is the empty list.
std::vector<PolyExpr> parse_polynomial_list(std::string_view text, const std::vector<std::string>& vars,
                                            std::size_t line = 1, std::size_t column = 1);

/// Canonical text: binary +/- surrounded by single spaces, no spaces around
/// * and ^, parentheses only where the tree requires them.
std::string print_polynomial(const PolyExpr& e, const std::vector<std::string>& vars);

/// Expanded form: exponent vector -> nonzero integer coefficient.
using ExpandedPoly = std::map<Exponents, Integer, DegrevlexLess>;

ExpandedPoly expand(const PolyExpr& e, std::size_t nvars);

/// Value at the origin (the constant term).
Integer constant_term(const PolyExpr& e);

/// Builds an expression from an expanded polynomial (terms in descending
/// degrevlex order, unit coefficients omitted).
PolyExpr from_expanded(const ExpandedPoly& p, std::size_t nvars);

}  // namespace hl
