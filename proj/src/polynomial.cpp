#include "hilbertlab/polynomial.hpp"

#include <cctype>

#include "hilbertlab/errors.hpp"

namespace hl {

namespace {

using Kind = PolyNode::Kind;

PolyExpr binary(Kind k, PolyExpr a, PolyExpr b) {
  auto n = std::make_shared<PolyNode>();
  n->kind = k;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars, std::size_t line, std::size_t column)
      : s_(text), vars_(vars), line_(line), col_(column) {}

  std::vector<PolyExpr> list() {
    std::vector<PolyExpr> out;
    skip_ws();
    if (at_end()) return out;
    out.push_back(expr());
    skip_ws();
    while (!at_end()) {
      if (peek() != ',') fail("expected ',' or end of list");
      advance();
      out.push_back(expr());
      skip_ws();
    }
    return out;
  }

  PolyExpr single() {
    PolyExpr e = expr();
    skip_ws();
    if (!at_end()) fail("unexpected trailing input");
    return e;
  }

 private:
  PolyExpr expr() {
    PolyExpr e = term();
    for (;;) {
      skip_ws();
      if (at_end()) return e;
      const char c = peek();
      if (c == '+') {
        advance();
        e = binary(Kind::Add, e, term());
      } else if (c == '-') {
        advance();
        e = binary(Kind::Sub, e, term());
      } else {
        return e;
      }
    }
  }

  PolyExpr term() {
    PolyExpr e = unary();
    for (;;) {
      skip_ws();
      if (at_end() || peek() != '*') return e;
      advance();
      e = binary(Kind::Mul, e, unary());
    }
  }

  PolyExpr unary() {
    skip_ws();
    if (!at_end() && peek() == '-') {
      advance();
      auto n = std::make_shared<PolyNode>();
      n->kind = Kind::Neg;
      n->lhs = unary();
      return n;
    }
    return power();
  }

  PolyExpr power() {
    PolyExpr base = atom();
    skip_ws();
    if (at_end() || peek() != '^') return base;
    advance();
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be a non-negative integer");
    const Integer v = integer();
    if (v > kMaxExponent) fail("exponent exceeds 255");
    return make_pow(base, static_cast<unsigned>(v.get_ui()));
  }

  PolyExpr atom() {
    skip_ws();
    if (at_end()) fail("unexpected end of expression");
    const char c = peek();
    if (c == '(') {
      advance();
      PolyExpr e = expr();
      skip_ws();
      if (at_end() || peek() != ')') fail("expected ')'");
      advance();
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return make_int(integer());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t l = line_, col = col_;
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
        name.push_back(peek());
        advance();
      }
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return make_var(i);
      }
      throw ParseError("unknown variable '" + name + "'", l, col);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Integer integer() {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(peek());
      advance();
    }
    return Integer(digits);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col_;
};

int precedence(const PolyExpr& e) {
  switch (e->kind) {
    case Kind::Add:
    case Kind::Sub:
      return 1;
    case Kind::Mul:
      return 2;
    case Kind::Neg:
      return 3;
    case Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

void print_into(const PolyExpr& e, const std::vector<std::string>& vars, std::string& out);

void print_child(const PolyExpr& e, bool parens, const std::vector<std::string>& vars, std::string& out) {
  if (parens) out.push_back('(');
  print_into(e, vars, out);
  if (parens) out.push_back(')');
}

void print_into(const PolyExpr& e, const std::vector<std::string>& vars, std::string& out) {
  const int p = precedence(e);
  switch (e->kind) {
    case Kind::Int:
      out += e->value.get_str();
      return;
    case Kind::Var:
      out += vars.at(e->var);
      return;
    case Kind::Add:
    case Kind::Sub:
    case Kind::Mul: {
      print_child(e->lhs, precedence(e->lhs) < p, vars, out);
      out += e->kind == Kind::Add ? " + " : e->kind == Kind::Sub ? " - " : "*";
      // Operators are left-associative, so an equal-precedence right child keeps its parentheses.
      print_child(e->rhs, precedence(e->rhs) <= p, vars, out);
      return;
    }
    case Kind::Neg:
      out.push_back('-');
      print_child(e->lhs, precedence(e->lhs) < p, vars, out);
      return;
    case Kind::Pow:
      print_child(e->lhs, precedence(e->lhs) <= p, vars, out);
      out.push_back('^');
      out += std::to_string(e->exponent);
      return;
  }
}

ExpandedPoly add_into(ExpandedPoly a, const ExpandedPoly& b, int sign) {
  for (const auto& [m, c] : b) {
    Integer& slot = a[m];
    if (sign > 0) slot += c;
    else slot -= c;
    if (slot == 0) a.erase(m);
  }
  return a;
}

ExpandedPoly multiply(const ExpandedPoly& a, const ExpandedPoly& b) {
  ExpandedPoly out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Exponents m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
      Integer& slot = out[m];
      slot += ca * cb;
      if (slot == 0) out.erase(m);
    }
  }
  return out;
}

}  // namespace

PolyExpr make_int(const Integer& v) {
  auto n = std::make_shared<PolyNode>();
  n->kind = Kind::Int;
  n->value = v;
  return n;
}

PolyExpr make_var(std::size_t index) {
  auto n = std::make_shared<PolyNode>();
  n->kind = Kind::Var;
  n->var = index;
  return n;
}

PolyExpr make_add(PolyExpr a, PolyExpr b) { return binary(Kind::Add, std::move(a), std::move(b)); }
PolyExpr make_sub(PolyExpr a, PolyExpr b) { return binary(Kind::Sub, std::move(a), std::move(b)); }
PolyExpr make_mul(PolyExpr a, PolyExpr b) { return binary(Kind::Mul, std::move(a), std::move(b)); }

PolyExpr make_pow(PolyExpr base, unsigned exponent) {
  auto n = std::make_shared<PolyNode>();
  n->kind = Kind::Pow;
  n->lhs = std::move(base);
  n->exponent = exponent;
  return n;
}

PolyExpr make_neg(PolyExpr a) {
  auto n = std::make_shared<PolyNode>();
  n->kind = Kind::Neg;
  n->lhs = std::move(a);
  return n;
}

PolyExpr parse_polynomial(std::string_view text, const std::vector<std::string>& vars, std::size_t line,
                          std::size_t column) {
  return Parser(text, vars, line, column).single();
}

std::vector<PolyExpr> parse_polynomial_list(std::string_view text, const std::vector<std::string>& vars,
                                            std::size_t line, std::size_t column) {
  return Parser(text, vars, line, column).list();
}

std::string print_polynomial(const PolyExpr& e, const std::vector<std::string>& vars) {
  std::string out;
  print_into(e, vars, out);
  return out;
}

ExpandedPoly expand(const PolyExpr& e, std::size_t nvars) {
  switch (e->kind) {
    case Kind::Int: {
      ExpandedPoly p;
      if (e->value != 0) p[Exponents(nvars, 0)] = e->value;
      return p;
    }
    case Kind::Var: {
      Exponents m(nvars, 0);
      m.at(e->var) = 1;
      return {{m, Integer(1)}};
    }
    case Kind::Add:
      return add_into(expand(e->lhs, nvars), expand(e->rhs, nvars), +1);
    case Kind::Sub:
      return add_into(expand(e->lhs, nvars), expand(e->rhs, nvars), -1);
    case Kind::Mul:
      return multiply(expand(e->lhs, nvars), expand(e->rhs, nvars));
    case Kind::Neg:
      return add_into({}, expand(e->lhs, nvars), -1);
    case Kind::Pow: {
      const ExpandedPoly base = expand(e->lhs, nvars);
      ExpandedPoly acc{{Exponents(nvars, 0), Integer(1)}};
      for (unsigned i = 0; i < e->exponent; ++i) acc = multiply(acc, base);
      return acc;
    }
  }
  return {};
}

Integer constant_term(const PolyExpr& e) {
  switch (e->kind) {
    case Kind::Int:
      return e->value;
    case Kind::Var:
      return 0;
    case Kind::Add:
      return constant_term(e->lhs) + constant_term(e->rhs);
    case Kind::Sub:
      return constant_term(e->lhs) - constant_term(e->rhs);
    case Kind::Mul:
      return constant_term(e->lhs) * constant_term(e->rhs);
    case Kind::Neg:
      return -constant_term(e->lhs);
    case Kind::Pow: {
      Integer r = 1;
      const Integer b = constant_term(e->lhs);
      for (unsigned i = 0; i < e->exponent; ++i) r *= b;
      return r;
    }
  }
  return 0;
}

PolyExpr from_expanded(const ExpandedPoly& p, std::size_t nvars) {
  if (p.empty()) return make_int(0);
  PolyExpr out;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    const Exponents& m = it->first;
    const Integer& c = it->second;
    const Integer mag = abs(c);
    // Terms are built left to right so products print without inner parentheses,
    // and a leading sign attaches to the first factor.
    const bool lead_neg = !out && c < 0;
    PolyExpr term;
    auto push = [&](PolyExpr f) {
      if (!term && lead_neg) f = make_neg(f);
      term = term ? make_mul(term, f) : f;
    };
    if (mag != 1) push(make_int(mag));
    for (std::size_t i = 0; i < nvars; ++i) {
      if (m[i] == 0) continue;
      push(m[i] == 1 ? make_var(i) : make_pow(make_var(i), m[i]));
    }
    if (!term) push(make_int(mag));
    if (!out) out = term;
    else out = c < 0 ? make_sub(out, term) : make_add(out, term);
  }
  return out;
}

}  // namespace hl
