#include "hilbertlab/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hilbertlab/errors.hpp"

namespace hl {

namespace {

struct Entry {
  std::string value;
  std::size_t line;
  std::size_t column;  // of value[0]
};

const std::set<std::string, std::less<>> kKeys = {"char", "vars", "relations", "dim", "cm", "ideal", "reduction"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::map<std::string, Entry, std::less<>> split_entries(std::string_view text) {
  std::map<std::string, Entry, std::less<>> out;
  Entry* current = nullptr;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;

    if (std::isspace(static_cast<unsigned char>(line.front()))) {
      if (!current) throw ParseError("continuation line without a preceding key", line_no, 1);
      current->value += '\n';
      current->value += line;
      continue;
    }

    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'key: value'", line_no, 1);
    const std::string key(trim(line.substr(0, colon)));
    if (!kKeys.contains(key)) throw ParseError("unknown key '" + key + "'", line_no, 1);
    if (out.contains(key)) throw ParseError("duplicate key '" + key + "'", line_no, 1);
    // The value keeps its leading whitespace so parser columns stay exact.
    current = &out[key];
    current->value = std::string(line.substr(colon + 1));
    current->line = line_no;
    current->column = colon + 2;
  }
  return out;
}

const Entry& require(const std::map<std::string, Entry, std::less<>>& entries, const std::string& key,
                     std::size_t last_line) {
  auto it = entries.find(key);
  if (it == entries.end()) throw ParseError("missing key '" + key + "'", last_line, 1);
  return it->second;
}

std::uint64_t parse_unsigned(const Entry& e, const char* what) {
  const std::string_view v = trim(e.value);
  if (v.empty() || v.size() > 18) throw ParseError(std::string("expected a non-negative integer for ") + what, e.line, e.column);
  std::uint64_t r = 0;
  for (const char c : v) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("expected a non-negative integer for ") + what, e.line, e.column);
    }
    r = r * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return r;
}

std::vector<std::string> parse_names(const Entry& e) {
  std::vector<std::string> names;
  std::size_t line = e.line, col = e.column;
  std::string cur;
  std::size_t cur_line = line, cur_col = col;
  bool expect_name = true;
  auto flush = [&](std::size_t l, std::size_t c) {
    if (cur.empty()) throw ParseError("expected a variable name", l, c);
    for (const auto& n : names) {
      if (n == cur) throw ParseError("duplicate variable '" + cur + "'", cur_line, cur_col);
    }
    names.push_back(cur);
    cur.clear();
  };
  for (const char ch : e.value) {
    if (ch == ',') {
      flush(line, col);
      expect_name = true;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) expect_name = false;
    } else if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
      if (!expect_name) throw ParseError("expected ',' between variable names", line, col);
      if (cur.empty()) {
        if (std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("variable names cannot start with a digit", line, col);
        cur_line = line;
        cur_col = col;
      }
      cur.push_back(ch);
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "' in variable list", line, col);
    }
    if (ch == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  if (!trim(e.value).empty()) flush(line, col);
  return names;
}

std::string join(const std::vector<PolyExpr>& polys, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) out += ", ";
    out += print_polynomial(polys[i], vars);
  }
  return out;
}

void line(std::ostringstream& os, const char* key, const std::string& value) {
  os << key << ':';
  if (!value.empty()) os << ' ' << value;
  os << '\n';
}

}  // namespace

void validate_presentation(const RingPresentation& p) {
  if (!is_prime(p.characteristic) || p.characteristic >= (1u << 31)) {
    throw DomainError("characteristic " + std::to_string(p.characteristic) + " is not a prime below 2^31");
  }
  if (p.variables.empty()) throw DomainError("at least one variable is required");
  if (p.variables.size() > kMaxVariables) throw DomainError("at most 16 variables are supported");
  if (p.dimension > p.variables.size()) throw DomainError("declared dimension exceeds the number of variables");
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    if (constant_term(p.relations[i]) % p.characteristic != 0) {
      throw DomainError("relation " + std::to_string(i + 1) + " has a nonzero constant term");
    }
  }
  for (std::size_t i = 0; i < p.ideal.size(); ++i) {
    if (constant_term(p.ideal[i]) % p.characteristic != 0) {
      throw DomainError("ideal generator " + std::to_string(i + 1) + " is a unit; the ideal must lie in the maximal ideal");
    }
  }
  if (!p.reduction.empty() && p.reduction.size() != p.dimension) {
    throw DomainError("a reduction must have exactly dim elements");
  }
}

RingPresentation parse_presentation(std::string_view text) {
  const auto entries = split_entries(text);
  const std::size_t last_line = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;

  RingPresentation p;
  const Entry& ch = require(entries, "char", last_line);
  const std::uint64_t c = parse_unsigned(ch, "char");
  if (c >= (1ull << 31)) throw DomainError("characteristic " + std::to_string(c) + " exceeds 2^31");
  p.characteristic = static_cast<std::uint32_t>(c);

  p.variables = parse_names(require(entries, "vars", last_line));

  const Entry& dim = require(entries, "dim", last_line);
  p.dimension = static_cast<unsigned>(parse_unsigned(dim, "dim"));

  const Entry& cm = require(entries, "cm", last_line);
  const std::string_view cmv = trim(cm.value);
  if (cmv == "true") p.cohen_macaulay = true;
  else if (cmv == "false") p.cohen_macaulay = false;
  else throw ParseError("expected 'true' or 'false' for cm", cm.line, cm.column);

  const Entry& rel = require(entries, "relations", last_line);
  p.relations = parse_polynomial_list(rel.value, p.variables, rel.line, rel.column);

  const Entry& id = require(entries, "ideal", last_line);
  p.ideal = parse_polynomial_list(id.value, p.variables, id.line, id.column);

  if (auto it = entries.find("reduction"); it != entries.end()) {
    p.reduction = parse_polynomial_list(it->second.value, p.variables, it->second.line, it->second.column);
  }

  validate_presentation(p);
  return p;
}

std::string serialize_presentation(const RingPresentation& p) {
  std::ostringstream os;
  line(os, "char", std::to_string(p.characteristic));
  std::string vars;
  for (std::size_t i = 0; i < p.variables.size(); ++i) {
    if (i) vars += ", ";
    vars += p.variables[i];
  }
  line(os, "vars", vars);
  line(os, "relations", join(p.relations, p.variables));
  line(os, "dim", std::to_string(p.dimension));
  line(os, "cm", p.cohen_macaulay ? "true" : "false");
  line(os, "ideal", join(p.ideal, p.variables));
  if (!p.reduction.empty()) line(os, "reduction", join(p.reduction, p.variables));
  return os.str();
}

RingPresentation load_presentation(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

}  // namespace hl
