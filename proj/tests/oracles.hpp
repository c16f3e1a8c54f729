#pragma once

// Independent reference computations used by the tests. None of these call
// into the library's linear algebra or ideal engine.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hilbertlab/presentation.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<std::int64_t>>;
using Exps = std::vector<int>;

inline std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline std::int64_t inverse(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, b = mod(a, p), e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

/// Dense Gauss-Jordan over F_p; returns the reduced row-echelon form.
inline Matrix rref(Matrix m, std::int64_t p) {
  std::size_t row = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && mod(m[piv][c], p) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    const std::int64_t inv = inverse(m[row][c], p);
    for (auto& x : m[row]) x = mod(x * inv, p);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || mod(m[r][c], p) == 0) continue;
      const std::int64_t f = mod(m[r][c], p);
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = mod(m[r][k] - f * m[row][k], p);
    }
    ++row;
  }
  m.resize(row);
  return m;
}

inline std::size_t rank(const Matrix& m, std::int64_t p) { return rref(m, p).size(); }

/// Whether v lies in the row space of m.
inline bool in_row_space(const Matrix& m, const std::vector<std::int64_t>& v, std::int64_t p) {
  Matrix with = m;
  with.push_back(v);
  return rank(with, p) == rank(m, p);
}

inline bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline bool in_monomial_ideal(const Exps& mono, const std::vector<Exps>& gens) {
  for (const auto& g : gens) {
    if (divides(g, mono)) return true;
  }
  return false;
}

/// Visits every exponent vector with entries in [0, bound).
inline void for_each_in_box(std::size_t nvars, int bound, const std::function<void(const Exps&)>& f) {
  Exps e(nvars, 0);
  for (;;) {
    f(e);
    std::size_t i = 0;
    while (i < nvars && ++e[i] == bound) e[i++] = 0;
    if (i == nvars) return;
  }
}

/// Staircase count: monomials outside the ideal. The ideal must contain a
/// pure power of every variable below `bound`.
inline std::size_t staircase_colength(const std::vector<Exps>& gens, std::size_t nvars, int bound) {
  std::size_t count = 0;
  for_each_in_box(nvars, bound, [&](const Exps& e) { count += !in_monomial_ideal(e, gens); });
  return count;
}

/// Drops generators divisible by another one.
inline std::vector<Exps> minimize(std::vector<Exps> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exps> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) redundant = j != i && divides(gens[j], gens[i]);
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

/// Generators of the product of two monomial ideals.
inline std::vector<Exps> product(const std::vector<Exps>& a, const std::vector<Exps>& b) {
  std::vector<Exps> out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      Exps s(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
      out.push_back(s);
    }
  }
  return minimize(std::move(out));
}

inline std::vector<Exps> power(const std::vector<Exps>& a, unsigned k) {
  std::vector<Exps> out{Exps(a.at(0).size(), 0)};
  for (unsigned i = 0; i < k; ++i) out = product(out, a);
  return out;
}

/// x^a is integral over I iff x^{ka} lies in I^k for some k; this checks
/// k <= kmax with the powers computed once.
class PowerMembership {
 public:
  PowerMembership(const std::vector<Exps>& gens, unsigned kmax) {
    std::vector<Exps> cur{Exps(gens.at(0).size(), 0)};
    for (unsigned k = 1; k <= kmax; ++k) powers_.push_back(cur = product(cur, gens));
  }

  bool operator()(const Exps& a) const {
    for (std::size_t k = 1; k <= powers_.size(); ++k) {
      Exps ka(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) ka[i] = static_cast<int>(k) * a[i];
      if (in_monomial_ideal(ka, powers_[k - 1])) return true;
    }
    return false;
  }

 private:
  std::vector<std::vector<Exps>> powers_;
};

inline bool power_membership(const Exps& a, const std::vector<Exps>& gens, unsigned kmax) {
  return PowerMembership(gens, kmax)(a);
}

/// Random m-primary monomial ideal: pure powers below max_deg+1 plus extras.
inline std::vector<Exps> random_monomial_ideal(std::size_t nvars, int max_deg, std::mt19937_64& rng) {
  std::vector<Exps> gens;
  for (std::size_t i = 0; i < nvars; ++i) {
    Exps e(nvars, 0);
    e[i] = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_deg));
    gens.push_back(e);
  }
  const unsigned extras = static_cast<unsigned>(rng() % 4);
  for (unsigned k = 0; k < extras; ++k) {
    Exps e(nvars, 0);
    int deg = 0;
    for (auto& x : e) deg += (x = static_cast<int>(rng() % static_cast<unsigned>(max_deg)));
    if (deg > 0) gens.push_back(e);
  }
  return gens;
}

inline std::string monomial_text(const Exps& e, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

/// Presentation text of a monomial ideal in a polynomial ring.
inline std::string monomial_presentation(const std::vector<Exps>& gens, std::size_t nvars) {
  const std::vector<std::string> vars = {"x", "y", "z", "w"};
  std::vector<std::string> names(vars.begin(), vars.begin() + static_cast<long>(nvars));
  std::string text = "char: 32003\nvars: ";
  for (std::size_t i = 0; i < nvars; ++i) text += (i ? ", " : "") + names[i];
  text += "\nrelations:\ndim: " + std::to_string(nvars) + "\ncm: true\nideal: ";
  for (std::size_t k = 0; k < gens.size(); ++k) text += (k ? ", " : "") + monomial_text(gens[k], names);
  return text + "\n";
}

}  // namespace oracle
