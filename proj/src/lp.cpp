#include "hilbertlab/lp.hpp"

#include <cstddef>

#include "hilbertlab/errors.hpp"

namespace hl {

namespace {

// Phase one on  sum_i lambda_i g_i + s = point,  sum_i lambda_i = 1,
// lambda, s >= 0, with one artificial variable per row.
bool phase_one_feasible(const std::vector<Rational>& point, const std::vector<std::vector<std::int64_t>>& gens) {
  const std::size_t v = point.size();
  const std::size_t k = gens.size();
  const std::size_t m = v + 1;
  const std::size_t n_struct = k + v;
  const std::size_t n = n_struct + m;  // plus artificials
  const std::size_t rhs = n;

  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(n + 1, 0));
  for (std::size_t j = 0; j < v; ++j) {
    for (std::size_t i = 0; i < k; ++i) t[j][i] = gens[i][j];
    t[j][k + j] = 1;
    t[j][rhs] = point[j];
  }
  for (std::size_t i = 0; i < k; ++i) t[v][i] = 1;
  t[v][rhs] = 1;
  for (std::size_t r = 0; r < m; ++r) {
    if (t[r][rhs] < 0) {
      for (auto& x : t[r]) x = -x;
    }
    t[r][n_struct + r] = 1;
  }

  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = n_struct + r;

  std::vector<Rational> cost(n + 1, 0);
  for (std::size_t j = 0; j < n_struct; ++j) {
    for (std::size_t r = 0; r < m; ++r) cost[j] -= t[r][j];
  }
  for (std::size_t r = 0; r < m; ++r) cost[rhs] -= t[r][rhs];

  for (;;) {
    std::size_t enter = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == n) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = t[r][rhs] / t[r][enter];
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen in phase one

    const Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const Rational f = t[r][enter];
      for (std::size_t j = 0; j <= n; ++j) t[r][j] -= f * t[leave][j];
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j <= n; ++j) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  return cost[rhs] == 0;
}

}  // namespace

bool rational_lp_member(const std::vector<Rational>& point, const std::vector<std::vector<std::int64_t>>& generators) {
  if (generators.empty()) throw DomainError("membership test needs at least one generator");
  if (point.empty()) throw DomainError("membership test needs a point of length at least 1");
  for (const auto& g : generators) {
    if (g.size() != point.size()) throw DomainError("generator length differs from point length");
  }
  for (const auto& g : generators) {
    bool below = true;
    for (std::size_t j = 0; j < g.size() && below; ++j) below = Rational(g[j]) <= point[j];
    if (below) return true;
  }
  return phase_one_feasible(point, generators);
}

bool rational_lp_member(const std::vector<std::int64_t>& point, const std::vector<std::vector<std::int64_t>>& generators) {
  std::vector<Rational> q(point.begin(), point.end());
  return rational_lp_member(q, generators);
}

}  // namespace hl
