#include "hilbertlab/determinantal.hpp"

#include <algorithm>
#include <memory>
#include <numeric>

#include "hilbertlab/errors.hpp"

namespace hl {

namespace {

std::string entry_name(unsigned row, unsigned col, unsigned t) {
  if (t <= 9) return "x" + std::to_string(row) + std::to_string(col);
  return "x" + std::to_string(row) + "_" + std::to_string(col);
}

int permutation_sign(const std::vector<unsigned>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
  }
  return inversions % 2 ? -1 : 1;
}

// Increasing s-subsets of {1..t} in lexicographic order.
std::vector<std::vector<unsigned>> column_subsets(unsigned s, unsigned t) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> a(s);
  std::iota(a.begin(), a.end(), 1u);
  for (;;) {
    out.push_back(a);
    int u = static_cast<int>(s) - 1;
    while (u >= 0 && a[static_cast<std::size_t>(u)] == t - s + 1 + static_cast<unsigned>(u)) --u;
    if (u < 0) return out;
    ++a[static_cast<std::size_t>(u)];
    for (std::size_t w = static_cast<std::size_t>(u) + 1; w < s; ++w) a[w] = a[w - 1] + 1;
  }
}

HostPtr make_host(const RingPresentation& p, unsigned order) {
  return std::make_shared<const TruncatedLocalAlgebra>(p, order);
}

SparseVec unit_vector(std::uint32_t col) { return SparseVec{{col}, {1}}; }

}  // namespace

DeterminantalInstance build_determinantal(unsigned s, unsigned t, std::uint32_t characteristic) {
  if (s < 2 || s > t) throw DomainError("determinantal shape needs 2 <= s <= t (got s=" + std::to_string(s) + ", t=" + std::to_string(t) + ")");
  if (s * t > kMaxVariables) throw DomainError("at most 16 matrix entries are supported");
  DeterminantalInstance inst;
  inst.s = s;
  inst.t = t;
  RingPresentation& p = inst.presentation;
  p.characteristic = characteristic;
  for (unsigned i = 1; i <= s; ++i) {
    for (unsigned j = 1; j <= t; ++j) p.variables.push_back(entry_name(i, j, t));
  }
  const std::size_t nv = p.variables.size();

  for (const auto& cols : column_subsets(s, t)) {
    ExpandedPoly minor;
    std::vector<unsigned> perm(s);
    std::iota(perm.begin(), perm.end(), 0u);
    do {
      Exponents e(nv, 0);
      for (unsigned u = 0; u < s; ++u) ++e[inst.var(perm[u] + 1, cols[u])];
      minor[e] += permutation_sign(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    p.relations.push_back(from_expanded(minor, nv));
  }

  p.dimension = s * t - (t - s + 1);
  p.cohen_macaulay = true;
  for (std::size_t v = 0; v < nv; ++v) p.ideal.push_back(make_var(v));
  for (unsigned i = 1; i <= s; ++i) {
    for (unsigned j = 1; j <= t; ++j) {
      const int diff = static_cast<int>(j) - static_cast<int>(i);
      if (diff < 0 || diff > static_cast<int>(t - s)) p.reduction.push_back(make_var(inst.var(i, j)));
    }
  }
  for (unsigned i = 2; i <= s; ++i) {
    for (unsigned j = 1; j <= t; ++j) {
      const int diff = static_cast<int>(j) - static_cast<int>(i);
      if (diff >= 0 && diff <= static_cast<int>(t - s)) {
        p.reduction.push_back(make_sub(make_var(inst.var(i, j)), make_var(inst.var(i - 1, j - 1))));
      }
    }
  }
  if (p.reduction.size() != p.dimension) throw InvariantViolation("parameter ideal size differs from the dimension");
  validate_presentation(p);
  return inst;
}

StraighteningResult straighten(unsigned s, unsigned t, const std::vector<MatrixEntry>& factors) {
  if (factors.size() != s) throw DomainError("straightening needs exactly s = " + std::to_string(s) + " factors");
  for (const auto& f : factors) {
    if (f.row < 1 || f.row > s || f.col < 1 || f.col > t) throw DomainError("matrix entry out of range");
  }
  StraighteningResult res;
  std::vector<unsigned> k;
  for (const auto& f : factors) {
    const int diff = static_cast<int>(f.col) - static_cast<int>(f.row);
    if (diff < 0 || diff > static_cast<int>(t - s)) {
      res.status = StraighteningResult::Status::in_qI;
      res.trace.push_back("kill " + entry_name(f.row, f.col, t));
      return res;
    }
    const unsigned col = f.col - f.row + 1;
    if (f.row > 1) res.trace.push_back("shift " + entry_name(f.row, f.col, t) + " -> " + entry_name(1, col, t));
    k.push_back(col);
  }
  std::sort(k.begin(), k.end());
  for (unsigned u = 0; u < s; ++u) {
    res.indices.push_back(k[u] + u);
    if (u > 0) res.trace.push_back("spread " + entry_name(1, k[u], t) + " -> " + entry_name(u + 1, k[u] + u, t));
  }
  res.status = StraighteningResult::Status::standard;
  return res;
}

std::vector<MatrixEntry> standard_monomial(const std::vector<unsigned>& indices) {
  std::vector<MatrixEntry> out;
  for (unsigned u = 0; u < indices.size(); ++u) out.push_back({u + 1, indices[u]});
  return out;
}

std::vector<SymbolicStep> symbolic_power_reduction(unsigned s, unsigned t) {
  std::vector<SymbolicStep> steps;
  for (const auto& a : column_subsets(s, t)) {
    SymbolicStep step;
    step.columns = a;
    step.ok = true;
    std::vector<unsigned> perm(s);
    std::iota(perm.begin(), perm.end(), 0u);
    do {
      std::vector<MatrixEntry> term;
      for (unsigned u = 0; u < s; ++u) term.push_back({perm[u] + 1, a[u]});
      const StraighteningResult r = straighten(s, t, term);
      const bool identity = std::is_sorted(perm.begin(), perm.end());
      if (identity) {
        step.ok = step.ok && r.status == StraighteningResult::Status::standard && r.indices == a;
      } else if (r.status == StraighteningResult::Status::in_qI) {
        ++step.terms_in_qI;
      } else if (r.indices < a) {
        ++step.terms_lower;
      } else {
        step.ok = false;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    steps.push_back(std::move(step));
  }
  return steps;
}

PowerReductionCertificate verify_power_reduction(const DeterminantalInstance& inst) {
  PowerReductionCertificate cert;
  const HostPtr host = make_host(inst.presentation, inst.s + 2);
  const IdealSubspace m = maximal_ideal(host);
  const IdealSubspace q = ideal_from_polynomials(host, inst.presentation.reduction);
  cert.linear = ideal_equal(ideal_power(m, inst.s), ideal_product(q, ideal_power(m, inst.s - 1)));
  cert.steps = symbolic_power_reduction(inst.s, inst.t);
  cert.symbolic = std::all_of(cert.steps.begin(), cert.steps.end(), [](const SymbolicStep& st) { return st.ok; });
  if (cert.linear != cert.symbolic) {
    throw InvariantViolation("symbolic and linear-algebra routes disagree on I^s = qI^{s-1}");
  }
  return cert;
}

std::vector<StraighteningCheck> check_straightening(const DeterminantalInstance& inst) {
  RingPresentation poly = inst.presentation;
  poly.relations.clear();
  const HostPtr host = make_host(poly, inst.s + 2);
  const IdealSubspace l = maximal_ideal(host);
  const IdealSubspace q = ideal_from_polynomials(host, poly.reduction);
  const IdealSubspace ql = ideal_product(q, ideal_power(l, inst.s - 1));
  const std::uint32_t p = host->field().modulus();

  auto column = [&](const std::vector<MatrixEntry>& mono) {
    Exponents e(host->nvars(), 0);
    for (const auto& f : mono) ++e[inst.var(f.row, f.col)];
    return host->column_of(e);
  };

  std::vector<StraighteningCheck> out;
  const std::size_t nv = host->nvars();
  std::vector<std::size_t> pick(inst.s, 0);  // non-decreasing variable indices
  for (;;) {
    StraighteningCheck chk;
    for (const std::size_t v : pick) chk.monomial.push_back({static_cast<unsigned>(v / inst.t) + 1, static_cast<unsigned>(v % inst.t) + 1});
    chk.result = straighten(inst.s, inst.t, chk.monomial);
    const std::uint32_t c = column(chk.monomial);
    if (chk.result.status == StraighteningResult::Status::in_qI) {
      chk.congruence_certified = ql.contains(unit_vector(c));
    } else {
      const std::uint32_t cs = column(standard_monomial(chk.result.indices));
      SparseVec diff;
      if (c != cs) {
        diff.idx = {std::min(c, cs), std::max(c, cs)};
        diff.val = c < cs ? std::vector<Scalar>{1, p - 1} : std::vector<Scalar>{p - 1, 1};
      }
      chk.congruence_certified = ql.contains(diff);
      chk.standard_survives = !ql.contains(unit_vector(cs));
    }
    out.push_back(std::move(chk));

    int u = static_cast<int>(inst.s) - 1;
    while (u >= 0 && pick[static_cast<std::size_t>(u)] == nv - 1) --u;
    if (u < 0) break;
    const std::size_t next = pick[static_cast<std::size_t>(u)] + 1;
    for (std::size_t w = static_cast<std::size_t>(u); w < inst.s; ++w) pick[w] = next;
  }
  return out;
}

DeterminantalReduction verify_valabrega_valla(const DeterminantalInstance& inst, unsigned n_max) {
  DeterminantalReduction out;
  const HostPtr host = make_host(inst.presentation, n_max + inst.s + 2);
  PowerCache m(maximal_ideal(host));
  ReductionTower tower(m, ideal_from_polynomials(host, inst.presentation.reduction));
  out.reduction_number = check_reduction(tower, std::max(n_max, inst.s));
  out.previous_power_differs = !ideal_equal(tower.i_power(inst.s - 1), tower.q_times_i_power(inst.s - 2));
  const unsigned r = out.reduction_number.value_or(n_max);
  out.vv = check_vv_condition(tower, r, n_max);
  return out;
}

bool verify_disjoint_intersections(unsigned i_vars, unsigned j_vars, unsigned i_max, unsigned j_max) {
  RingPresentation p;
  for (unsigned v = 1; v <= i_vars; ++v) p.variables.push_back("x" + std::to_string(v));
  for (unsigned v = 1; v <= j_vars; ++v) p.variables.push_back("y" + std::to_string(v));
  p.dimension = i_vars + j_vars;
  const HostPtr host = make_host(p, std::max(2u, i_max + j_max + 2));
  std::vector<SparseVec> xs, ys;
  for (unsigned v = 0; v < i_vars; ++v) xs.push_back(host->variable(v));
  for (unsigned v = 0; v < j_vars; ++v) ys.push_back(host->variable(i_vars + v));
  PowerCache ipow(ideal_from_generators(host, xs));
  PowerCache jpow(ideal_from_generators(host, ys));
  for (unsigned i = 0; i <= i_max; ++i) {
    for (unsigned j = 0; j <= j_max; ++j) {
      if (!ideal_equal(ideal_intersect(ipow(i), jpow(j)), ideal_product(ipow(i), jpow(j)))) return false;
    }
  }
  return true;
}

}  // namespace hl
