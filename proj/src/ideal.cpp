#include "hilbertlab/ideal.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <tuple>

#include "hilbertlab/errors.hpp"

namespace hl {

namespace {

// Inputs to the closure: explicit elements, or all products left[i] * right[j].
struct ClosureInput {
  const std::vector<SparseVec>* elements = nullptr;
  const std::vector<SparseVec>* left = nullptr;
  const std::vector<SparseVec>* right = nullptr;
};

struct ClosureResult {
  std::optional<unsigned> floor;
  RowEchelon rows;
  std::vector<SparseVec> accepted;
};

enum CandidateKind : std::uint8_t { kChild = 0, kElement = 1, kPair = 2 };

struct Candidate {
  unsigned key;  // lower bound for the order of the candidate
  CandidateKind kind;
  std::uint64_t seq;
  std::uint32_t a, b;
};

struct ComesLater {
  bool operator()(const Candidate& x, const Candidate& y) const {
    return std::tie(x.key, x.kind, x.seq) > std::tie(y.key, y.kind, y.seq);
  }
};

SparseVec truncated(const SparseVec& v, std::size_t ncols) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size() && v.idx[i] < ncols; ++i) {
    out.idx.push_back(v.idx[i]);
    out.val.push_back(v.val[i]);
  }
  return out;
}

void scatter(const SparseVec& v, Scalar* work, std::size_t ncols, std::size_t& lo, std::size_t& hi) {
  lo = ncols;
  hi = 0;
  for (std::size_t i = 0; i < v.size() && v.idx[i] < ncols; ++i) {
    work[v.idx[i]] = v.val[i];
    lo = std::min<std::size_t>(lo, v.idx[i]);
    hi = v.idx[i] + 1u;
  }
}

// work[lo, hi) <- x_var * row, truncated to ncols.
void multiply_row_by_variable(const TruncatedLocalAlgebra& host, const RowEchelon::Row& row, std::size_t var,
                              Scalar* work, std::size_t ncols, std::size_t& lo, std::size_t& hi) {
  const std::uint64_t p = host.field().modulus();
  lo = ncols;
  hi = 0;
  for (std::size_t j = 0; j < row.values.size(); ++j) {
    const Scalar v = row.values[j];
    if (v == 0) continue;
    const std::size_t c = row.pivot + j;
    const auto cols = host.mul_var_cols(c, var);
    const auto vals = host.mul_var_vals(c, var);
    for (std::size_t t = 0; t < cols.size(); ++t) {
      const std::size_t col = cols[t];
      if (col >= ncols) break;
      work[col] = static_cast<Scalar>((work[col] + static_cast<std::uint64_t>(v) * vals[t]) % p);
      lo = std::min(lo, col);
      hi = std::max(hi, col + 1);
    }
  }
}

// Span of the inputs closed under the variables, computed in A/m^g. Blocks
// are finalized in increasing degree; the first block whose columns are all
// pivots certifies m^floor ⊆ K and ends the computation.
ClosureResult closure(const TruncatedLocalAlgebra& host, const ClosureInput& in, unsigned g) {
  const std::size_t ncols = host.degree_start(g);
  ClosureResult res{std::nullopt, RowEchelon(ncols, host.field()), {}};
  std::vector<Scalar> work(ncols, 0);
  std::vector<std::size_t> block_pivots(g, 0);
  std::priority_queue<Candidate, std::vector<Candidate>, ComesLater> queue;
  std::uint64_t seq = 0;

  if (in.elements) {
    for (std::size_t i = 0; i < in.elements->size(); ++i) {
      const unsigned key = host.order_of((*in.elements)[i]);
      if (key < g) queue.push({key, kElement, seq++, static_cast<std::uint32_t>(i), 0});
    }
  }
  if (in.left && in.right) {
    std::vector<unsigned> right_order;
    for (const auto& r : *in.right) right_order.push_back(host.order_of(r));
    for (std::size_t i = 0; i < in.left->size(); ++i) {
      const unsigned oi = host.order_of((*in.left)[i]);
      for (std::size_t j = 0; j < in.right->size(); ++j) {
        const unsigned key = oi + right_order[j];
        if (key < g) queue.push({key, kPair, seq++, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
      }
    }
  }

  auto block_full = [&](unsigned k) {
    return block_pivots[k] == host.degree_start(k + 1) - host.degree_start(k);
  };

  unsigned next_block = 0;
  while (!queue.empty() && !res.floor) {
    const Candidate cand = queue.top();
    for (; next_block < cand.key; ++next_block) {
      if (block_full(next_block)) {
        res.floor = next_block;
        break;
      }
    }
    if (res.floor) break;
    queue.pop();

    std::size_t lo = 0, hi = 0;
    SparseVec product;
    switch (cand.kind) {
      case kChild:
        multiply_row_by_variable(host, res.rows.rows()[cand.a], cand.b, work.data(), ncols, lo, hi);
        break;
      case kElement:
        scatter((*in.elements)[cand.a], work.data(), ncols, lo, hi);
        break;
      case kPair:
        product = host.multiply((*in.left)[cand.a], (*in.right)[cand.b], g);
        scatter(product, work.data(), ncols, lo, hi);
        break;
    }
    if (lo >= hi) continue;
    const std::uint32_t pivot = res.rows.insert(work.data(), lo, hi);
    if (pivot == RowEchelon::npos) continue;

    const unsigned d = host.column_degree(pivot);
    ++block_pivots[d];
    if (cand.kind == kElement) res.accepted.push_back(truncated((*in.elements)[cand.a], ncols));
    if (cand.kind == kPair) res.accepted.push_back(std::move(product));
    if (d + 1 < g) {
      const auto row = static_cast<std::uint32_t>(res.rows.rank() - 1);
      for (std::size_t v = 0; v < host.nvars(); ++v) queue.push({d + 1, kChild, seq++, row, static_cast<std::uint32_t>(v)});
    }
  }
  for (; !res.floor && next_block < g; ++next_block) {
    if (block_full(next_block)) res.floor = next_block;
  }

  if (res.floor) {
    const unsigned f = *res.floor;
    res.rows.truncate(host.degree_start(f));
    const std::size_t keep = host.degree_start(f + 1);
    for (auto& gen : res.accepted) gen = truncated(gen, keep);
  }
  return res;
}

unsigned max_order(const TruncatedLocalAlgebra& host, const std::vector<SparseVec>& v) {
  unsigned o = 0;
  for (const auto& x : v) {
    if (!x.empty()) o = std::max(o, host.order_of(x));
  }
  return o;
}

unsigned min_order(const TruncatedLocalAlgebra& host, const std::vector<SparseVec>& v) {
  unsigned o = host.order();
  for (const auto& x : v) {
    if (!x.empty()) o = std::min(o, host.order_of(x));
  }
  return o;
}

// Runs the closure with a provable floor bound when one is known, otherwise
// with a growing working order up to the host order. With a bound the first
// working order is `guess`; a full block below any working order is already
// a certificate, so a low guess only costs a retry.
IdealSubspace build(const HostPtr& host, const ClosureInput& in, std::optional<unsigned> bound, unsigned start,
                    std::optional<unsigned> guess = std::nullopt) {
  const unsigned N = host->order();
  if (bound) {
    const unsigned top = std::min(*bound + 1, N);
    unsigned g = std::min(top, std::max(8u, guess.value_or(top)));
    for (;;) {
      ClosureResult r = closure(*host, in, g);
      if (r.floor) return IdealSubspace(host, std::move(r.accepted), r.floor, std::move(r.rows));
      if (g == top) break;
      g = std::min(top, g + std::max(2u, g / 4));
    }
    if (*bound + 1 > N) {
      throw TruncationExhausted("product needs truncation order " + std::to_string(*bound + 1) + " but the host has " +
                                    std::to_string(N),
                                static_cast<int>(*bound + 1));
    }
    throw InvariantViolation("no Nakayama floor below a provable bound");
  }
  unsigned g = std::min(N, std::max(8u, start));
  for (;;) {
    ClosureResult r = closure(*host, in, g);
    if (r.floor || g == N) return IdealSubspace(host, std::move(r.accepted), r.floor, std::move(r.rows));
    g = std::min(N, 2 * g);
  }
}

void require_same_host(const IdealSubspace& a, const IdealSubspace& b) {
  if (a.host_ptr() != b.host_ptr()) throw StructuralError("ideals live in different truncated algebras");
}

std::optional<unsigned> lowest_full_block(const TruncatedLocalAlgebra& host, const RowEchelon& rows, unsigned limit) {
  for (unsigned k = 0; k < limit; ++k) {
    const std::size_t lo = host.degree_start(k), hi = host.degree_start(k + 1);
    if (hi > rows.ncols()) return std::nullopt;
    if (rows.pivots_in(lo, hi) == hi - lo) return k;
  }
  return std::nullopt;
}

SparseVec row_to_sparse(const RowEchelon::Row& row) {
  SparseVec v;
  for (std::size_t j = 0; j < row.values.size(); ++j) {
    if (row.values[j] != 0) {
      v.idx.push_back(static_cast<std::uint32_t>(row.pivot + j));
      v.val.push_back(row.values[j]);
    }
  }
  return v;
}

}  // namespace

IdealSubspace::IdealSubspace(HostPtr host, std::vector<SparseVec> generators, std::optional<unsigned> floor,
                             RowEchelon span)
    : host_(std::move(host)), gens_(std::move(generators)), floor_(floor), span_(std::move(span)) {}

ColengthCertificate IdealSubspace::colength() const {
  if (!floor_) {
    throw NotPrimaryError("possibly not m-primary: no Nakayama stabilization below truncation order " +
                          std::to_string(host_->order()));
  }
  return {span_.ncols() - span_.rank(), *floor_};
}

std::size_t IdealSubspace::codimension_below(std::size_t D) const {
  const std::size_t lim = std::min(D, span_.ncols());
  return lim - span_.pivots_in(0, lim);
}

bool IdealSubspace::contains(const SparseVec& element) const {
  std::vector<Scalar> work(span_.ncols(), 0);
  std::size_t lo = 0, hi = 0;
  scatter(element, work.data(), span_.ncols(), lo, hi);
  if (lo >= hi) return true;
  return span_.reduces_to_zero(work.data(), lo, hi);
}

IdealSubspace ideal_from_generators(const HostPtr& host, std::vector<SparseVec> generators) {
  ClosureInput in;
  in.elements = &generators;
  return build(host, in, std::nullopt, 2 * max_order(*host, generators) + 2);
}

IdealSubspace ideal_from_polynomials(const HostPtr& host, const std::vector<PolyExpr>& polys) {
  std::vector<SparseVec> gens;
  for (const auto& f : polys) {
    SparseVec v = host->normal_form(f, host->order());
    if (!v.empty()) gens.push_back(std::move(v));
  }
  return ideal_from_generators(host, std::move(gens));
}

IdealSubspace unit_ideal(const HostPtr& host) { return ideal_from_generators(host, {host->one()}); }

IdealSubspace maximal_ideal(const HostPtr& host) {
  std::vector<SparseVec> vars;
  for (std::size_t i = 0; i < host->nvars(); ++i) {
    SparseVec v = host->variable(i);
    if (!v.empty()) vars.push_back(std::move(v));
  }
  return ideal_from_generators(host, std::move(vars));
}

IdealSubspace ideal_product(const IdealSubspace& a, const IdealSubspace& b) {
  require_same_host(a, b);
  ClosureInput in;
  in.left = &a.generators();
  in.right = &b.generators();
  std::optional<unsigned> bound, guess;
  if (a.floor() && b.floor()) {
    bound = *a.floor() + *b.floor();
    // m^{fa} b ⊆ ab, so the floor of ab is usually near fa + ord(b).
    guess = std::max(*a.floor() + min_order(a.host(), b.generators()), *b.floor() + min_order(a.host(), a.generators())) + 2;
  }
  const unsigned start = max_order(a.host(), a.generators()) + max_order(b.host(), b.generators()) + 2;
  return build(a.host_ptr(), in, bound, start, guess);
}

IdealSubspace ideal_power(const IdealSubspace& a, unsigned n) {
  if (n == 0) return unit_ideal(a.host_ptr());
  IdealSubspace acc = a;
  for (unsigned i = 1; i < n; ++i) acc = ideal_product(a, acc);
  return acc;
}

IdealSubspace ideal_sum(const IdealSubspace& a, const IdealSubspace& b) {
  require_same_host(a, b);
  const TruncatedLocalAlgebra& host = a.host();
  const std::size_t D = std::min(a.span().ncols(), b.span().ncols());
  const IdealSubspace& base = a.span().ncols() <= b.span().ncols() ? a : b;
  const IdealSubspace& other = &base == &a ? b : a;

  RowEchelon rows(D, host.field());
  for (const auto& row : base.span().rows()) rows.adopt(row);
  std::vector<Scalar> work(D, 0);
  for (const auto& row : other.span().rows()) {
    if (row.pivot >= D) continue;
    const std::size_t end = std::min<std::size_t>(row.end(), D);
    std::copy(row.values.begin(), row.values.begin() + static_cast<std::ptrdiff_t>(end - row.pivot),
              work.begin() + row.pivot);
    rows.insert(work.data(), row.pivot, end);
  }

  std::optional<unsigned> floor;
  if (a.floor() && b.floor()) floor = std::min(*a.floor(), *b.floor());
  const unsigned limit = floor ? *floor : host.order();
  if (auto full = lowest_full_block(host, rows, limit)) floor = full;
  if (floor) rows.truncate(host.degree_start(*floor));

  std::vector<SparseVec> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return IdealSubspace(a.host_ptr(), std::move(gens), floor, std::move(rows));
}

IdealSubspace ideal_intersect(const IdealSubspace& a, const IdealSubspace& b) {
  require_same_host(a, b);
  const TruncatedLocalAlgebra& host = a.host();
  const PrimeField& field = host.field();
  const std::uint32_t p = field.modulus();
  const std::size_t D = std::max(a.span().ncols(), b.span().ncols());

  // W = a^⊥ + b^⊥ inside the dual of the first D columns.
  RowEchelon W(D, field);
  std::vector<Scalar> work(D, 0);
  for (const IdealSubspace* k : {&a, &b}) {
    RowEchelon r = k->span();
    r.make_reduced();
    std::vector<SparseVec> perp(r.ncols());
    for (const auto& row : r.rows()) {
      for (std::size_t j = 1; j < row.values.size(); ++j) {
        const std::size_t c = row.pivot + j;
        if (row.values[j] != 0 && !r.is_pivot(c)) {
          perp[c].idx.push_back(row.pivot);
          perp[c].val.push_back(field.neg(row.values[j]));
        }
      }
    }
    for (std::size_t c = 0; c < r.ncols(); ++c) {
      if (r.is_pivot(c)) continue;
      std::size_t lo = c, hi = c + 1;
      work[c] = 1;
      for (std::size_t t = 0; t < perp[c].size(); ++t) {
        work[perp[c].idx[t]] = perp[c].val[t];
        lo = std::min<std::size_t>(lo, perp[c].idx[t]);
      }
      W.insert(work.data(), lo, hi);
    }
  }
  W.make_reduced();

  // a ∩ b = W^⊥: one vector per non-pivot column of W.
  std::vector<SparseVec> cols_of(D);
  for (const auto& row : W.rows()) {
    for (std::size_t j = 1; j < row.values.size(); ++j) {
      if (row.values[j] != 0) {
        cols_of[row.pivot + j].idx.push_back(row.pivot);
        cols_of[row.pivot + j].val.push_back(p - row.values[j]);
      }
    }
  }
  RowEchelon rows(D, field);
  for (std::size_t c = 0; c < D; ++c) {
    if (W.is_pivot(c)) continue;
    std::size_t lo = c;
    work[c] = 1;
    for (std::size_t t = 0; t < cols_of[c].size(); ++t) {
      work[cols_of[c].idx[t]] = cols_of[c].val[t];
      lo = std::min<std::size_t>(lo, cols_of[c].idx[t]);
    }
    rows.insert(work.data(), lo, c + 1);
  }

  std::optional<unsigned> floor;
  if (a.floor() && b.floor()) floor = std::max(*a.floor(), *b.floor());
  const unsigned limit = floor ? *floor : host.order();
  if (auto full = lowest_full_block(host, rows, limit)) floor = full;
  if (floor) rows.truncate(host.degree_start(*floor));

  std::vector<SparseVec> gens;
  for (const auto& row : rows.rows()) gens.push_back(row_to_sparse(row));
  if (floor && *floor < host.order()) {
    for (std::size_t c = host.degree_start(*floor); c < host.degree_start(*floor + 1); ++c) {
      gens.push_back(SparseVec{{static_cast<std::uint32_t>(c)}, {1}});
    }
  }
  return IdealSubspace(a.host_ptr(), std::move(gens), floor, std::move(rows));
}

ColengthCertificate colength(const IdealSubspace& k) { return k.colength(); }

bool ideal_contains(const IdealSubspace& a, const IdealSubspace& b) {
  require_same_host(a, b);
  const IdealSubspace s = ideal_sum(a, b);
  const std::size_t D = a.host().dimension();
  return s.codimension_below(D) == a.codimension_below(D);
}

bool ideal_equal(const IdealSubspace& a, const IdealSubspace& b) {
  require_same_host(a, b);
  const IdealSubspace s = ideal_sum(a, b);
  const std::size_t D = a.host().dimension();
  const std::size_t cs = s.codimension_below(D);
  return cs == a.codimension_below(D) && cs == b.codimension_below(D);
}

bool is_closed_under_variables(const IdealSubspace& k) {
  const RowEchelon& rows = k.span();
  std::vector<Scalar> work(rows.ncols(), 0);
  for (const auto& row : rows.rows()) {
    for (std::size_t v = 0; v < k.host().nvars(); ++v) {
      std::size_t lo = 0, hi = 0;
      multiply_row_by_variable(k.host(), row, v, work.data(), rows.ncols(), lo, hi);
      if (lo < hi && !rows.reduces_to_zero(work.data(), lo, hi)) return false;
    }
  }
  return true;
}

std::vector<SparseVec> span_elements(const IdealSubspace& k) {
  std::vector<SparseVec> out;
  for (const auto& row : k.span().rows()) out.push_back(row_to_sparse(row));
  return out;
}

}  // namespace hl
