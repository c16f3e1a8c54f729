#include "hilbertlab/reduction.hpp"

#include <random>
#include <string>

#include "hilbertlab/errors.hpp"

namespace hl {

namespace {

// small ⊆ big is known; equality then reduces to equal colengths.
bool equal_nested(const IdealSubspace& big, const IdealSubspace& small) {
  if (big.certified() && small.certified()) return big.colength().value == small.colength().value;
  return ideal_equal(big, small);
}

std::size_t difference(std::size_t outer, std::size_t inner, const char* what) {
  if (inner > outer) throw InvariantViolation(std::string("negative length for ") + what);
  return outer - inner;
}

template <class F>
const IdealSubspace& memo(std::map<unsigned, IdealSubspace>& cache, unsigned key, F make) {
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make()).first;
  return it->second;
}

}  // namespace

PowerCache::PowerCache(IdealSubspace base) : base_(std::move(base)) {}

const IdealSubspace& PowerCache::operator()(unsigned n) {
  if (n == 1) return base_;
  if (n == 0) return memo(cache_, 0, [&] { return unit_ideal(base_.host_ptr()); });
  auto it = cache_.find(n);
  if (it != cache_.end()) return it->second;
  const IdealSubspace& prev = (*this)(n - 1);
  return cache_.emplace(n, ideal_product(base_, prev)).first->second;
}

ReductionTower::ReductionTower(PowerCache& i_powers, IdealSubspace q) : ipow_(&i_powers), qpow_(std::move(q)) {}

const IdealSubspace& ReductionTower::q_times_i_power(unsigned n) {
  if (n == 0) return q();
  return memo(qi_, n, [&] { return ideal_product(q(), i_power(n)); });
}

const IdealSubspace& ReductionTower::q_power_times_i(unsigned k) {
  if (k == 0) return i();
  // Q (Q^{k-1} I): three-generator products stay cheaper than I Q^k.
  return memo(qki_, k, [&] { return ideal_product(q(), q_power_times_i(k - 1)); });
}

const IdealSubspace& ReductionTower::q_power_times_i_square(unsigned k) {
  if (k == 0) return i_power(2);
  return memo(qki2_, k, [&] { return ideal_product(q(), q_power_times_i_square(k - 1)); });
}

const IdealSubspace& ReductionTower::maximal() {
  if (!m_) m_ = maximal_ideal(i().host_ptr());
  return *m_;
}

std::size_t length_of_quotient(const IdealSubspace& k) { return k.colength().value; }

std::optional<unsigned> check_reduction(ReductionTower& tower, unsigned n_max) {
  if (!ideal_contains(tower.i(), tower.q())) throw DomainError("Q is not contained in I");
  for (unsigned n = 0; n <= n_max; ++n) {
    if (equal_nested(tower.i_power(n + 1), tower.q_times_i_power(n))) return n;
  }
  return std::nullopt;
}

ReductionDatum find_minimal_reduction(PowerCache& i_powers, unsigned d, std::uint64_t seed, unsigned max_attempts,
                                      unsigned n_max) {
  const IdealSubspace& i = i_powers.base();
  const TruncatedLocalAlgebra& host = i.host();
  const std::uint32_t p = host.field().modulus();
  const auto& gens = i.generators();
  if (gens.empty()) throw DomainError("the zero ideal has no reduction");

  std::mt19937_64 rng(seed);
  std::vector<Scalar> dense(host.dimension(), 0);
  for (unsigned attempt = 1; attempt <= max_attempts; ++attempt) {
    std::vector<SparseVec> qgens;
    for (unsigned k = 0; k < d; ++k) {
      for (const auto& g : gens) {
        const Scalar c = static_cast<Scalar>(rng() % p);
        if (c == 0) continue;
        for (std::size_t t = 0; t < g.size(); ++t) {
          dense[g.idx[t]] = host.field().add(dense[g.idx[t]], host.field().mul(c, g.val[t]));
        }
      }
      SparseVec v;
      for (std::size_t c = 0; c < dense.size(); ++c) {
        if (dense[c] != 0) {
          v.idx.push_back(static_cast<std::uint32_t>(c));
          v.val.push_back(dense[c]);
          dense[c] = 0;
        }
      }
      qgens.push_back(std::move(v));
    }
    ReductionTower tower(i_powers, ideal_from_generators(i.host_ptr(), qgens));
    if (!tower.q().certified()) continue;
    if (auto r = check_reduction(tower, n_max)) return {std::move(qgens), *r, seed, attempt};
  }
  throw RefusalError("no reduction found up to n_max = " + std::to_string(n_max) + " in " +
                     std::to_string(max_attempts) + " attempts");
}

std::vector<ValabregaVallaEntry> check_vv_condition(ReductionTower& tower, unsigned r, unsigned n_max) {
  std::vector<ValabregaVallaEntry> out;
  const std::size_t len_q = length_of_quotient(tower.q());
  for (unsigned n = 0; n <= n_max; ++n) {
    if (n > r) {
      out.push_back({n, true, true});
      continue;
    }
    const IdealSubspace& in1 = tower.i_power(n + 1);
    const std::size_t len_i = length_of_quotient(in1);
    const std::size_t len_sum = length_of_quotient(ideal_sum(tower.q(), in1));
    const std::size_t len_cap = len_q + len_i - len_sum;
    out.push_back({n, len_cap == length_of_quotient(tower.q_times_i_power(n)), false});
  }
  return out;
}

const char* to_string(ClosednessStatus s) {
  switch (s) {
    case ClosednessStatus::verified: return "verified";
    case ClosednessStatus::asserted: return "asserted";
    case ClosednessStatus::unverified: return "unverified";
    case ClosednessStatus::refuted: return "refuted";
  }
  return "unverified";
}

MainBoundHypotheses check_main_bound_hypotheses(ReductionTower& tower, ClosednessStatus closedness) {
  MainBoundHypotheses h;
  h.closedness = closedness;
  h.i4_eq_qi3 = equal_nested(tower.i_power(4), tower.q_times_i_power(3));
  const IdealSubspace mi3 = ideal_product(tower.maximal(), tower.i_power(3));
  h.mi3_in_qi2 = ideal_contains(tower.q_times_i_power(2), mi3);
  const auto vv = check_vv_condition(tower, 1, 1);
  h.q_cap_i2_eq_qi = vv[1].holds;
  return h;
}

FiltrationLengths filtration_lengths(ReductionTower& tower, unsigned n_max) {
  FiltrationLengths f;
  const std::size_t a_i2 = length_of_quotient(tower.i_power(2));
  const std::size_t a_i3 = length_of_quotient(tower.i_power(3));
  f.len_i2_qi = difference(length_of_quotient(tower.q_times_i_power(1)), a_i2, "I^2/QI");
  f.len_i3_qi2 = difference(length_of_quotient(tower.q_times_i_power(2)), a_i3, "I^3/QI^2");
  for (unsigned n = 1; n <= n_max; ++n) {
    const std::size_t a_qi2 = length_of_quotient(tower.q_power_times_i_square(n - 1));
    f.len_l[n] = difference(length_of_quotient(tower.q_power_times_i(n)), a_qi2, "Q^{n-1}I^2/Q^nI");
    if (n >= 2) f.len_c[n] = difference(a_qi2, length_of_quotient(tower.i_power(n + 1)), "I^{n+1}/Q^{n-1}I^2");
  }
  return f;
}

}  // namespace hl
