#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hilbertlab/ideal.hpp"

namespace hl {

/// Memoized powers K^n of one ideal (K^0 is the unit ideal).
class PowerCache {
 public:
  explicit PowerCache(IdealSubspace base);

  const IdealSubspace& base() const { return base_; }
  const HostPtr& host_ptr() const { return base_.host_ptr(); }
  const IdealSubspace& operator()(unsigned n);

 private:
  IdealSubspace base_;
  std::map<unsigned, IdealSubspace> cache_;
};

/// The ideals built from a pair Q ⊆ I: powers of both and the mixed products
/// QI^n, Q^k I, Q^k I^2.
class ReductionTower {
 public:
  ReductionTower(PowerCache& i_powers, IdealSubspace q);

  const IdealSubspace& i() const { return ipow_->base(); }
  const IdealSubspace& q() const { return qpow_.base(); }
  const TruncatedLocalAlgebra& host() const { return i().host(); }

  const IdealSubspace& i_power(unsigned n) { return (*ipow_)(n); }
  const IdealSubspace& q_power(unsigned n) { return qpow_(n); }
  const IdealSubspace& q_times_i_power(unsigned n);
  const IdealSubspace& q_power_times_i(unsigned k);
  const IdealSubspace& q_power_times_i_square(unsigned k);
  const IdealSubspace& maximal();

 private:
  PowerCache* ipow_;
  PowerCache qpow_;
  std::map<unsigned, IdealSubspace> qi_, qki_, qki2_;
  std::optional<IdealSubspace> m_;
};

struct ReductionDatum {
  std::vector<SparseVec> q_generators;
  unsigned reduction_number = 0;
  std::uint64_t seed = 0;
  unsigned attempts = 0;
};

/// ℓ(A/K), throwing NotPrimaryError when K is not certified m-primary.
std::size_t length_of_quotient(const IdealSubspace& k);

/// Smallest n <= n_max with I^{n+1} = QI^n, or nullopt. Throws DomainError
/// when Q is not contained in I.
std::optional<unsigned> check_reduction(ReductionTower& tower, unsigned n_max);

/// d seeded random combinations of the generators of I, retried up to
/// max_attempts times. Throws RefusalError when no attempt gives a reduction
/// with reduction number <= n_max.
ReductionDatum find_minimal_reduction(PowerCache& i_powers, unsigned d, std::uint64_t seed, unsigned max_attempts,
                                      unsigned n_max);

struct ValabregaVallaEntry {
  unsigned n = 0;
  bool holds = false;
  bool by_reduction = false;  // n > r: Q ∩ QI^n = QI^n, not recomputed
};

/// Q ∩ I^{n+1} = QI^n for 0 <= n <= n_max, computed for n <= min(n_max, r).
/// The intersection length comes from ℓ(A/Q) + ℓ(A/I^{n+1}) - ℓ(A/(Q+I^{n+1})).
std::vector<ValabregaVallaEntry> check_vv_condition(ReductionTower& tower, unsigned r, unsigned n_max);

enum class ClosednessStatus { verified, asserted, unverified, refuted };

const char* to_string(ClosednessStatus s);

struct MainBoundHypotheses {
  ClosednessStatus closedness = ClosednessStatus::unverified;
  bool i4_eq_qi3 = false;
  bool mi3_in_qi2 = false;
  bool q_cap_i2_eq_qi = false;

  bool closed_assumed() const {
    return closedness == ClosednessStatus::verified || closedness == ClosednessStatus::asserted;
  }
  bool all() const { return closed_assumed() && i4_eq_qi3 && mi3_in_qi2 && q_cap_i2_eq_qi; }
};

/// Flags for the reduction-number-three bound, each by direct comparison.
MainBoundHypotheses check_main_bound_hypotheses(ReductionTower& tower, ClosednessStatus closedness);

struct FiltrationLengths {
  std::size_t len_i2_qi = 0;                 // ℓ(I^2/QI)
  std::size_t len_i3_qi2 = 0;                // ℓ(I^3/QI^2)
  std::map<unsigned, std::size_t> len_c;     // n -> ℓ(I^{n+1}/Q^{n-1}I^2), 2 <= n <= n_max
  std::map<unsigned, std::size_t> len_l;     // n -> ℓ(Q^{n-1}I^2/Q^n I), 1 <= n <= n_max
};

/// Throws InvariantViolation if any difference of colengths is negative.
FiltrationLengths filtration_lengths(ReductionTower& tower, unsigned n_max);

}  // namespace hl
