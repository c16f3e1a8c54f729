#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "hilbertlab/algebra.hpp"
#include "hilbertlab/echelon.hpp"

namespace hl {

using HostPtr = std::shared_ptr<const TruncatedLocalAlgebra>;

/// ℓ(A/K) together with the degree s at which m^s ⊆ K was certified: every
/// standard monomial of degree s is a pivot of K + m^{s+1}, so Nakayama gives
/// m^s ⊆ K and the count of non-pivot columns below degree s is exact.
struct ColengthCertificate {
  std::size_t value = 0;
  unsigned stabilized_at = 0;
};

/// An ideal of the host realized as an echelonized subspace of A/m^N.
///
/// Certified ideals (m^floor ⊆ K proven) keep their span over the columns of
/// degree < floor only. Uncertified ideals keep the whole of A/m^N; their
/// colength is unknown. The generator list generates K as an ideal; each
/// generator is stored modulo m^{floor+1}, which by Nakayama still generates K.
class IdealSubspace {
 public:
  IdealSubspace(HostPtr host, std::vector<SparseVec> generators, std::optional<unsigned> floor, RowEchelon span);

  const HostPtr& host_ptr() const { return host_; }
  const TruncatedLocalAlgebra& host() const { return *host_; }
  const std::vector<SparseVec>& generators() const { return gens_; }
  const RowEchelon& span() const { return span_; }
  std::optional<unsigned> floor() const { return floor_; }
  bool certified() const { return floor_.has_value(); }

  /// Throws NotPrimaryError for uncertified ideals.
  ColengthCertificate colength() const;

  /// Number of non-pivot columns below column D (columns at or beyond the
  /// stored span count as pivots when certified).
  std::size_t codimension_below(std::size_t D) const;

  bool contains(const SparseVec& element) const;

 private:
  HostPtr host_;
  std::vector<SparseVec> gens_;
  std::optional<unsigned> floor_;
  RowEchelon span_;
};

/// Smallest ideal containing the given elements. Non-m-primary input gives an
/// uncertified ideal.
IdealSubspace ideal_from_generators(const HostPtr& host, std::vector<SparseVec> generators);
IdealSubspace ideal_from_polynomials(const HostPtr& host, const std::vector<PolyExpr>& polys);
IdealSubspace unit_ideal(const HostPtr& host);
IdealSubspace maximal_ideal(const HostPtr& host);

/// Throws StructuralError when the hosts differ; TruncationExhausted when the
/// host order is too small to certify the result.
IdealSubspace ideal_product(const IdealSubspace& a, const IdealSubspace& b);
IdealSubspace ideal_power(const IdealSubspace& a, unsigned n);
IdealSubspace ideal_sum(const IdealSubspace& a, const IdealSubspace& b);
IdealSubspace ideal_intersect(const IdealSubspace& a, const IdealSubspace& b);

ColengthCertificate colength(const IdealSubspace& k);

/// b ⊆ a.
bool ideal_contains(const IdealSubspace& a, const IdealSubspace& b);
bool ideal_equal(const IdealSubspace& a, const IdealSubspace& b);

/// Whether the span is closed under multiplication by every variable.
bool is_closed_under_variables(const IdealSubspace& k);

/// Elements of the ideal as polynomials over the host columns.
std::vector<SparseVec> span_elements(const IdealSubspace& k);

}  // namespace hl
