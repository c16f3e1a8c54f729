#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hilbertlab/echelon.hpp"
#include "hilbertlab/field.hpp"
#include "hilbertlab/monomial.hpp"
#include "hilbertlab/polynomial.hpp"
#include "hilbertlab/presentation.hpp"

namespace hl {

/// The finite-dimensional algebra A/m^N for A = k[x]_(x)/(relations).
///
/// Polynomial monomials of degree < N are indexed by degree, then ascending
/// degrevlex. The relation ideal is echelonized with the lowest monomial as
/// pivot; the remaining monomials (the standard monomials) form the basis,
/// ordered the same way. Under this order m^k/m^N is exactly the span of the
/// basis columns of degree >= k, and the basis of A/m^N begins with the basis
/// of A/m^k for every k < N.
class TruncatedLocalAlgebra {
 public:
  static constexpr std::uint32_t none = UINT32_MAX;

  /// Throws DomainError for N < 2 or an invalid presentation.
  TruncatedLocalAlgebra(RingPresentation presentation, unsigned order);

  const RingPresentation& presentation() const { return pres_; }
  const PrimeField& field() const { return field_; }
  unsigned order() const { return order_; }
  std::size_t nvars() const { return nvars_; }

  /// Number of standard monomials, i.e. dim A/m^N.
  std::size_t dimension() const { return col_poly_.size(); }
  /// First column of degree k, for 0 <= k <= N; degree_start(N) == dimension().
  std::size_t degree_start(unsigned k) const { return col_degree_start_[k]; }
  unsigned column_degree(std::size_t c) const { return col_degree_[c]; }
  Exponents column_monomial(std::size_t c) const;

  /// Column of a standard monomial, or none.
  std::uint32_t column_of(const Exponents& e) const;

  /// Normal form of x_i times basis column c (empty when it vanishes mod m^N).
  std::span<const std::uint32_t> mul_var_cols(std::size_t c, std::size_t i) const;
  std::span<const Scalar> mul_var_vals(std::size_t c, std::size_t i) const;

  /// Normal form of a polynomial, truncated to degree < precision.
  SparseVec normal_form(const ExpandedPoly& f, unsigned precision) const;
  SparseVec normal_form(const PolyExpr& f, unsigned precision) const;
  /// Product in A, truncated to degree < precision.
  SparseVec multiply(const SparseVec& a, const SparseVec& b, unsigned precision) const;
  SparseVec variable(std::size_t i) const;
  SparseVec one() const;

  /// Lowest degree present in v (N for the zero vector).
  unsigned order_of(const SparseVec& v) const;

  /// Number of polynomial monomials enumerated (the ambient of the reducer).
  std::size_t polynomial_monomial_count() const { return poly_key_.size(); }

 private:
  std::uint32_t poly_index(const MonoKey& k) const;
  std::span<const std::uint32_t> nf_cols(std::uint32_t poly) const;
  std::span<const Scalar> nf_vals(std::uint32_t poly) const;

  RingPresentation pres_;
  PrimeField field_;
  unsigned order_;
  std::size_t nvars_;

  std::vector<MonoKey> poly_key_;
  std::vector<std::size_t> poly_degree_start_;
  std::unordered_map<MonoKey, std::uint32_t, MonoKeyHash> poly_lookup_;

  // Normal form of every polynomial monomial, CSR over basis columns.
  std::vector<std::uint64_t> nf_off_;
  std::vector<std::uint32_t> nf_col_;
  std::vector<Scalar> nf_val_;

  std::vector<std::uint32_t> col_poly_;
  std::vector<std::uint8_t> col_degree_;
  std::vector<std::size_t> col_degree_start_;
  std::vector<std::uint32_t> poly_col_;

  // poly index of x_i * column c, or none when the degree reaches N.
  std::vector<std::uint32_t> mul_poly_;
};

/// Polynomial text of a host element over the presentation's variables, with
/// coefficients lifted to (-p/2, p/2].
std::string format_element(const TruncatedLocalAlgebra& host, const SparseVec& v);

}  // namespace hl
