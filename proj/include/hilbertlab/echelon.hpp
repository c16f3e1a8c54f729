#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hilbertlab/field.hpp"

namespace hl {

/// Sparse coefficient vector with strictly increasing indices and nonzero values.
struct SparseVec {
  std::vector<std::uint32_t> idx;
  std::vector<Scalar> val;

  bool empty() const { return idx.empty(); }
  std::size_t size() const { return idx.size(); }
  /// Lowest index present; undefined when empty.
  std::uint32_t lead() const { return idx.front(); }
  friend bool operator==(const SparseVec&, const SparseVec&) = default;
};

/// Subspace of F_p^n kept in reduced row-echelon form. Values are immutable;
/// insertion returns a new subspace.
class EchelonSubspace {
 public:
  EchelonSubspace(std::size_t ambient_dimension, PrimeField field);

  std::size_t ambient_dimension() const { return n_; }
  std::size_t dimension() const { return pivots_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
  const PrimeField& field() const { return field_; }

  /// Residue of v after elimination against the rows (zero iff v is in the span).
  std::vector<Scalar> reduce(std::span<const Scalar> v) const;
  bool contains(std::span<const Scalar> v) const;

  friend bool operator==(const EchelonSubspace&, const EchelonSubspace&);

 private:
  friend std::pair<EchelonSubspace, bool> echelon_insert(const EchelonSubspace&, std::span<const Scalar>);

  std::size_t n_;
  PrimeField field_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<Scalar>> rows_;
};

/// Adds a vector to the span; the flag reports whether the dimension grew.
/// Throws StructuralError on a length mismatch.
std::pair<EchelonSubspace, bool> echelon_insert(const EchelonSubspace& space, std::span<const Scalar> vector);

/// Span equality; throws StructuralError on ambient mismatch.
bool subspace_equal(const EchelonSubspace& u, const EchelonSubspace& v);

/// Row-echelon form used by the ideal engine. Pivots are the lowest nonzero
/// column of each row; rows are stored from the pivot to their last nonzero
/// entry and are normalized to 1 at the pivot. Insertion reduces only until
/// the first column that is not a pivot.
class RowEchelon {
 public:
  struct Row {
    std::uint32_t pivot;
    std::vector<Scalar> values;  // values[0] == 1
    std::uint32_t end() const { return pivot + static_cast<std::uint32_t>(values.size()); }
  };

  static constexpr std::uint32_t npos = UINT32_MAX;

  RowEchelon() = default;
  RowEchelon(std::size_t ncols, PrimeField field);

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Row>& rows() const { return rows_; }
  const PrimeField& field() const { return field_; }
  bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }
  std::int32_t row_of_pivot(std::size_t col) const { return pivot_row_[col]; }

  /// Reduces work[lo, hi) in place (work has ncols entries, zero outside the
  /// range). Returns the pivot of the new row, or npos when the vector was in
  /// the span. The work buffer is left all-zero.
  std::uint32_t insert(Scalar* work, std::size_t lo, std::size_t hi);

  /// Same elimination without storing anything; returns true when work is in
  /// the span. Leaves the buffer zeroed.
  bool reduces_to_zero(Scalar* work, std::size_t lo, std::size_t hi) const;

  /// Appends a row that is already normalized and whose pivot is free.
  void adopt(Row row);

  /// Restricts to the first `ncols` columns (drops rows pivoting beyond).
  void truncate(std::size_t ncols);

  /// Number of pivots in columns [lo, hi).
  std::size_t pivots_in(std::size_t lo, std::size_t hi) const;

  /// Back-substitutes so every row is zero at all other pivot columns.
  void make_reduced();

 private:
  std::size_t eliminate(Scalar* work, std::size_t lo, std::size_t& hi) const;

  std::size_t ncols_ = 0;
  PrimeField field_;
  std::vector<Row> rows_;
  std::vector<std::int32_t> pivot_row_;
};

}  // namespace hl
