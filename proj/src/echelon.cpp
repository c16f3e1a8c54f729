#include "hilbertlab/echelon.hpp"

#include <algorithm>
#include <string>

#include "hilbertlab/errors.hpp"
#include "hilbertlab/kernels.hpp"

namespace hl {

EchelonSubspace::EchelonSubspace(std::size_t ambient_dimension, PrimeField field)
    : n_(ambient_dimension), field_(field) {}

std::vector<Scalar> EchelonSubspace::reduce(std::span<const Scalar> v) const {
  if (v.size() != n_) {
    throw StructuralError("vector length " + std::to_string(v.size()) + " does not match ambient dimension " +
                          std::to_string(n_));
  }
  std::vector<Scalar> w(v.begin(), v.end());
  const std::uint32_t p = field_.modulus();
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar c = w[pivots_[i]];
    if (c != 0) kernels::axpy(w, rows_[i], p - c, p);
  }
  return w;
}

bool EchelonSubspace::contains(std::span<const Scalar> v) const {
  const auto w = reduce(v);
  return kernels::first_nonzero(w) == w.size();
}

bool operator==(const EchelonSubspace& a, const EchelonSubspace& b) {
  return a.n_ == b.n_ && a.field_ == b.field_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
}

std::pair<EchelonSubspace, bool> echelon_insert(const EchelonSubspace& space, std::span<const Scalar> vector) {
  std::vector<Scalar> w = space.reduce(vector);
  const std::size_t lead = kernels::first_nonzero(w);
  if (lead == w.size()) return {space, false};

  const PrimeField& f = space.field_;
  const std::uint32_t p = f.modulus();
  kernels::scale(w, f.inv(w[lead]), p);

  EchelonSubspace out(space.n_, f);
  out.pivots_.reserve(space.pivots_.size() + 1);
  out.rows_.reserve(space.rows_.size() + 1);
  bool placed = false;
  for (std::size_t i = 0; i < space.pivots_.size(); ++i) {
    if (!placed && space.pivots_[i] > lead) {
      out.pivots_.push_back(lead);
      out.rows_.push_back(w);
      placed = true;
    }
    std::vector<Scalar> row = space.rows_[i];
    if (row[lead] != 0) kernels::axpy(row, w, p - row[lead], p);
    out.pivots_.push_back(space.pivots_[i]);
    out.rows_.push_back(std::move(row));
  }
  if (!placed) {
    out.pivots_.push_back(lead);
    out.rows_.push_back(std::move(w));
  }
  return {std::move(out), true};
}

bool subspace_equal(const EchelonSubspace& u, const EchelonSubspace& v) {
  if (u.ambient_dimension() != v.ambient_dimension()) {
    throw StructuralError("subspaces live in ambient spaces of different dimension");
  }
  return u == v;
}

RowEchelon::RowEchelon(std::size_t ncols, PrimeField field)
    : ncols_(ncols), field_(field), pivot_row_(ncols, -1) {}

std::size_t RowEchelon::eliminate(Scalar* work, std::size_t lo, std::size_t& hi) const {
  const std::uint32_t p = field_.modulus();
  std::size_t c = lo + kernels::first_nonzero({work + lo, hi - lo});
  while (c < hi) {
    const std::int32_t r = pivot_row_[c];
    if (r < 0) return c;
    const Row& row = rows_[static_cast<std::size_t>(r)];
    const std::size_t len = row.values.size();
    kernels::axpy({work + c, len}, row.values, p - work[c], p);
    hi = std::max(hi, c + len);
    c = c + 1 + kernels::first_nonzero({work + c + 1, hi - c - 1});
  }
  return hi;
}

std::uint32_t RowEchelon::insert(Scalar* work, std::size_t lo, std::size_t hi) {
  const std::size_t c = eliminate(work, lo, hi);
  if (c >= hi) return npos;

  std::size_t end = hi;
  while (end > c && work[end - 1] == 0) --end;
  Row row{static_cast<std::uint32_t>(c), std::vector<Scalar>(work + c, work + end)};
  kernels::scale(row.values, field_.inv(row.values[0]), field_.modulus());
  std::fill(work + c, work + hi, 0);
  pivot_row_[c] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(row));
  return static_cast<std::uint32_t>(c);
}

bool RowEchelon::reduces_to_zero(Scalar* work, std::size_t lo, std::size_t hi) const {
  const std::size_t c = eliminate(work, lo, hi);
  std::fill(work + lo, work + hi, 0);
  return c >= hi;
}

void RowEchelon::adopt(Row row) {
  if (row.pivot >= ncols_ || pivot_row_[row.pivot] >= 0 || row.end() > ncols_) {
    throw StructuralError("adopted row does not fit the echelon form");
  }
  pivot_row_[row.pivot] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(row));
}

void RowEchelon::truncate(std::size_t ncols) {
  if (ncols >= ncols_) return;
  std::vector<Row> kept;
  kept.reserve(rows_.size());
  for (auto& row : rows_) {
    if (row.pivot >= ncols) continue;
    if (row.end() > ncols) row.values.resize(ncols - row.pivot);
    while (row.values.size() > 1 && row.values.back() == 0) row.values.pop_back();
    kept.push_back(std::move(row));
  }
  rows_ = std::move(kept);
  ncols_ = ncols;
  pivot_row_.assign(ncols, -1);
  for (std::size_t i = 0; i < rows_.size(); ++i) pivot_row_[rows_[i].pivot] = static_cast<std::int32_t>(i);
}

std::size_t RowEchelon::pivots_in(std::size_t lo, std::size_t hi) const {
  std::size_t n = 0;
  for (std::size_t c = lo; c < hi; ++c) n += pivot_row_[c] >= 0;
  return n;
}

void RowEchelon::make_reduced() {
  const std::uint32_t p = field_.modulus();
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rows_[a].pivot > rows_[b].pivot; });
  std::vector<Scalar> work(ncols_, 0);
  for (const std::size_t i : order) {
    Row& row = rows_[i];
    const std::size_t lo = row.pivot;
    std::size_t hi = row.end();
    std::copy(row.values.begin(), row.values.end(), work.begin() + static_cast<std::ptrdiff_t>(lo));
    for (std::size_t c = lo + 1; c < hi; ++c) {
      if (work[c] == 0) continue;
      const std::int32_t r = pivot_row_[c];
      if (r < 0) continue;
      const Row& other = rows_[static_cast<std::size_t>(r)];
      kernels::axpy({work.data() + c, other.values.size()}, other.values, p - work[c], p);
      hi = std::max<std::size_t>(hi, other.end());
    }
    std::size_t end = hi;
    while (end > lo + 1 && work[end - 1] == 0) --end;
    row.values.assign(work.begin() + static_cast<std::ptrdiff_t>(lo), work.begin() + static_cast<std::ptrdiff_t>(end));
    std::fill(work.begin() + static_cast<std::ptrdiff_t>(lo), work.begin() + static_cast<std::ptrdiff_t>(hi), 0);
  }
}

}  // namespace hl
