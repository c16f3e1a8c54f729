#include "hilbertlab/algebra.hpp"

#include <algorithm>
#include <string>

#include "hilbertlab/errors.hpp"

namespace hl {

namespace {

using Term = std::pair<std::uint32_t, Scalar>;
using SparseRow = std::vector<Term>;

// Sparse row-echelon form over the polynomial monomials; pivot = lowest index.
class SparseReducer {
 public:
  SparseReducer(std::size_t n, const PrimeField& f) : field_(f), pivot_row_(n, -1) {}

  void insert(SparseRow row) {
    const std::uint32_t p = field_.modulus();
    SparseRow tmp;
    while (!row.empty()) {
      const std::uint32_t lead = row.front().first;
      const std::int32_t r = pivot_row_[lead];
      if (r < 0) {
        const Scalar inv = field_.inv(row.front().second);
        for (auto& t : row) t.second = field_.mul(t.second, inv);
        pivot_row_[lead] = static_cast<std::int32_t>(rows_.size());
        rows_.push_back(std::move(row));
        return;
      }
      // row <- row - c * pivot_row, merged in index order.
      const SparseRow& b = rows_[static_cast<std::size_t>(r)];
      const Scalar c = row.front().second;
      tmp.clear();
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < b.size()) {
        if (j == b.size() || (i < row.size() && row[i].first < b[j].first)) {
          tmp.push_back(row[i++]);
        } else {
          Scalar v = field_.mul(p - c, b[j].second);
          std::uint32_t idx = b[j].first;
          if (i < row.size() && row[i].first == idx) v = field_.add(v, row[i++].second);
          ++j;
          if (v != 0) tmp.push_back({idx, v});
        }
      }
      row.swap(tmp);
    }
  }

  std::int32_t row_of(std::uint32_t idx) const { return pivot_row_[idx]; }
  const SparseRow& row(std::int32_t r) const { return rows_[static_cast<std::size_t>(r)]; }

 private:
  const PrimeField& field_;
  std::vector<SparseRow> rows_;
  std::vector<std::int32_t> pivot_row_;
};

void combine(std::vector<std::pair<std::uint32_t, std::uint64_t>>& acc, std::uint32_t p, SparseVec& out) {
  std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  out.idx.clear();
  out.val.clear();
  for (std::size_t i = 0; i < acc.size();) {
    const std::uint32_t col = acc[i].first;
    std::uint64_t s = 0;
    for (; i < acc.size() && acc[i].first == col; ++i) s = (s + acc[i].second) % p;
    if (s != 0) {
      out.idx.push_back(col);
      out.val.push_back(static_cast<Scalar>(s));
    }
  }
}

constexpr std::uint64_t kMaxPolynomialMonomials = 8'000'000;

}  // namespace

TruncatedLocalAlgebra::TruncatedLocalAlgebra(RingPresentation presentation, unsigned order)
    : pres_(std::move(presentation)), field_(pres_.characteristic), order_(order), nvars_(pres_.nvars()) {
  validate_presentation(pres_);
  if (order_ < 2) throw DomainError("truncation order must be at least 2");
  if (order_ > kMaxExponent) throw DomainError("truncation order must be below 256");
  const std::uint64_t count = monomial_count_below(nvars_, order_);
  if (count > kMaxPolynomialMonomials) {
    throw TruncationExhausted("truncation order " + std::to_string(order_) + " in " + std::to_string(nvars_) +
                                  " variables needs " + std::to_string(count) + " monomials",
                              0);
  }

  poly_key_.reserve(count);
  poly_lookup_.reserve(count);
  poly_degree_start_.assign(order_ + 1, 0);
  for (unsigned k = 0; k < order_; ++k) {
    poly_degree_start_[k] = poly_key_.size();
    for (const auto& e : monomials_of_degree(nvars_, k)) {
      poly_lookup_.emplace(pack(e), static_cast<std::uint32_t>(poly_key_.size()));
      poly_key_.push_back(pack(e));
    }
  }
  poly_degree_start_[order_] = poly_key_.size();
  const std::size_t npoly = poly_key_.size();
  auto poly_degree = [&](std::uint32_t idx) {
    return static_cast<unsigned>(std::upper_bound(poly_degree_start_.begin(), poly_degree_start_.end(), idx) -
                                 poly_degree_start_.begin() - 1);
  };

  // Relations reduced mod p; single-term ones kill every multiple outright.
  std::vector<Exponents> monomial_relations;
  std::vector<std::vector<std::pair<Exponents, Scalar>>> relations;
  for (const auto& rel : pres_.relations) {
    std::vector<std::pair<Exponents, Scalar>> terms;
    for (const auto& [e, c] : expand(rel, nvars_)) {
      const Scalar v = static_cast<Scalar>(mpz_fdiv_ui(c.get_mpz_t(), field_.modulus()));
      if (v != 0) terms.emplace_back(e, v);
    }
    if (terms.empty()) continue;
    if (terms.size() == 1) monomial_relations.push_back(terms.front().first);
    else relations.push_back(std::move(terms));
  }

  std::vector<char> dead(npoly, 0);
  if (!monomial_relations.empty()) {
    for (std::size_t i = 0; i < npoly; ++i) {
      const Exponents e = unpack(poly_key_[i], nvars_);
      for (const auto& m : monomial_relations) {
        if (divides(m, e)) {
          dead[i] = 1;
          break;
        }
      }
    }
  }

  SparseReducer reducer(npoly, field_);
  for (const auto& g : relations) {
    unsigned ord = order_;
    std::vector<MonoKey> keys;
    std::vector<unsigned> degs;
    for (const auto& [e, c] : g) {
      const unsigned d = total_degree(e);
      ord = std::min(ord, d);
      degs.push_back(d);
      keys.push_back(d < order_ ? pack(e) : MonoKey{});
    }
    if (ord >= order_) continue;
    for (std::uint32_t mu = 0; mu < poly_degree_start_[order_ - ord]; ++mu) {
      if (dead[mu]) continue;
      const unsigned dmu = poly_degree(mu);
      SparseRow row;
      for (std::size_t t = 0; t < g.size(); ++t) {
        if (dmu + degs[t] >= order_) continue;
        const std::uint32_t idx = poly_lookup_.at(key_add(poly_key_[mu], keys[t]));
        if (!dead[idx]) row.emplace_back(idx, g[t].second);
      }
      std::sort(row.begin(), row.end());
      reducer.insert(std::move(row));
    }
  }

  poly_col_.assign(npoly, none);
  for (std::uint32_t i = 0; i < npoly; ++i) {
    if (!dead[i] && reducer.row_of(i) < 0) {
      poly_col_[i] = static_cast<std::uint32_t>(col_poly_.size());
      col_poly_.push_back(i);
    }
  }

  // Normal forms, highest index first: a pivot monomial equals minus the rest of its row.
  std::vector<SparseVec> nf(npoly);
  std::vector<std::pair<std::uint32_t, std::uint64_t>> acc;
  for (std::size_t i = npoly; i-- > 0;) {
    if (dead[i]) continue;
    if (poly_col_[i] != none) {
      nf[i].idx.push_back(poly_col_[i]);
      nf[i].val.push_back(1);
      continue;
    }
    const SparseRow& row = reducer.row(reducer.row_of(static_cast<std::uint32_t>(i)));
    acc.clear();
    for (std::size_t t = 1; t < row.size(); ++t) {
      const Scalar c = field_.neg(row[t].second);
      const SparseVec& sub = nf[row[t].first];
      for (std::size_t j = 0; j < sub.size(); ++j) acc.emplace_back(sub.idx[j], field_.mul(c, sub.val[j]));
    }
    combine(acc, field_.modulus(), nf[i]);
  }
  nf_off_.assign(npoly + 1, 0);
  for (std::size_t i = 0; i < npoly; ++i) nf_off_[i + 1] = nf_off_[i] + nf[i].size();
  nf_col_.reserve(nf_off_[npoly]);
  nf_val_.reserve(nf_off_[npoly]);
  for (auto& v : nf) {
    nf_col_.insert(nf_col_.end(), v.idx.begin(), v.idx.end());
    nf_val_.insert(nf_val_.end(), v.val.begin(), v.val.end());
    v = SparseVec{};
  }

  col_degree_.resize(col_poly_.size());
  col_degree_start_.assign(order_ + 1, col_poly_.size());
  for (std::size_t c = col_poly_.size(); c-- > 0;) {
    const unsigned d = poly_degree(col_poly_[c]);
    col_degree_[c] = static_cast<std::uint8_t>(d);
    col_degree_start_[d] = c;
  }
  for (unsigned k = order_; k-- > 0;) col_degree_start_[k] = std::min(col_degree_start_[k], col_degree_start_[k + 1]);

  std::vector<MonoKey> unit(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    Exponents e(nvars_, 0);
    e[i] = 1;
    unit[i] = pack(e);
  }
  mul_poly_.assign(col_poly_.size() * nvars_, none);
  for (std::size_t c = 0; c < col_poly_.size(); ++c) {
    if (col_degree_[c] + 1u >= order_) continue;
    for (std::size_t i = 0; i < nvars_; ++i) {
      mul_poly_[c * nvars_ + i] = poly_lookup_.at(key_add(poly_key_[col_poly_[c]], unit[i]));
    }
  }
}

Exponents TruncatedLocalAlgebra::column_monomial(std::size_t c) const {
  return unpack(poly_key_[col_poly_[c]], nvars_);
}

std::uint32_t TruncatedLocalAlgebra::column_of(const Exponents& e) const {
  if (e.size() != nvars_ || total_degree(e) >= order_) return none;
  const std::uint32_t idx = poly_index(pack(e));
  return idx == none ? none : poly_col_[idx];
}

std::uint32_t TruncatedLocalAlgebra::poly_index(const MonoKey& k) const {
  auto it = poly_lookup_.find(k);
  return it == poly_lookup_.end() ? none : it->second;
}

std::span<const std::uint32_t> TruncatedLocalAlgebra::nf_cols(std::uint32_t poly) const {
  return {nf_col_.data() + nf_off_[poly], nf_off_[poly + 1] - nf_off_[poly]};
}

std::span<const Scalar> TruncatedLocalAlgebra::nf_vals(std::uint32_t poly) const {
  return {nf_val_.data() + nf_off_[poly], nf_off_[poly + 1] - nf_off_[poly]};
}

std::span<const std::uint32_t> TruncatedLocalAlgebra::mul_var_cols(std::size_t c, std::size_t i) const {
  const std::uint32_t poly = mul_poly_[c * nvars_ + i];
  if (poly == none) return {};
  return nf_cols(poly);
}

std::span<const Scalar> TruncatedLocalAlgebra::mul_var_vals(std::size_t c, std::size_t i) const {
  const std::uint32_t poly = mul_poly_[c * nvars_ + i];
  if (poly == none) return {};
  return nf_vals(poly);
}

SparseVec TruncatedLocalAlgebra::normal_form(const ExpandedPoly& f, unsigned precision) const {
  precision = std::min(precision, order_);
  const std::uint32_t p = field_.modulus();
  std::vector<std::pair<std::uint32_t, std::uint64_t>> acc;
  for (const auto& [e, c] : f) {
    if (total_degree(e) >= precision) continue;
    const Scalar v = static_cast<Scalar>(mpz_fdiv_ui(c.get_mpz_t(), p));
    if (v == 0) continue;
    const std::uint32_t idx = poly_index(pack(e));
    const auto cols = nf_cols(idx);
    const auto vals = nf_vals(idx);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (col_degree_[cols[j]] < precision) acc.emplace_back(cols[j], field_.mul(v, vals[j]));
    }
  }
  SparseVec out;
  combine(acc, p, out);
  return out;
}

SparseVec TruncatedLocalAlgebra::normal_form(const PolyExpr& f, unsigned precision) const {
  return normal_form(expand(f, nvars_), precision);
}

SparseVec TruncatedLocalAlgebra::multiply(const SparseVec& a, const SparseVec& b, unsigned precision) const {
  precision = std::min(precision, order_);
  const std::uint32_t p = field_.modulus();
  std::vector<std::pair<std::uint32_t, std::uint64_t>> acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const unsigned da = col_degree_[a.idx[i]];
    if (da >= precision) break;
    const MonoKey ka = poly_key_[col_poly_[a.idx[i]]];
    for (std::size_t j = 0; j < b.size(); ++j) {
      const unsigned db = col_degree_[b.idx[j]];
      if (da + db >= precision) break;
      const std::uint32_t idx = poly_lookup_.find(key_add(ka, poly_key_[col_poly_[b.idx[j]]]))->second;
      const Scalar w = field_.mul(a.val[i], b.val[j]);
      const auto cols = nf_cols(idx);
      const auto vals = nf_vals(idx);
      for (std::size_t t = 0; t < cols.size(); ++t) {
        if (col_degree_[cols[t]] >= precision) break;
        acc.emplace_back(cols[t], field_.mul(w, vals[t]));
      }
    }
  }
  SparseVec out;
  combine(acc, p, out);
  return out;
}

SparseVec TruncatedLocalAlgebra::variable(std::size_t i) const {
  Exponents e(nvars_, 0);
  e.at(i) = 1;
  return normal_form(ExpandedPoly{{e, Integer(1)}}, order_);
}

SparseVec TruncatedLocalAlgebra::one() const {
  return normal_form(ExpandedPoly{{Exponents(nvars_, 0), Integer(1)}}, order_);
}

unsigned TruncatedLocalAlgebra::order_of(const SparseVec& v) const {
  return v.empty() ? order_ : col_degree_[v.lead()];
}

std::string format_element(const TruncatedLocalAlgebra& host, const SparseVec& v) {
  ExpandedPoly poly;
  for (std::size_t i = 0; i < v.size(); ++i) {
    poly[host.column_monomial(v.idx[i])] = Integer(static_cast<long>(host.field().to_int(v.val[i])));
  }
  return print_polynomial(from_expanded(poly, host.nvars()), host.presentation().variables);
}

}  // namespace hl
