#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "hilbertlab/echelon.hpp"
#include "hilbertlab/errors.hpp"
#include "hilbertlab/kernels.hpp"
#include "hilbertlab/lp.hpp"
#include "oracles.hpp"

using namespace hl;

namespace {

std::vector<Scalar> random_vector(std::size_t n, std::uint32_t p, std::mt19937_64& rng, unsigned zero_percent = 30) {
  std::vector<Scalar> v(n);
  for (auto& x : v) x = rng() % 100 < zero_percent ? 0 : static_cast<Scalar>(rng() % p);
  return v;
}

std::vector<const kernels::Table*> vector_tables() {
  std::vector<const kernels::Table*> out;
  if (auto* t = kernels::avx2_table()) out.push_back(t);
  if (auto* t = kernels::neon_table()) out.push_back(t);
  return out;
}

oracle::Matrix to_matrix(const std::vector<std::vector<Scalar>>& rows) {
  oracle::Matrix m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  return m;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f(32003);
  CHECK(f.mul(f.inv(12345), 12345) == 1);
  CHECK(f.to_int(f.from_int(-7)) == -7);
  CHECK(f.to_int(f.from_int(16001)) == 16001);
  CHECK(f.to_int(f.from_int(16002)) == -16001);
  CHECK_THROWS_AS(f.inv(0), DomainError);
  CHECK(is_prime(32003));
  CHECK_FALSE(is_prime(32001));
}

TEST_CASE("vector kernels agree with the scalar reference") {
  const auto& ref = kernels::scalar_table();
  std::mt19937_64 rng(7);
  for (const auto* t : vector_tables()) {
    CAPTURE(t->name);
    for (std::uint32_t p : {3u, 101u, 32003u, 32749u}) {
      for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 257u}) {
        const auto x = random_vector(n, p, rng);
        auto y1 = random_vector(n, p, rng);
        auto y2 = y1;
        const Scalar c = static_cast<Scalar>(rng() % p);
        ref.axpy(y1.data(), x.data(), n, c, p);
        t->axpy(y2.data(), x.data(), n, c, p);
        CHECK(y1 == y2);
        ref.scale(y1.data(), n, c, p);
        t->scale(y2.data(), n, c, p);
        CHECK(y1 == y2);
        std::vector<Scalar> z(n, 0);
        if (n) z[rng() % n] = 1 + static_cast<Scalar>(rng() % (p - 1));
        CHECK(ref.first_nonzero(z.data(), n) == t->first_nonzero(z.data(), n));
      }
    }
  }
}

TEST_CASE("free kernel functions fall back to scalar for large primes") {
  const std::uint32_t p = 2147483647u;
  std::vector<Scalar> y = {p - 1, 5, 0};
  const std::vector<Scalar> x = {p - 1, p - 2, 1};
  kernels::axpy(y, x, p - 1, p);
  // y + (p-1) x = y - x mod p
  CHECK(y == std::vector<Scalar>{0, 7, p - 1});
}

TEST_CASE("echelon_insert basic cases") {
  EchelonSubspace e(3, PrimeField(5));
  auto [s1, new1] = echelon_insert(e, std::vector<Scalar>{1, 0, 0});
  CHECK(new1);
  CHECK(s1.dimension() == 1);
  auto [s2, new2] = echelon_insert(s1, std::vector<Scalar>{2, 0, 0});
  CHECK_FALSE(new2);
  CHECK(s2.dimension() == 1);
  CHECK_THROWS_AS(echelon_insert(s1, std::vector<Scalar>{1, 0}), StructuralError);
}

TEST_CASE("subspace_equal examples") {
  const PrimeField f(5);
  auto span = [&](std::size_t n, const std::vector<std::vector<Scalar>>& vs) {
    EchelonSubspace s(n, f);
    for (const auto& v : vs) s = echelon_insert(s, v).first;
    return s;
  };
  CHECK(subspace_equal(span(2, {{1, 0}, {0, 1}}), span(2, {{1, 1}, {1, 4}})));
  CHECK_FALSE(subspace_equal(span(2, {{1, 0}}), span(2, {{0, 1}})));
  CHECK_THROWS_AS(subspace_equal(span(2, {{1, 0}}), span(3, {{1, 0, 0}})), StructuralError);
}

TEST_CASE("echelon rank matches independent Gaussian elimination on random instances") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t p = trial % 2 ? 5 : 32003;
    const std::size_t n = 1 + rng() % 12;
    const std::size_t k = 1 + rng() % 14;
    std::vector<std::vector<Scalar>> vs;
    for (std::size_t i = 0; i < k; ++i) vs.push_back(random_vector(n, p, rng, 50));
    EchelonSubspace s(n, PrimeField(p));
    for (const auto& v : vs) s = echelon_insert(s, v).first;
    CHECK(s.dimension() == oracle::rank(to_matrix(vs), p));

    // Order independence and membership.
    auto shuffled = vs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EchelonSubspace t(n, PrimeField(p));
    for (const auto& v : shuffled) t = echelon_insert(t, v).first;
    CHECK(subspace_equal(s, t));
    const auto probe = random_vector(n, p, rng, 50);
    std::vector<std::int64_t> probe64(probe.begin(), probe.end());
    CHECK(s.contains(probe) == oracle::in_row_space(to_matrix(vs), probe64, p));
  }
}

TEST_CASE("re-spanning a random subspace gives the same subspace") {
  std::mt19937_64 rng(13);
  const std::uint32_t p = 32003;
  const PrimeField f(p);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 10, k = 4;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t i = 0; i < k; ++i) basis.push_back(random_vector(n, p, rng));
    auto combo = [&] {
      std::vector<Scalar> v(n, 0);
      for (const auto& b : basis) {
        const Scalar c = static_cast<Scalar>(rng() % p);
        for (std::size_t j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul(c, b[j]));
      }
      return v;
    };
    EchelonSubspace a(n, f), b(n, f), c(n, f);
    for (const auto& v : basis) a = echelon_insert(a, v).first;
    for (int i = 0; i < 8; ++i) b = echelon_insert(b, combo()).first;
    for (int i = 0; i < 8; ++i) c = echelon_insert(c, combo()).first;
    CHECK(subspace_equal(b, c));
    CHECK(b.dimension() <= a.dimension());
  }
}

TEST_CASE("row echelon with lowest-column pivots agrees with the oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t p = trial % 3 == 0 ? 7 : 32003;
    const std::size_t n = 5 + rng() % 60;
    const std::size_t k = 1 + rng() % 40;
    RowEchelon ech(n, PrimeField(p));
    std::vector<std::vector<Scalar>> vs;
    std::vector<Scalar> work(n, 0);
    for (std::size_t i = 0; i < k; ++i) {
      auto v = random_vector(n, p, rng, 80);
      vs.push_back(v);
      std::copy(v.begin(), v.end(), work.begin());
      ech.insert(work.data(), 0, n);
      CHECK(std::all_of(work.begin(), work.end(), [](Scalar x) { return x == 0; }));
    }
    CHECK(ech.rank() == oracle::rank(to_matrix(vs), p));
    for (const auto& row : ech.rows()) CHECK(row.values.front() == 1);

    const auto probe = random_vector(n, p, rng, 60);
    std::copy(probe.begin(), probe.end(), work.begin());
    std::vector<std::int64_t> probe64(probe.begin(), probe.end());
    CHECK(ech.reduces_to_zero(work.data(), 0, n) == oracle::in_row_space(to_matrix(vs), probe64, p));
  }
}

TEST_CASE("LP membership examples") {
  CHECK(rational_lp_member(std::vector<std::int64_t>{1, 1}, {{2, 0}, {0, 2}}));
  CHECK_FALSE(rational_lp_member(std::vector<std::int64_t>{0, 0}, {{2, 0}, {0, 2}}));
  CHECK(rational_lp_member(std::vector<std::int64_t>{1, 2}, {{2, 0}, {0, 3}}));
  CHECK_FALSE(rational_lp_member(std::vector<std::int64_t>{1, 1}, {{2, 0}, {0, 3}}));
  CHECK(rational_lp_member(std::vector<Rational>{Rational(1, 2), Rational(3, 2)}, {{1, 0}, {0, 2}}));
  CHECK_THROWS_AS(rational_lp_member(std::vector<std::int64_t>{1, 1}, {}), DomainError);
  CHECK_THROWS_AS(rational_lp_member(std::vector<std::int64_t>{1, 1}, {{1, 0, 0}}), DomainError);
}

TEST_CASE("LP membership agrees with the power-membership oracle") {
  // The power test only certifies membership, so a point it accepts must be
  // in the hull, and a hull point must pass for some k up to the lcm of the
  // hull's denominators; 24 covers every instance drawn here.
  std::mt19937_64 rng(19);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t v = 2 + trial % 2;
    const auto gens = oracle::random_monomial_ideal(v, 3, rng);
    std::vector<std::vector<std::int64_t>> g64;
    for (const auto& g : gens) g64.emplace_back(g.begin(), g.end());
    const oracle::PowerMembership oracle_member(gens, v == 2 ? 24 : 12);
    oracle::for_each_in_box(v, 4, [&](const oracle::Exps& a) {
      std::vector<std::int64_t> a64(a.begin(), a.end());
      CHECK(rational_lp_member(a64, g64) == oracle_member(a));
      ++checked;
    });
  }
  CHECK(checked > 3000);
}
