#include <algorithm>
#include <memory>
#include <random>

#include "doctest.h"
#include "hilbertlab/algebra.hpp"
#include "hilbertlab/closure.hpp"
#include "hilbertlab/errors.hpp"
#include "hilbertlab/ideal.hpp"
#include "hilbertlab/presentation.hpp"
#include "oracles.hpp"

using namespace hl;

namespace {

HostPtr host_of(const std::string& text, unsigned order) {
  return std::make_shared<const TruncatedLocalAlgebra>(parse_presentation(text), order);
}

HostPtr plain_host(std::size_t nvars, unsigned order) {
  return host_of(oracle::monomial_presentation({oracle::Exps(nvars, 1)}, nvars), order);
}

IdealSubspace ideal_of(const HostPtr& host, const std::string& gens) {
  return ideal_from_polynomials(host, parse_polynomial_list(gens, host->presentation().variables));
}

IdealSubspace monomial_ideal(const HostPtr& host, const std::vector<oracle::Exps>& gens) {
  std::string text;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    text += (k ? ", " : "") + oracle::monomial_text(gens[k], host->presentation().variables);
  }
  return ideal_of(host, text);
}

// m^s ⊆ I for s = Σ(a_i - 1) + 1 where x_i^{a_i} are the pure powers.
unsigned floor_bound(const std::vector<oracle::Exps>& gens, std::size_t nvars) {
  unsigned s = 1;
  for (std::size_t i = 0; i < nvars; ++i) {
    int best = 1000;
    for (const auto& g : gens) {
      bool pure = true;
      for (std::size_t j = 0; j < nvars; ++j) pure = pure && (j == i || g[j] == 0);
      if (pure && g[i] > 0) best = std::min(best, g[i]);
    }
    s += static_cast<unsigned>(best - 1);
  }
  return s;
}

oracle::Matrix dense_rows(const IdealSubspace& k, std::size_t D) {
  oracle::Matrix m;
  for (const auto& v : span_elements(k)) {
    std::vector<std::int64_t> row(D, 0);
    for (std::size_t t = 0; t < v.size(); ++t) {
      if (v.idx[t] < D) row[v.idx[t]] = v.val[t];
    }
    m.push_back(row);
  }
  return m;
}

// Full span in A/m^N: stored rows plus every column past the certified floor.
oracle::Matrix dense_ideal(const IdealSubspace& k, std::size_t D) {
  auto m = dense_rows(k, D);
  for (std::size_t c = k.span().ncols(); c < D; ++c) {
    std::vector<std::int64_t> row(D, 0);
    row[c] = 1;
    m.push_back(row);
  }
  return m;
}

}  // namespace

TEST_CASE("truncated polynomial ring has the monomial basis") {
  const auto host = plain_host(2, 3);
  CHECK(host->dimension() == 6);
  CHECK(host->column_monomial(0) == Exponents{0, 0});
  CHECK(host->degree_start(1) == 1);
  CHECK(host->degree_start(2) == 3);
  CHECK(host->degree_start(3) == 6);
  CHECK_THROWS_AS(plain_host(2, 1), DomainError);
}

TEST_CASE("standard monomials match the staircase of the initial ideal") {
  // The lowest-degree form of x^2 - y^3 is x^2, so the staircase below degree
  // 4 is the set of monomials not divisible by x^2.
  const auto host = host_of("char: 32003\nvars: x, y\nrelations: x^2 - y^3\ndim: 1\ncm: true\nideal: x, y\n", 4);
  std::size_t expected = 0;
  oracle::for_each_in_box(2, 4, [&](const oracle::Exps& e) { expected += e[0] + e[1] < 4 && e[0] < 2; });
  CHECK(host->dimension() == expected);
  CHECK(expected == 7);
}

TEST_CASE("truncated dimension agrees with the colength of a power of m") {
  const auto small = std::make_shared<const TruncatedLocalAlgebra>(
      load_presentation(HILBERTLAB_DATA_DIR "/depth_zero_m1_d2.txt"), 8);
  const auto big = std::make_shared<const TruncatedLocalAlgebra>(small->presentation(), 10);
  CHECK(colength(ideal_power(maximal_ideal(big), 8)).value == small->dimension());
}

TEST_CASE("ideal_from_generators examples") {
  const auto h4 = plain_host(2, 4);
  const auto m = ideal_of(h4, "x, y");
  CHECK(m.codimension_below(h4->dimension()) == 1);
  CHECK(colength(m).value == 1);

  const auto h8 = plain_host(2, 8);
  CHECK(colength(ideal_of(h8, "x^2, y^3")).value == 6);

  const auto empty = ideal_from_generators(h4, {});
  CHECK(empty.span().rank() == 0);
}

TEST_CASE("normal ideal in three variables has colength 31") {
  const auto pres = load_presentation(HILBERTLAB_DATA_DIR "/normal_reduction_three.txt");
  const auto host = std::make_shared<const TruncatedLocalAlgebra>(pres, 8);
  CHECK(colength(ideal_from_polynomials(host, pres.ideal)).value == 31);
}

TEST_CASE("products and powers") {
  const auto host = plain_host(2, 10);
  const auto m = ideal_of(host, "x, y");
  CHECK(ideal_equal(ideal_product(m, m), ideal_of(host, "x^2, x*y, y^2")));
  CHECK(ideal_equal(ideal_power(m, 2), ideal_of(host, "x^2, x*y, y^2")));
  CHECK(ideal_equal(ideal_product(m, unit_ideal(host)), m));
  CHECK(ideal_equal(ideal_power(m, 0), unit_ideal(host)));
  CHECK(ideal_equal(ideal_product(ideal_of(host, "x^2, y^2"), ideal_power(m, 2)), ideal_power(m, 4)));

  const std::vector<oracle::Exps> g = {{2, 0}, {0, 3}};
  const auto deep = plain_host(2, 14);
  const auto cube = ideal_power(monomial_ideal(deep, g), 3);
  // Its colength is e0 binom(4,2) - e1 binom(3,1) with e1 = 0, i.e. 36.
  CHECK(colength(cube).value == oracle::staircase_colength(oracle::power(g, 3), 2, 14));
  CHECK(colength(cube).value == 36);

  const auto other = plain_host(2, 10);
  CHECK_THROWS_AS(ideal_product(m, ideal_of(other, "x, y")), StructuralError);
}

TEST_CASE("intersections") {
  const auto host = plain_host(2, 8);
  CHECK(ideal_equal(ideal_intersect(ideal_of(host, "x"), ideal_of(host, "y")), ideal_of(host, "x*y")));
  const auto m = ideal_of(host, "x, y");
  CHECK(ideal_equal(ideal_intersect(ideal_power(m, 2), ideal_power(m, 3)), ideal_power(m, 3)));

  const auto a = ideal_of(host, "x^2, x*y");
  const auto b = ideal_of(host, "y^2, x*y");
  const auto meet = ideal_intersect(a, b);
  CHECK(ideal_equal(meet, ideal_of(host, "x*y, x^2*y^2")));

  // Dimension of the intersection of the spans, by dense elimination.
  const std::size_t D = host->dimension();
  auto both = dense_rows(a, D);
  const auto rb = dense_rows(b, D);
  both.insert(both.end(), rb.begin(), rb.end());
  const std::size_t expected = oracle::rank(dense_rows(a, D), 32003) + oracle::rank(rb, 32003) - oracle::rank(both, 32003);
  CHECK(meet.span().rank() == expected);
}

TEST_CASE("intersection of powers of complementary ideals is their product") {
  const auto host = host_of("char: 32003\nvars: x, y, u, v\nrelations:\ndim: 4\ncm: true\nideal: x, y, u, v\n", 8);
  const auto I = ideal_of(host, "x, y");
  const auto J = ideal_of(host, "u, v");
  for (unsigned i = 0; i <= 3; ++i) {
    for (unsigned j = 0; j <= 3; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      const auto Ii = ideal_power(I, i);
      const auto Jj = ideal_power(J, j);
      CHECK(ideal_equal(ideal_intersect(Ii, Jj), ideal_product(Ii, Jj)));
    }
  }
}

TEST_CASE("colength examples") {
  const auto host = plain_host(2, 6);
  CHECK(colength(ideal_power(ideal_of(host, "x, y"), 3)).value == 6);
  CHECK_THROWS_AS(colength(ideal_of(host, "x")), NotPrimaryError);
}

TEST_CASE("monomial colengths agree with staircase counting") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t v = 2 + trial % 2;
    const auto gens = oracle::random_monomial_ideal(v, 4, rng);
    const unsigned s = floor_bound(gens, v);
    const auto host = plain_host(v, s + 1);
    const auto k = monomial_ideal(host, gens);
    CAPTURE(oracle::monomial_presentation(gens, v));
    CHECK(colength(k).value == oracle::staircase_colength(gens, v, static_cast<int>(s + 1)));
  }
}

TEST_CASE("colength does not depend on the truncation order") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t v = 2 + trial % 2;
    const auto gens = oracle::random_monomial_ideal(v, 3, rng);
    const unsigned N = floor_bound(gens, v) + 1;
    const auto a = colength(monomial_ideal(plain_host(v, N), gens)).value;
    const auto b = colength(monomial_ideal(plain_host(v, N + 2), gens)).value;
    CHECK(a == b);
  }
  // A non-monomial ideal in a ring with relations.
  const auto pres = load_presentation(HILBERTLAB_DATA_DIR "/depth_zero_m1_d2.txt");
  const auto h8 = std::make_shared<const TruncatedLocalAlgebra>(pres, 8);
  const auto h10 = std::make_shared<const TruncatedLocalAlgebra>(pres, 10);
  const auto q8 = ideal_from_polynomials(h8, pres.reduction);
  const auto q10 = ideal_from_polynomials(h10, pres.reduction);
  CHECK(colength(q8).value == colength(q10).value);
}

TEST_CASE("products of monomial ideals are associative and commutative") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t v = 2;
    const auto ga = oracle::random_monomial_ideal(v, 3, rng);
    const auto gb = oracle::random_monomial_ideal(v, 3, rng);
    const auto gc = oracle::random_monomial_ideal(v, 3, rng);
    const unsigned N = floor_bound(ga, v) + floor_bound(gb, v) + floor_bound(gc, v) + 1;
    const auto host = plain_host(v, N);
    const auto a = monomial_ideal(host, ga), b = monomial_ideal(host, gb), c = monomial_ideal(host, gc);
    CHECK(ideal_equal(ideal_product(ideal_product(a, b), c), ideal_product(a, ideal_product(b, c))));
    CHECK(ideal_equal(ideal_product(a, b), ideal_product(b, a)));
    CHECK(colength(ideal_product(a, b)).value ==
          oracle::staircase_colength(oracle::product(ga, gb), v, static_cast<int>(N)));
  }
}

TEST_CASE("length is additive along inclusions") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t v = 2 + trial % 2;
    const auto ga = oracle::random_monomial_ideal(v, 3, rng);
    const auto gb = oracle::random_monomial_ideal(v, 3, rng);
    const unsigned N = floor_bound(ga, v) + floor_bound(gb, v) + 1;
    const auto host = plain_host(v, N);
    const auto a = monomial_ideal(host, ga), b = monomial_ideal(host, gb);
    const auto sum = ideal_sum(a, b), meet = ideal_intersect(a, b), prod = ideal_product(a, b);
    CHECK(ideal_contains(sum, a));
    CHECK(ideal_contains(a, meet));
    CHECK(ideal_contains(meet, prod));
    // ℓ(A/a) + ℓ(a/(a∩b)) = ℓ(A/(a∩b)), with the middle term counted by
    // dense elimination in A/m^N.
    const std::size_t D = host->dimension();
    const std::size_t rank_a = oracle::rank(dense_ideal(a, D), 32003);
    const std::size_t rank_meet = oracle::rank(dense_ideal(meet, D), 32003);
    CHECK(colength(a).value + (rank_a - rank_meet) == colength(meet).value);
    CHECK(colength(a).value == D - rank_a);
    CHECK(colength(meet).value + colength(sum).value == colength(a).value + colength(b).value);
  }
}

TEST_CASE("integral closure of monomial ideals") {
  const auto host = plain_host(2, 10);
  CHECK(ideal_equal(monomial_integral_closure(ideal_of(host, "x^2, y^2")), ideal_of(host, "x^2, x*y, y^2")));
  const auto m = ideal_of(host, "x, y");
  for (unsigned k = 1; k <= 4; ++k) CHECK(ideal_equal(monomial_integral_closure(ideal_power(m, k)), ideal_power(m, k)));
  const auto c = monomial_integral_closure(ideal_of(host, "x^2, y^3"));
  CHECK(ideal_equal(c, ideal_of(host, "x^2, x*y^2, y^3")));
  CHECK(oracle::power_membership({1, 2}, {{2, 0}, {0, 3}}, 2));
  CHECK_FALSE(oracle::power_membership({1, 1}, {{2, 0}, {0, 3}}, 6));

  CHECK_THROWS_AS(monomial_integral_closure(ideal_of(host, "x^2 + y^2, x*y")), RefusalError);
  const auto rel = host_of("char: 32003\nvars: x, y\nrelations: x^2 - y^3\ndim: 1\ncm: true\nideal: x, y\n", 6);
  CHECK_THROWS_AS(monomial_integral_closure(ideal_of(rel, "x, y")), RefusalError);
}

TEST_CASE("integral closure is idempotent and matches the power oracle") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t v = 2 + trial % 2;
    const auto gens = oracle::random_monomial_ideal(v, 3, rng);
    const unsigned N = floor_bound(gens, v) + 1;
    const auto host = plain_host(v, N);
    const auto k = monomial_ideal(host, gens);
    const auto c = monomial_integral_closure(k);
    CHECK(ideal_contains(c, k));
    CHECK(ideal_equal(monomial_integral_closure(c), c));
    const oracle::PowerMembership member(gens, v == 2 ? 24 : 12);
    for (const auto& e : closure_minimal_generators(k)) {
      CHECK(member(oracle::Exps(e.begin(), e.end())));
    }
  }
}
