#include <algorithm>
#include <set>

#include "doctest.h"
#include "hilbertlab/determinantal.hpp"
#include "hilbertlab/errors.hpp"

using namespace hl;

namespace {

std::set<std::string> reduction_text(const DeterminantalInstance& inst) {
  std::set<std::string> out;
  for (const auto& q : inst.presentation.reduction) out.insert(print_polynomial(q, inst.presentation.variables));
  return out;
}

// Every multiset of s matrix entries, as a sorted list.
std::vector<std::vector<MatrixEntry>> degree_s_monomials(unsigned s, unsigned t) {
  std::vector<MatrixEntry> entries;
  for (unsigned i = 1; i <= s; ++i) {
    for (unsigned j = 1; j <= t; ++j) entries.push_back({i, j});
  }
  std::vector<std::vector<MatrixEntry>> out;
  std::vector<std::size_t> idx(s, 0);
  for (;;) {
    std::vector<MatrixEntry> m;
    for (auto k : idx) m.push_back(entries[k]);
    out.push_back(m);
    std::size_t p = s;
    while (p > 0 && idx[p - 1] == entries.size() - 1) --p;
    if (p == 0) return out;
    ++idx[p - 1];
    for (std::size_t q = p; q < s; ++q) idx[q] = idx[p - 1];
  }
}

}  // namespace

TEST_CASE("parameter ideal of the determinantal ring") {
  const auto a = build_determinantal(2, 3);
  CHECK(a.presentation.nvars() == 6);
  CHECK(a.presentation.relations.size() == 3);
  CHECK(a.presentation.dimension == 4);
  CHECK(reduction_text(a) == std::set<std::string>{"x21", "x13", "x22 - x11", "x23 - x12"});

  const auto b = build_determinantal(2, 2);
  CHECK(b.presentation.relations.size() == 1);
  CHECK(reduction_text(b) == std::set<std::string>{"x21", "x12", "x22 - x11"});

  const auto c = build_determinantal(3, 3);
  CHECK(c.presentation.nvars() == 9);
  CHECK(c.presentation.dimension == 8);
  CHECK(c.presentation.reduction.size() == 8);

  CHECK_THROWS_AS(build_determinantal(1, 3), DomainError);
  CHECK_THROWS_AS(build_determinantal(3, 2), DomainError);
}

TEST_CASE("straightening examples") {
  const auto killed = straighten(2, 3, {{2, 1}, {1, 2}});
  CHECK(killed.status == StraighteningResult::Status::in_qI);

  const auto moved = straighten(2, 3, {{1, 1}, {1, 2}});
  CHECK(moved.status == StraighteningResult::Status::standard);
  CHECK(moved.indices == std::vector<unsigned>{1, 3});
  CHECK(standard_monomial(moved.indices) == std::vector<MatrixEntry>{{1, 1}, {2, 3}});

  const auto fixed = straighten(2, 3, {{1, 1}, {2, 2}});
  CHECK(fixed.status == StraighteningResult::Status::standard);
  CHECK(fixed.indices == std::vector<unsigned>{1, 2});
  CHECK(standard_monomial(fixed.indices) == std::vector<MatrixEntry>{{1, 1}, {2, 2}});

  CHECK_THROWS_AS(straighten(2, 3, {{1, 1}}), DomainError);
  CHECK_THROWS_AS(straighten(2, 3, {{1, 1}, {1, 4}}), DomainError);
}

TEST_CASE("straightening is confluent over factor orders") {
  for (auto [s, t] : {std::pair{2u, 3u}, std::pair{2u, 4u}, std::pair{3u, 3u}}) {
    for (auto mono : degree_s_monomials(s, t)) {
      const auto ref = straighten(s, t, mono);
      std::sort(mono.begin(), mono.end(), [](auto a, auto b) { return std::pair{a.row, a.col} < std::pair{b.row, b.col}; });
      do {
        const auto r = straighten(s, t, mono);
        CHECK(r.status == ref.status);
        CHECK(r.indices == ref.indices);
      } while (std::next_permutation(mono.begin(), mono.end(), [](auto a, auto b) {
        return std::pair{a.row, a.col} < std::pair{b.row, b.col};
      }));
    }
  }
}

TEST_CASE("straightening congruences are certified") {
  for (auto [s, t] : {std::pair{2u, 3u}, std::pair{3u, 3u}}) {
    const auto inst = build_determinantal(s, t);
    const auto checks = check_straightening(inst);
    CHECK(checks.size() == degree_s_monomials(s, t).size());
    for (const auto& c : checks) {
      CHECK(c.congruence_certified);
      CHECK(c.standard_survives);
    }
  }
}

TEST_CASE("power reduction by both routes") {
  for (auto [s, t] : {std::pair{2u, 2u}, std::pair{2u, 3u}, std::pair{2u, 4u}, std::pair{3u, 3u}}) {
    CAPTURE(s);
    CAPTURE(t);
    const auto cert = verify_power_reduction(build_determinantal(s, t));
    CHECK(cert.linear);
    CHECK(cert.symbolic);
    for (const auto& step : cert.steps) CHECK(step.ok);
  }
}

TEST_CASE("reduction number and Valabrega-Valla table") {
  for (auto [s, t] : {std::pair{2u, 2u}, std::pair{2u, 3u}, std::pair{3u, 3u}}) {
    const auto red = verify_valabrega_valla(build_determinantal(s, t), 3);
    REQUIRE(red.reduction_number.has_value());
    CHECK(*red.reduction_number == s - 1);
    CHECK(red.previous_power_differs);
    CHECK(red.vv.size() == 4);
    for (const auto& e : red.vv) CHECK(e.holds);
  }
}

TEST_CASE("intersections of powers of disjoint variable ideals") {
  CHECK(verify_disjoint_intersections(2, 2, 3, 3));
  CHECK(verify_disjoint_intersections(3, 2, 2, 2));
  CHECK(verify_disjoint_intersections(2, 2, 0, 3));
}
