#include "hilbertlab/closure.hpp"

#include <map>

#include "hilbertlab/errors.hpp"
#include "hilbertlab/lp.hpp"

namespace hl {

std::optional<std::vector<Exponents>> monomial_generators(const IdealSubspace& k) {
  std::vector<Exponents> out;
  for (const auto& g : k.generators()) {
    if (g.size() != 1) return std::nullopt;
    out.push_back(k.host().column_monomial(g.idx[0]));
  }
  return out;
}

std::vector<Exponents> closure_minimal_generators(const IdealSubspace& k) {
  const TruncatedLocalAlgebra& host = k.host();
  if (!host.presentation().relations.empty()) {
    throw RefusalError("closure undecidable here: the ring has relations; use --assume-integrally-closed");
  }
  const auto gens = monomial_generators(k);
  if (!gens) throw RefusalError("closure undecidable here: a generator is not a monomial; use --assume-integrally-closed");
  if (!k.certified()) throw NotPrimaryError("possibly not m-primary: closure needs an m-primary monomial ideal");

  std::vector<std::vector<std::int64_t>> points;
  for (const auto& g : *gens) points.emplace_back(g.begin(), g.end());
  const unsigned f = *k.floor();

  std::map<Exponents, bool> member;
  auto in_closure = [&](const Exponents& a) {
    if (total_degree(a) >= f) return true;
    auto it = member.find(a);
    if (it != member.end()) return it->second;
    bool in = false;
    for (const auto& g : *gens) in = in || divides(g, a);
    if (!in) in = rational_lp_member(std::vector<std::int64_t>(a.begin(), a.end()), points);
    member.emplace(a, in);
    return in;
  };

  std::vector<Exponents> out;
  for (unsigned deg = 0; deg <= f; ++deg) {
    for (const auto& a : monomials_of_degree(host.nvars(), deg)) {
      if (!in_closure(a)) continue;
      bool minimal = true;
      for (std::size_t i = 0; i < a.size() && minimal; ++i) {
        if (a[i] == 0) continue;
        Exponents b = a;
        --b[i];
        minimal = !in_closure(b);
      }
      if (minimal) out.push_back(a);
    }
  }
  return out;
}

IdealSubspace monomial_integral_closure(const IdealSubspace& k) {
  const TruncatedLocalAlgebra& host = k.host();
  std::vector<SparseVec> gens;
  for (const auto& a : closure_minimal_generators(k)) {
    const std::uint32_t c = host.column_of(a);
    if (c == TruncatedLocalAlgebra::none) continue;
    gens.push_back(SparseVec{{c}, {1}});
  }
  return ideal_from_generators(k.host_ptr(), std::move(gens));
}

}  // namespace hl
