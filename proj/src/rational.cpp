#include "hilbertlab/rational.hpp"

namespace hl {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || n < k) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

const char* relation_symbol(int cmp) {
  if (cmp < 0) return "<";
  if (cmp > 0) return ">";
  return "=";
}

}  // namespace hl
