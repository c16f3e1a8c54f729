#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace hl {

using Rational = mpq_class;
using Integer = mpz_class;

/// "a" for integers, "a/b" otherwise (canonical form).
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// binom(n, k); 0 whenever k < 0, n < 0 or n < k.
Integer binomial(std::int64_t n, std::int64_t k);

/// Three-way comparison symbol: "<", "=", ">".
const char* relation_symbol(int cmp);

}  // namespace hl
