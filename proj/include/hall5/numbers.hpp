// Exact arbitrary-precision integer and rational types used everywhere.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hall5 {

using Int = mpz_class;
using Rat = mpq_class;

// Normal-form coordinates (a_1,...,a_n) of a group element.
using ExponentVector = std::vector<Int>;

// mpq_class(n, d) does not canonicalize; always construct through this.
inline Rat rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat(long num, long den = 1) { return rat(Int(num), Int(den)); }

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

inline Int power(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

std::string to_string(const ExponentVector& v);
ExponentVector parse_exponent_vector(const std::string& text);

}  // namespace hall5
