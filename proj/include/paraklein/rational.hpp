#pragma once

#include <gmpxx.h>

#include <string>

namespace paraklein {

// Exact arbitrary-precision rationals back every coefficient and matrix
// entry; there is no floating point anywhere in the library.
using Rational = mpq_class;
using Integer = mpz_class;

// mpq_class(num, den) does not canonicalize on construction.
inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "p/q" in lowest terms, "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Integer factorial(unsigned long k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace paraklein
