#pragma once

// Exact scalars. Integer and Rat are GMP's mpz_class / mpq_class; every
// arithmetic result of mpq_class is kept in lowest terms with a positive
// denominator, so Rat values can be compared with == directly.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

#include "implicit/errors.hpp"

namespace implicit {

using Integer = mpz_class;
using Rat = mpq_class;

/// num/den in lowest terms. Throws InvalidArgument when den == 0.
inline Rat make_rat(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_canonical(const Rat& r) {
  if (r.get_den() <= 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return g == 1;
}

/// Number of bits in |z|; 0 for z == 0.
inline std::size_t bit_length(const Integer& z) {
  if (sgn(z) == 0) return 0;
  return mpz_sizeinbase(z.get_mpz_t(), 2);
}

/// Larger of the numerator and denominator bit lengths.
inline std::size_t bit_length(const Rat& r) {
  const std::size_t a = bit_length(r.get_num());
  const std::size_t b = bit_length(r.get_den());
  return a > b ? a : b;
}

/// "p" or "p/q".
inline std::string to_string(const Rat& r) { return r.get_str(10); }

/// Parses "p" or "p/q" (optional leading sign, decimal digits only).
Rat parse_rat(std::string_view text);

inline Rat pow(const Rat& base, std::size_t exponent) {
  Rat result(1);
  Rat b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace implicit
