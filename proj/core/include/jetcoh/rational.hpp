#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace jetcoh {

/// Arbitrary-precision rational; every exact computation in the library uses it.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Canonical text form: "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& q);

/// Inverse of to_string; throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonicalized p/q; mpq_class(p, q) alone does not reduce.
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Least common multiple of the denominators of a range of rationals.
BigInt common_denominator(const std::vector<Rational>& values);

}  // namespace jetcoh
