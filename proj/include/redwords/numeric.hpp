#pragma once

// Exact arithmetic carriers. Every exact expectation in the library is a
// Rational held in canonical form (gcd 1, positive denominator).

#include <gmpxx.h>

#include <string>

namespace redwords {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace redwords
