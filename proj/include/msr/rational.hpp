#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace msr {

// Exact arithmetic carriers. mpq_class keeps values reduced to lowest terms
// with a positive denominator once canonicalized; every constructor path in
// this codebase goes through make_rational or arithmetic on already-canonical
// values, so the invariant holds everywhere.
using BigInt = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const BigInt& z) { return z.get_str(); }

}  // namespace msr
