#pragma once

#include <gmpxx.h>

#include <string>

namespace ffc {

// Exact arithmetic types. Rationals are the canonical coefficient field of
// the library; doubles appear only in root finding and Monte Carlo.
using Integer = mpz_class;
using Rational = mpq_class;

// Parses "num", "num/den", or a plain decimal like "-2.5" (read exactly).
Rational parse_rational(const std::string& text);

// "num/den", or just "num" when the denominator is 1.
std::string to_fraction_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

// num/den in lowest terms (the two-argument mpq constructors do not
// canonicalize on their own).
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}
inline Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

Integer factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

}  // namespace ffc
