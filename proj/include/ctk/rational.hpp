#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ctk {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// "a/b" when b != 1, otherwise "a".
inline std::string rational_str(const Rational& q) { return q.get_str(); }

// Fixed-point decimal with `digits` places, rounded half away from zero.
std::string decimal_str(const Rational& q, int digits);

// q rounded to `digits` decimal places, returned as an exact rational.
Rational round_decimal(const Rational& q, int digits);

Rational parse_rational(const std::string& text);

}  // namespace ctk
