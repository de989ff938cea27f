#pragma once

#include <gmpxx.h>

#include <string>

namespace geoprove {

// Arbitrary-precision rational. mpq_class keeps the canonical form we need:
// reduced fraction, denominator > 0.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

std::string rational_str(const Rational& r);

// Accepts "p" or "p/q" with optional sign; throws MathError on malformed
// input or zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace geoprove
