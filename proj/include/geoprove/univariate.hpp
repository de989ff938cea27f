#pragma once

#include <vector>

#include "geoprove/polynomial.hpp"

namespace geoprove {

// Dense univariate polynomial over the rationals; coefficient i is the
// coefficient of x^i. Used by the sampled implication checker and the
// R-factorizability probe, which both reduce a multivariate question to
// real-root finding on a line.
struct UniPoly {
  std::vector<Rational> coeffs;

  void normalize();  // drop trailing zeros
  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Rational eval(const Rational& x) const;
  UniPoly derivative() const;
};

// p as univariate in `var`, the other variables fixed at the given values
// (values indexed by table position; the entry for `var` is ignored).
UniPoly specialize(const Polynomial& p, std::size_t var, const std::vector<Rational>& values);

// p restricted to the parametric line theta(t) = base + t * dir.
UniPoly restrict_to_line(const Polynomial& p, const std::vector<Rational>& base,
                         const std::vector<Rational>& dir);

// Number of distinct real roots (Sturm).
int count_real_roots(const UniPoly& p);

// Distinct real roots approximated by bisection to width 2^-precision_bits;
// rational roots hit exactly are returned exactly.
std::vector<Rational> real_roots(const UniPoly& p, unsigned precision_bits = 80);

}  // namespace geoprove
