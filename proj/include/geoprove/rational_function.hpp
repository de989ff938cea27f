#pragma once

#include <string>
#include <vector>

#include "geoprove/polynomial.hpp"

namespace geoprove {

// Quotient of two polynomials, always stored reduced: gcd(num, den) is
// constant and den is canonical (so a polynomial value has den == 1).
class RationalFunction {
 public:
  explicit RationalFunction(Polynomial num);
  RationalFunction(Polynomial num, Polynomial den);  // throws if den == 0

  static RationalFunction constant(VarTablePtr table, const Rational& value);
  static RationalFunction variable(VarTablePtr table, std::size_t var);
  static RationalFunction zero(VarTablePtr table);

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }
  const VarTablePtr& table() const noexcept { return num_.table(); }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;  // throws on zero
  RationalFunction pow(unsigned k) const;

  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  // Throws MathError when the denominator vanishes at the point.
  Rational evaluate(const std::vector<Rational>& point) const;

  std::string str() const;  // "num" or "(num) / (den)"

 private:
  void reduce();

  Polynomial num_;
  Polynomial den_;
};

}  // namespace geoprove
