#include "geoprove/rational_function.hpp"

#include "geoprove/errors.hpp"

namespace geoprove {

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.table(), Rational(1))) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (!num_.table()->same_as(*den_.table())) throw MathError("variable-table mismatch");
  if (den_.is_zero()) throw MathError("rational function with zero denominator");
  reduce();
}

RationalFunction RationalFunction::constant(VarTablePtr table, const Rational& value) {
  return RationalFunction(Polynomial::constant(std::move(table), value));
}

RationalFunction RationalFunction::variable(VarTablePtr table, std::size_t var) {
  return RationalFunction(Polynomial::variable(std::move(table), var));
}

RationalFunction RationalFunction::zero(VarTablePtr table) {
  return RationalFunction(Polynomial::zero(std::move(table)));
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.table(), Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
  }
  // Normalize so the denominator is canonical; a constant denominator
  // becomes exactly 1.
  Polynomial dc = canonicalize(den_);
  Rational scale = den_.leading_coefficient() / dc.leading_coefficient();
  den_ = std::move(dc);
  num_ = num_ * (Rational(1) / scale);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r(*this);
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw MathError("division by an identically zero expression");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::pow(unsigned k) const {
  RationalFunction acc = RationalFunction::constant(table(), Rational(1));
  RationalFunction base(*this);
  while (k > 0) {
    if (k & 1u) acc = acc * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return acc;
}

Rational RationalFunction::evaluate(const std::vector<Rational>& point) const {
  Rational d = geoprove::evaluate(den_, point);
  if (d == 0) throw MathError("denominator vanishes at the evaluation point");
  return geoprove::evaluate(num_, point) / d;
}

std::string RationalFunction::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace geoprove
