#pragma once

#include <compare>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geoprove/rational.hpp"
#include "geoprove/variable_table.hpp"

namespace geoprove {

class RationalFunction;

// Degree of the zero polynomial; ordered below every honest degree.
inline constexpr int kNegInfinity = std::numeric_limits<int>::min();

// Exponent vector over a fixed variable table, with the total degree cached.
class Monomial {
 public:
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0u) {}
  static Monomial unit(std::size_t nvars, std::size_t var, unsigned exp = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  unsigned exponent(std::size_t i) const { return exps_[i]; }
  int degree() const noexcept { return degree_; }
  bool is_constant() const noexcept { return degree_ == 0; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;       // componentwise <=
  Monomial divided_into(const Monomial& o) const;  // o / *this
  Monomial without(std::size_t var) const;     // exponent of var zeroed

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

  // Graded lexicographic: total degree first, then earlier variables weigh
  // more. This is the canonical term order everywhere in the engine.
  std::strong_ordering graded_lex(const Monomial& o) const;

 private:
  std::vector<unsigned> exps_;
  int degree_ = 0;
};

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return a.graded_lex(b) == std::strong_ordering::greater;
  }
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariants: no stored coefficient is zero; at most one term per monomial;
// the zero polynomial has an empty term map.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialGreater>;

  explicit Polynomial(VarTablePtr table);
  static Polynomial zero(VarTablePtr table) { return Polynomial(std::move(table)); }
  static Polynomial constant(VarTablePtr table, const Rational& value);
  static Polynomial variable(VarTablePtr table, std::size_t var);

  const VarTablePtr& table() const noexcept { return table_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_one() const;
  Rational constant_value() const;  // requires is_constant()

  int total_degree() const;  // kNegInfinity for the zero polynomial
  int degree_in(std::size_t var) const;
  bool uses(std::size_t var) const { return degree_in(var) > 0; }

  const Rational& leading_coefficient() const;  // requires nonzero
  const Monomial& leading_monomial() const;     // requires nonzero
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial pow(unsigned k) const;
  Polynomial derivative(std::size_t var) const;

  bool operator==(const Polynomial& o) const;

  void add_term(const Monomial& m, const Rational& c);

  // Canonical textual form: terms in descending graded-lex order,
  // e.g. "a^2 + b^2 - 2*b*c".
  std::string str() const;

 private:
  void check_compatible(const Polynomial& o) const;

  VarTablePtr table_;
  TermMap terms_;
};

// Scales a nonzero polynomial to integer coefficients with content 1 and a
// positive leading coefficient. Idempotent. Throws MathError on zero input.
Polynomial canonicalize(const Polynomial& p);

// Quotient of p by q when the division is exact.
std::optional<Polynomial> try_exact_divide(const Polynomial& p, const Polynomial& q);
Polynomial exact_divide(const Polynomial& p, const Polynomial& q);  // throws

// Canonical greatest common divisor (primitive-part recursion with a
// primitive polynomial remainder sequence). gcd(p, 0) = canonicalize(p).
Polynomial gcd(const Polynomial& p, const Polynomial& q);
Polynomial lcm(const Polynomial& p, const Polynomial& q);

// p / gcd(p, all partial derivatives): same zero set, no repeated factor.
Polynomial squarefree_part(const Polynomial& p);

// True when gcd(p, dp/dx1, ..., dp/dxn) is constant, i.e. p has no repeated
// factor. (The per-variable gcds alone are not constant in general: a factor
// that does not involve some variable survives that variable's gcd.)
bool is_squarefree(const Polynomial& p);

// Squarefree part of the LCM of the set; the least-degree polynomial whose
// zero set contains every member's (the m.c.s. operation).
Polynomial mcs(const std::vector<Polynomial>& set);

struct Homogeneity {
  bool homogeneous = false;
  bool all_degrees = false;  // zero polynomial: homogeneous of every degree
  int degree = 0;            // meaningful only when homogeneous && !all_degrees
};
Homogeneity homogeneity(const Polynomial& p);

// Partition of the terms by total degree, descending; summing the parts
// reproduces the input. Throws on zero input.
std::vector<std::pair<int, Polynomial>> homogeneous_components(const Polynomial& p);

// Exact composition; unbound variables stay themselves. Throws MathError
// when a bound name is not in p's table or tables mismatch.
RationalFunction substitute(const Polynomial& p,
                            const std::map<std::string, RationalFunction>& bindings);

// Substitution of a single explicit polynomial binding var := rhs.
Polynomial substitute_poly(const Polynomial& p, std::size_t var, const Polynomial& rhs);

// Full evaluation at a rational point given in table order.
Rational evaluate(const Polynomial& p, const std::vector<Rational>& point);

}  // namespace geoprove
