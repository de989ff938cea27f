#include <algorithm>
#include <map>

#include "geoprove/errors.hpp"
#include "geoprove/polynomial.hpp"

// Multivariate gcd by primitive-part recursion: pick a main variable, split
// off the content (a gcd over coefficient polynomials in the remaining
// variables), then run Brown's subresultant remainder sequence on the
// primitive parts. The subresultant divisions keep coefficient growth
// polynomial without any content computation inside the loop.

namespace geoprove {

namespace {

Polynomial one_poly(const VarTablePtr& table) {
  return Polynomial::constant(table, Rational(1));
}

// Coefficients of p viewed as univariate in `var` (exponent of var zeroed).
std::map<int, Polynomial> coefficients_in(const Polynomial& p, std::size_t var) {
  std::map<int, Polynomial> out;
  for (const auto& [m, c] : p.terms()) {
    int e = static_cast<int>(m.exponent(var));
    auto it = out.find(e);
    if (it == out.end()) it = out.emplace(e, Polynomial(p.table())).first;
    it->second.add_term(m.without(var), c);
  }
  return out;
}

Polynomial leading_coefficient_in(const Polynomial& p, std::size_t var) {
  int d = p.degree_in(var);
  Polynomial out(p.table());
  for (const auto& [m, c] : p.terms())
    if (static_cast<int>(m.exponent(var)) == d) out.add_term(m.without(var), c);
  return out;
}

Polynomial times_power(const Polynomial& p, std::size_t var, unsigned e) {
  if (e == 0) return p;
  Polynomial shift(p.table());
  shift.add_term(Monomial::unit(p.table()->size(), var, e), Rational(1));
  return p * shift;
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
  // Fold the gcd starting from the cheapest coefficients so the common
  // constant case collapses quickly.
  std::vector<Polynomial> coeffs;
  for (auto& [e, coeff] : coefficients_in(p, var)) coeffs.push_back(std::move(coeff));
  std::sort(coeffs.begin(), coeffs.end(), [](const Polynomial& a, const Polynomial& b) {
    return std::make_pair(a.total_degree(), a.term_count()) <
           std::make_pair(b.total_degree(), b.term_count());
  });
  Polynomial acc(p.table());
  for (const auto& coeff : coeffs) {
    acc = gcd(acc, coeff);
    if (acc.is_one()) break;
  }
  return acc;
}

// Pseudo-remainder with the standard normalization lc(B)^(deg A - deg B + 1).
Polynomial pseudo_remainder(const Polynomial& A, const Polynomial& B, std::size_t var) {
  const int db = B.degree_in(var);
  const Polynomial lb = leading_coefficient_in(B, var);
  int scale_left = A.degree_in(var) - db + 1;
  Polynomial R(A);
  while (!R.is_zero() && R.degree_in(var) >= db) {
    const int dr = R.degree_in(var);
    const Polynomial lr = leading_coefficient_in(R, var);
    R = R * lb - times_power(lr * B, var, static_cast<unsigned>(dr - db));
    --scale_left;
  }
  for (; scale_left > 0; --scale_left) R = R * lb;
  return R;
}

// gcd of A and B, both primitive in `var`, up to a content factor.
Polynomial subresultant_prs(Polynomial A, Polynomial B, std::size_t var) {
  const auto& table = A.table();
  if (A.degree_in(var) < B.degree_in(var)) std::swap(A, B);
  Polynomial g = one_poly(table);
  Polynomial h = one_poly(table);
  while (true) {
    const int delta = A.degree_in(var) - B.degree_in(var);
    Polynomial R = pseudo_remainder(A, B, var);
    if (R.is_zero()) break;
    if (R.degree_in(var) == 0) return one_poly(table);  // coprime in var
    // B_next = R / (g * h^delta), exact by the subresultant theory.
    Polynomial divisor = g * h.pow(static_cast<unsigned>(delta));
    A = std::move(B);
    B = exact_divide(R, divisor);
    g = leading_coefficient_in(A, var);
    // h = g^delta * h^(1-delta)
    if (delta == 1)
      h = g;
    else if (delta > 1)
      h = exact_divide(g.pow(static_cast<unsigned>(delta)),
                       h.pow(static_cast<unsigned>(delta - 1)));
  }
  return exact_divide(B, content_in(B, var));
}

}  // namespace

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (!p.table()->same_as(*q.table())) throw MathError("variable-table mismatch");
  if (p.is_zero() && q.is_zero()) throw MathError("gcd of two zero polynomials");
  if (p.is_zero()) return canonicalize(q);
  if (q.is_zero()) return canonicalize(p);
  if (p.is_constant() || q.is_constant()) return one_poly(p.table());
  if (p == q) return canonicalize(p);

  // Main variable: lowest maximum degree among variables used by both.
  const std::size_t nvars = p.table()->size();
  std::size_t var = nvars;
  int best = -1;
  for (std::size_t v = 0; v < nvars; ++v) {
    int dp = p.degree_in(v), dq = q.degree_in(v);
    if (dp == 0 || dq == 0) continue;
    int m = std::max(dp, dq);
    if (best < 0 || m < best) {
      best = m;
      var = v;
    }
  }
  if (var == nvars) return one_poly(p.table());  // no shared variable

  const Polynomial cp = content_in(p, var);
  const Polynomial cq = content_in(q, var);
  const Polynomial c = gcd(cp, cq);
  Polynomial g = subresultant_prs(exact_divide(p, cp), exact_divide(q, cq), var);
  return canonicalize(c * g);
}

Polynomial lcm(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) throw MathError("lcm with a zero polynomial");
  return canonicalize(exact_divide(p * q, gcd(p, q)));
}

namespace {
// gcd of p with all of its partial derivatives.
Polynomial derivative_gcd(const Polynomial& p) {
  Polynomial g(p);
  for (std::size_t v = 0; v < p.table()->size(); ++v) {
    if (!p.uses(v)) continue;
    g = gcd(g, p.derivative(v));
    if (g.is_constant()) break;
  }
  return g;
}
}  // namespace

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw MathError("squarefree part of the zero polynomial");
  if (p.is_constant()) return one_poly(p.table());
  return canonicalize(exact_divide(p, derivative_gcd(p)));
}

bool is_squarefree(const Polynomial& p) {
  if (p.is_zero()) return false;
  if (p.is_constant()) return true;
  return derivative_gcd(p).is_constant();
}

Polynomial mcs(const std::vector<Polynomial>& set) {
  if (set.empty()) throw MathError("m.c.s. of an empty set");
  for (const auto& p : set)
    if (p.is_zero()) throw MathError("m.c.s. with a zero member");
  Polynomial acc = canonicalize(set.front());
  for (std::size_t i = 1; i < set.size(); ++i) acc = lcm(acc, set[i]);
  return squarefree_part(acc);
}

}  // namespace geoprove
