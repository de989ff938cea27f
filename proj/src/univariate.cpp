#include "geoprove/univariate.hpp"

#include <algorithm>

#include "geoprove/errors.hpp"

namespace geoprove {

void UniPoly::normalize() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

UniPoly UniPoly::derivative() const {
  UniPoly d;
  for (std::size_t i = 1; i < coeffs.size(); ++i)
    d.coeffs.push_back(coeffs[i] * Rational(static_cast<long>(i)));
  d.normalize();
  return d;
}

namespace {

UniPoly remainder(UniPoly a, const UniPoly& b) {
  while (!a.is_zero() && a.degree() >= b.degree()) {
    Rational f = a.coeffs.back() / b.coeffs.back();
    int shift = a.degree() - b.degree();
    for (std::size_t i = 0; i < b.coeffs.size(); ++i)
      a.coeffs[i + shift] -= f * b.coeffs[i];
    a.coeffs.pop_back();
    a.normalize();
  }
  return a;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = remainder(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

UniPoly uni_divide(const UniPoly& a, const UniPoly& b) {
  UniPoly rest = a, q;
  q.coeffs.assign(std::max<std::size_t>(a.coeffs.size(), 1), Rational(0));
  while (!rest.is_zero() && rest.degree() >= b.degree()) {
    Rational f = rest.coeffs.back() / b.coeffs.back();
    int shift = rest.degree() - b.degree();
    q.coeffs[shift] = f;
    for (std::size_t i = 0; i < b.coeffs.size(); ++i)
      rest.coeffs[i + shift] -= f * b.coeffs[i];
    rest.coeffs.pop_back();
    rest.normalize();
  }
  q.normalize();
  return q;
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  std::vector<UniPoly> chain;
  chain.push_back(p);
  chain.push_back(p.derivative());
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    UniPoly r = remainder(chain[chain.size() - 2], chain.back());
    for (auto& c : r.coeffs) c = -c;
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

int variations_at(const std::vector<UniPoly>& chain, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& s : chain) {
    int sg = sign_of(s.eval(x));
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++count;
    last = sg;
  }
  return count;
}

Rational cauchy_bound(const UniPoly& p) {
  Rational m(0);
  Rational lead = rat_abs(p.coeffs.back());
  for (std::size_t i = 0; i + 1 < p.coeffs.size(); ++i) {
    Rational q = rat_abs(p.coeffs[i]) / lead;
    if (q > m) m = q;
  }
  return m + 1;
}

}  // namespace

UniPoly specialize(const Polynomial& p, std::size_t var, const std::vector<Rational>& values) {
  UniPoly out;
  for (const auto& [m, c] : p.terms()) {
    Rational coeff(c);
    for (std::size_t v = 0; v < values.size(); ++v) {
      if (v == var) continue;
      for (unsigned k = 0; k < m.exponent(v); ++k) coeff *= values[v];
    }
    std::size_t e = m.exponent(var);
    if (out.coeffs.size() <= e) out.coeffs.resize(e + 1, Rational(0));
    out.coeffs[e] += coeff;
  }
  out.normalize();
  return out;
}

UniPoly restrict_to_line(const Polynomial& p, const std::vector<Rational>& base,
                         const std::vector<Rational>& dir) {
  // Each variable becomes the linear polynomial base + t*dir; multiply out.
  UniPoly acc;
  for (const auto& [m, c] : p.terms()) {
    UniPoly term;
    term.coeffs = {c};
    for (std::size_t v = 0; v < base.size(); ++v) {
      for (unsigned k = 0; k < m.exponent(v); ++k) {
        UniPoly next;
        next.coeffs.assign(term.coeffs.size() + 1, Rational(0));
        for (std::size_t i = 0; i < term.coeffs.size(); ++i) {
          next.coeffs[i] += term.coeffs[i] * base[v];
          next.coeffs[i + 1] += term.coeffs[i] * dir[v];
        }
        term = std::move(next);
      }
    }
    if (acc.coeffs.size() < term.coeffs.size()) acc.coeffs.resize(term.coeffs.size(), Rational(0));
    for (std::size_t i = 0; i < term.coeffs.size(); ++i) acc.coeffs[i] += term.coeffs[i];
  }
  acc.normalize();
  return acc;
}

int count_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw MathError("root count of the zero polynomial");
  if (p.degree() == 0) return 0;
  UniPoly g = uni_gcd(p, p.derivative());
  UniPoly sf = g.degree() > 0 ? uni_divide(p, g) : p;
  auto chain = sturm_chain(sf);
  Rational bound = cauchy_bound(sf);
  return variations_at(chain, -bound) - variations_at(chain, bound);
}

std::vector<Rational> real_roots(const UniPoly& p, unsigned precision_bits) {
  if (p.is_zero()) throw MathError("roots of the zero polynomial");
  std::vector<Rational> roots;
  if (p.degree() == 0) return roots;
  UniPoly g = uni_gcd(p, p.derivative());
  UniPoly sf = g.degree() > 0 ? uni_divide(p, g) : p;
  auto chain = sturm_chain(sf);
  Rational bound = cauchy_bound(sf);

  struct Span {
    Rational lo, hi;
    int count;
  };
  // Endpoints must not be roots of sf; the Cauchy bound never is.
  std::vector<Span> queue;
  int total = variations_at(chain, -bound) - variations_at(chain, bound);
  if (total > 0) queue.push_back({-bound, bound, total});

  Rational eps(1);
  eps /= Rational(Integer(1) << precision_bits);

  while (!queue.empty()) {
    Span s = queue.back();
    queue.pop_back();
    if (s.count == 1 && s.hi - s.lo <= eps) {
      roots.push_back((s.lo + s.hi) / 2);
      continue;
    }
    Rational mid = (s.lo + s.hi) / 2;
    // Nudge away from a root so Sturm counts stay valid on both halves.
    int tries = 0;
    while (sf.eval(mid) == 0 && tries < 8) {
      if (s.count == 1) break;
      mid += (s.hi - s.lo) / Rational(16 + tries);
      ++tries;
    }
    if (sf.eval(mid) == 0) {
      // Exact rational root found.
      roots.push_back(mid);
      Rational w = (s.hi - s.lo) / 1024;
      auto count_in = [&](const Rational& a, const Rational& b) {
        return variations_at(chain, a) - variations_at(chain, b);
      };
      int left = count_in(s.lo, mid - w);
      int right = count_in(mid + w, s.hi);
      if (left > 0) queue.push_back({s.lo, mid - w, left});
      if (right > 0) queue.push_back({mid + w, s.hi, right});
      continue;
    }
    int left = variations_at(chain, s.lo) - variations_at(chain, mid);
    int right = s.count - left;
    if (left > 0) queue.push_back({s.lo, mid, left});
    if (right > 0) queue.push_back({mid, s.hi, right});
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace geoprove
