#include "geoprove/polynomial.hpp"

#include <sstream>

#include "geoprove/errors.hpp"
#include "geoprove/rational_function.hpp"

namespace geoprove {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::unit(std::size_t nvars, std::size_t var, unsigned exp) {
  Monomial m(nvars);
  m.exps_.at(var) = exp;
  m.degree_ = static_cast<int>(exp);
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
  r.degree_ = degree_ + o.degree_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::divided_into(const Monomial& o) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = o.exps_[i] - exps_[i];
  r.degree_ = o.degree_ - degree_;
  return r;
}

Monomial Monomial::without(std::size_t var) const {
  Monomial r(*this);
  r.degree_ -= static_cast<int>(r.exps_[var]);
  r.exps_[var] = 0;
  return r;
}

std::strong_ordering Monomial::graded_lex(const Monomial& o) const {
  if (degree_ != o.degree_) return degree_ <=> o.degree_;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != o.exps_[i]) return exps_[i] <=> o.exps_[i];
  return std::strong_ordering::equal;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(VarTablePtr table) : table_(std::move(table)) {
  if (!table_) throw MathError("polynomial requires a variable table");
}

Polynomial Polynomial::constant(VarTablePtr table, const Rational& value) {
  Polynomial p(std::move(table));
  if (value != 0) p.terms_.emplace(Monomial(p.table_->size()), value);
  return p;
}

Polynomial Polynomial::variable(VarTablePtr table, std::size_t var) {
  Polynomial p(std::move(table));
  if (var >= p.table_->size()) throw MathError("variable index out of range");
  p.terms_.emplace(Monomial::unit(p.table_->size(), var), Rational(1));
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_constant() &&
         terms_.begin()->second == 1;
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw MathError("constant_value of a non-constant polynomial");
  return terms_.begin()->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return kNegInfinity;
  return terms_.begin()->first.degree();  // leading term has the max degree
}

int Polynomial::degree_in(std::size_t var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.exponent(var)));
  return d;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw MathError("leading coefficient of the zero polynomial");
  return terms_.begin()->second;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw MathError("leading monomial of the zero polynomial");
  return terms_.begin()->first;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (!table_->same_as(*o.table_)) throw MathError("variable-table mismatch");
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(table_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(table_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(table_);
  if (c == 0) return r;
  for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial acc = Polynomial::constant(table_, Rational(1));
  Polynomial base(*this);
  while (k > 0) {
    if (k & 1u) acc = acc * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return acc;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(table_);
  for (const auto& [m, c] : terms_) {
    unsigned e = m.exponent(var);
    if (e == 0) continue;
    Monomial dm = m.without(var);
    if (e > 1) dm = dm * Monomial::unit(table_->size(), var, e - 1);
    r.add_term(dm, c * Rational(static_cast<long>(e)));
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return table_->same_as(*o.table_) && terms_ == o.terms_;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    Rational mag = rat_abs(c);
    if (m.is_constant()) {
      out << mag.get_str();
    } else {
      bool printed = false;
      if (mag != 1) {
        out << mag.get_str();
        printed = true;
      }
      for (std::size_t i = 0; i < m.size(); ++i) {
        unsigned e = m.exponent(i);
        if (e == 0) continue;
        if (printed) out << "*";
        out << table_->name(i);
        if (e > 1) out << "^" << e;
        printed = true;
      }
    }
  }
  return out.str();
}

// ---------------------------------------------------------- normal forms

Polynomial canonicalize(const Polynomial& p) {
  if (p.is_zero()) throw MathError("canonicalize of the zero polynomial");
  Integer den_lcm(1);
  for (const auto& [m, c] : p.terms()) den_lcm = lcm(den_lcm, c.get_den());
  Integer num_gcd(0);
  for (const auto& [m, c] : p.terms()) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    num_gcd = gcd(num_gcd, scaled);
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (p.leading_coefficient() < 0) factor = -factor;
  return p * factor;
}

std::optional<Polynomial> try_exact_divide(const Polynomial& p, const Polynomial& q) {
  if (!p.table()->same_as(*q.table())) throw MathError("variable-table mismatch");
  if (q.is_zero()) throw MathError("exact division by the zero polynomial");
  Polynomial quotient(p.table());
  Polynomial rest(p);
  const Monomial& lq = q.leading_monomial();
  const Rational& cq = q.leading_coefficient();
  while (!rest.is_zero()) {
    const Monomial& lr = rest.leading_monomial();
    if (!lq.divides(lr)) return std::nullopt;
    Monomial mq = lq.divided_into(lr);
    Rational coeff = rest.leading_coefficient() / cq;
    Polynomial t(p.table());
    t.add_term(mq, coeff);
    quotient += t;
    rest -= t * q;
  }
  return quotient;
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& q) {
  auto r = try_exact_divide(p, q);
  if (!r) throw MathError("polynomial division is not exact");
  return *r;
}

Homogeneity homogeneity(const Polynomial& p) {
  if (p.is_zero()) return {true, true, 0};
  int d = p.terms().begin()->first.degree();
  for (const auto& [m, c] : p.terms())
    if (m.degree() != d) return {false, false, 0};
  return {true, false, d};
}

std::vector<std::pair<int, Polynomial>> homogeneous_components(const Polynomial& p) {
  if (p.is_zero()) throw MathError("homogeneous components of the zero polynomial");
  std::map<int, Polynomial, std::greater<>> parts;
  for (const auto& [m, c] : p.terms()) {
    auto it = parts.find(m.degree());
    if (it == parts.end()) it = parts.emplace(m.degree(), Polynomial(p.table())).first;
    it->second.add_term(m, c);
  }
  std::vector<std::pair<int, Polynomial>> out;
  out.reserve(parts.size());
  for (auto& [d, part] : parts) out.emplace_back(d, std::move(part));
  return out;
}

RationalFunction substitute(const Polynomial& p,
                            const std::map<std::string, RationalFunction>& bindings) {
  const auto& table = p.table();
  std::vector<std::optional<RationalFunction>> slot(table->size());
  for (const auto& [name, value] : bindings) {
    auto idx = table->index_of(name);
    if (!idx) throw MathError("binding for unknown variable '" + name + "'");
    if (!value.table()->same_as(*table)) throw MathError("variable-table mismatch");
    slot[*idx] = value;
  }
  RationalFunction acc = RationalFunction::zero(table);
  for (const auto& [m, c] : p.terms()) {
    RationalFunction term = RationalFunction::constant(table, c);
    for (std::size_t i = 0; i < table->size(); ++i) {
      unsigned e = m.exponent(i);
      if (e == 0) continue;
      const RationalFunction base =
          slot[i] ? *slot[i] : RationalFunction::variable(table, i);
      term = term * base.pow(e);
    }
    acc = acc + term;
  }
  return acc;
}

Polynomial substitute_poly(const Polynomial& p, std::size_t var, const Polynomial& rhs) {
  if (!p.table()->same_as(*rhs.table())) throw MathError("variable-table mismatch");
  Polynomial acc(p.table());
  for (const auto& [m, c] : p.terms()) {
    Polynomial term(p.table());
    term.add_term(m.without(var), c);
    unsigned e = m.exponent(var);
    if (e > 0) term = term * rhs.pow(e);
    acc += term;
  }
  return acc;
}

Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) {
  if (point.size() != p.table()->size())
    throw MathError("evaluation point arity mismatch");
  Rational acc(0);
  for (const auto& [m, c] : p.terms()) {
    Rational t(c);
    for (std::size_t i = 0; i < point.size(); ++i) {
      unsigned e = m.exponent(i);
      for (unsigned k = 0; k < e; ++k) t *= point[i];
    }
    acc += t;
  }
  return acc;
}

}  // namespace geoprove
