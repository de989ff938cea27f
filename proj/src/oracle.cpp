#include "geoprove/oracle.hpp"

#include <mpfr.h>

#include <algorithm>
#include <array>

#include "geoprove/errors.hpp"

namespace geoprove {

namespace {

// Closed interval with outward rounding; move-only RAII over mpfr_t.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  Interval(Interval&& o) noexcept {
    mpfr_init2(lo_, mpfr_get_prec(o.lo_));
    mpfr_init2(hi_, mpfr_get_prec(o.hi_));
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  Interval(const Interval&) = delete;
  Interval& operator=(const Interval&) = delete;
  Interval& operator=(Interval&& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
  }
  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }

  static Interval from_rational(const Rational& q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
  }

  // e^sqrt(n); n = 0 encodes plain e.
  static Interval exp_sqrt(unsigned long n, mpfr_prec_t prec) {
    Interval r(prec);
    if (n == 0) {
      mpfr_set_ui(r.lo_, 1, MPFR_RNDD);
      mpfr_set_ui(r.hi_, 1, MPFR_RNDU);
    } else {
      mpfr_sqrt_ui(r.lo_, n, MPFR_RNDD);
      mpfr_sqrt_ui(r.hi_, n, MPFR_RNDU);
    }
    mpfr_exp(r.lo_, r.lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, r.hi_, MPFR_RNDU);
    return r;
  }

  void add(const Interval& o) {
    mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
  }

  Interval mul(const Interval& o) const {
    Interval r(prec());
    mpfr_t tmp;
    mpfr_init2(tmp, prec());
    bool first = true;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        const mpfr_t& x = a ? hi_ : lo_;
        const mpfr_t& y = b ? o.hi_ : o.lo_;
        mpfr_mul(tmp, x, y, MPFR_RNDD);
        if (first || mpfr_cmp(tmp, r.lo_) < 0) mpfr_set(r.lo_, tmp, MPFR_RNDD);
        mpfr_mul(tmp, x, y, MPFR_RNDU);
        if (first || mpfr_cmp(tmp, r.hi_) > 0) mpfr_set(r.hi_, tmp, MPFR_RNDU);
        first = false;
      }
    }
    mpfr_clear(tmp);
    return r;
  }

  // Positive-base power with directed rounding on the endpoints.
  Interval pow_ui_positive(unsigned long e, mpfr_prec_t prec) const {
    Interval r(prec);
    mpfr_pow_ui(r.lo_, lo_, e, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, hi_, e, MPFR_RNDU);
    return r;
  }

  bool excludes_zero() const { return mpfr_sgn(lo_) > 0 || mpfr_sgn(hi_) < 0; }

  // max(|lo|, |hi|), rounded up, as a fresh mpfr value.
  void magnitude(mpfr_t out) const {
    mpfr_t a, b;
    mpfr_init2(a, prec());
    mpfr_init2(b, prec());
    mpfr_abs(a, lo_, MPFR_RNDU);
    mpfr_abs(b, hi_, MPFR_RNDU);
    mpfr_max(out, a, b, MPFR_RNDU);
    mpfr_clear(a);
    mpfr_clear(b);
  }

  std::string midpoint_str() const {
    mpfr_t mid;
    mpfr_init2(mid, prec());
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
    std::string s = to_decimal(mid);
    mpfr_clear(mid);
    return s;
  }

  static std::string to_decimal(const mpfr_t v) {
    char buf[64];
    mpfr_snprintf(buf, sizeof buf, "%.29Re", v);  // 30 significant digits
    return buf;
  }

 private:
  mpfr_t lo_, hi_;
};

constexpr std::array<unsigned long, 8> kSqrtArgs = {0, 2, 3, 5, 7, 11, 13, 17};

std::string generator_name(std::size_t i) {
  if (i == 0) return "e";
  return "e^sqrt(" + std::to_string(kSqrtArgs[i]) + ")";
}

}  // namespace

UniversalAssignment assign_universal(const VarTablePtr& vars, unsigned precision_bits,
                                     std::size_t max_vars) {
  max_vars = std::min(max_vars, kSqrtArgs.size());
  if (vars->size() > max_vars)
    throw MathError("universal assignment supports at most " + std::to_string(max_vars) +
                    " variables, got " + std::to_string(vars->size()));
  if (precision_bits < 64) throw MathError("universal assignment precision must be >= 64 bits");
  UniversalAssignment a{vars, {}, precision_bits};
  for (std::size_t i = 0; i < vars->size(); ++i) a.generators.push_back(generator_name(i));
  return a;
}

OracleResult identity_test(const Polynomial& p, const UniversalAssignment& assignment,
                           int max_doublings) {
  if (!p.table()->same_as(*assignment.table)) throw MathError("variable-table mismatch");
  if (p.is_zero())
    return {OracleVerdict::likely_identity, "0", "0", assignment.precision_bits, false};

  OracleResult last{};
  mpfr_prec_t prec = assignment.precision_bits;
  for (int attempt = 0; attempt <= max_doublings; ++attempt, prec *= 2) {
    std::vector<Interval> gens;
    gens.reserve(p.table()->size());
    for (std::size_t i = 0; i < p.table()->size(); ++i)
      gens.push_back(Interval::exp_sqrt(kSqrtArgs[i], prec));

    Interval acc(prec);
    for (const auto& [m, c] : p.terms()) {
      Interval term = Interval::from_rational(c, prec);
      for (std::size_t v = 0; v < p.table()->size(); ++v) {
        unsigned e = m.exponent(v);
        if (e == 0) continue;
        term = term.mul(gens[v].pow_ui_positive(e, prec));
      }
      acc.add(term);
    }

    // scale(p) = sum |coeff| * (max generator)^total_degree, rounded up.
    mpfr_t scale, coeff_mass, gen_pow, tol, mag;
    mpfr_inits2(prec, scale, coeff_mass, gen_pow, tol, mag, (mpfr_ptr) nullptr);
    mpfr_set_zero(coeff_mass, 1);
    for (const auto& [m, c] : p.terms()) {
      mpfr_t a;
      mpfr_init2(a, prec);
      mpfr_set_q(a, Rational(rat_abs(c)).get_mpq_t(), MPFR_RNDU);
      mpfr_add(coeff_mass, coeff_mass, a, MPFR_RNDU);
      mpfr_clear(a);
    }
    // The largest generator is the last one assigned.
    Interval maxgen = Interval::exp_sqrt(kSqrtArgs[p.table()->size() - 1], prec);
    Interval gp = maxgen.pow_ui_positive(static_cast<unsigned long>(p.total_degree()), prec);
    gp.magnitude(gen_pow);
    mpfr_mul(scale, coeff_mass, gen_pow, MPFR_RNDU);

    // tol = 2^(-prec/2) * scale
    mpfr_set(tol, scale, MPFR_RNDU);
    mpfr_mul_2si(tol, tol, -static_cast<long>(prec / 2), MPFR_RNDU);
    acc.magnitude(mag);

    last.value = acc.midpoint_str();
    last.margin = Interval::to_decimal(mag);
    last.precision_bits = static_cast<unsigned>(prec);

    const bool nonzero = acc.excludes_zero();
    const bool tiny = mpfr_cmp(mag, tol) < 0;
    mpfr_clears(scale, coeff_mass, gen_pow, tol, mag, (mpfr_ptr) nullptr);

    if (nonzero) {
      last.verdict = OracleVerdict::not_identity;
      return last;
    }
    if (tiny) {
      last.verdict = OracleVerdict::likely_identity;
      return last;
    }
  }
  // Retry cap reached with the interval still straddling zero.
  last.verdict = OracleVerdict::likely_identity;
  last.caveat = true;
  return last;
}

}  // namespace geoprove
