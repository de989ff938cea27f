#include "geoprove/prover.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "geoprove/errors.hpp"
#include "geoprove/expr_parse.hpp"
#include "geoprove/univariate.hpp"

namespace geoprove {

namespace {

// Small rationals ordered by height; the grid search walks tuples of these
// with the last variable varying fastest, so found witnesses are stable.
std::vector<Rational> witness_pool() {
  std::vector<Rational> pool;
  for (long sign : {1L, -1L}) {
    for (long h = 1; h <= 10; ++h) {
      for (long den = 1; den <= h; ++den) {
        for (long num = 1; num <= h; ++num) {
          if (std::max(num, den) != h) continue;
          if (gcd(Integer(num), Integer(den)) != 1) continue;
          pool.push_back(rat(sign * num, den));
        }
      }
    }
  }
  return pool;
}

bool admissible(const std::vector<Rational>& point, const Polynomial& target,
                const std::vector<Polynomial>& avoid) {
  if (evaluate(target, point) == 0) return false;
  for (const auto& nd : avoid)
    if (evaluate(nd, point) == 0) return false;
  return true;
}

Witness to_witness(const VarTablePtr& table, const std::vector<Rational>& point) {
  Witness w;
  for (std::size_t i = 0; i < table->size(); ++i)
    w.point.emplace_back(table->name(i), point[i]);
  return w;
}

// Shared per-report bookkeeping for the nondegeneracy ledger text.
std::vector<std::string> base_assumptions(const CompiledScene& scene) {
  std::vector<std::string> out;
  if (!scene.nondegeneracy.empty())
    out.push_back("verdict holds outside the recorded degenerate locus (nondegeneracy list)");
  return out;
}

}  // namespace

std::optional<Witness> find_witness(const Polynomial& target,
                                    const std::vector<Polynomial>& avoid,
                                    std::uint64_t seed) {
  const auto& table = target.table();
  const std::size_t n = table->size();
  static const std::vector<Rational> pool = witness_pool();

  // Growing-prefix odometer over the pool, last variable fastest.
  const std::size_t max_prefix = std::min<std::size_t>(pool.size(), n > 3 ? 6 : 12);
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t prefix = 1; prefix <= max_prefix; ++prefix) {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      bool uses_new = false;
      for (std::size_t i : idx) uses_new |= (i == prefix - 1);
      if (uses_new) {
        std::vector<Rational> point;
        point.reserve(n);
        for (std::size_t i : idx) point.push_back(pool[i]);
        if (admissible(point, target, avoid)) return to_witness(table, point);
      }
      // odometer step
      std::size_t pos = n;
      while (pos > 0) {
        --pos;
        if (++idx[pos] < prefix) break;
        idx[pos] = 0;
        if (pos == 0) goto next_prefix;
      }
    }
  next_prefix:;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-99, 99);
  std::uniform_int_distribution<long> den(1, 16);
  for (int iter = 0; iter < 20000; ++iter) {
    std::vector<Rational> point;
    point.reserve(n);
    for (std::size_t i = 0; i < n; ++i) point.push_back(rat(num(rng), den(rng)));
    if (admissible(point, target, avoid)) return to_witness(table, point);
  }
  return std::nullopt;
}

ProofReport direct_prove(const GeoProgram& prog, const ProverConfig& config) {
  CompiledScene scene = compile_scene(prog);
  PredicatePolynomial pp = compile_predicate(prog.thesis, scene);

  ProofReport report{.method = Method::direct,
                     .verdict = Verdict::proved,
                     .thesis_poly = pp.poly,
                     .thesis_raw = pp.raw,
                     .degree_bound = pp.raw_degree_bound,
                     .nondegeneracy = pp.nondegeneracy,
                     .assumptions = base_assumptions(scene)};
  if (pp.poly.is_zero()) return report;

  if (auto w = find_witness(pp.poly, pp.nondegeneracy, config.seed)) {
    report.method = Method::refuted;
    report.verdict = Verdict::disproved_at_witness;
    report.witness = std::move(w);
  } else {
    report.method = Method::inconclusive;
    report.verdict = Verdict::not_proved;
    report.diagnostic = "thesis polynomial is nonzero but no admissible rational witness "
                        "was found in the search budget";
  }
  return report;
}

ImplicationEvidence check_implication(const PredicatePolynomial& case_poly,
                                      const PredicatePolynomial& thesis, ImplicationMode mode,
                                      const ProverConfig& config) {
  ImplicationEvidence ev;
  ev.mode = mode;
  switch (mode) {
    case ImplicationMode::assumed:
      ev.status = EvidenceStatus::asserted;
      ev.detail = "implication assumed (geometric argument supplied by the user)";
      return ev;

    case ImplicationMode::divides: {
      if (thesis.poly.is_zero()) {
        ev.status = EvidenceStatus::trivially_true;
        ev.detail = "thesis polynomial is 0; the implication is vacuous";
        return ev;
      }
      if (auto q = try_exact_divide(thesis.poly, case_poly.poly)) {
        ev.status = EvidenceStatus::exact_division;
        ev.detail = "case polynomial divides the thesis polynomial; quotient " + q->str();
      } else {
        ev.status = EvidenceStatus::division_failed;
        ev.detail = "case polynomial does not divide the thesis polynomial";
      }
      return ev;
    }

    case ImplicationMode::sampled: {
      // Solve the case polynomial for one variable over random assignments of
      // the others, then evaluate the thesis at the real roots.
      const auto& table = case_poly.poly.table();
      std::size_t var = table->size();
      int best_deg = 0;
      for (std::size_t v = 0; v < table->size(); ++v) {
        int d = case_poly.poly.degree_in(v);
        if (d > 0 && (var == table->size() || d < best_deg)) {
          var = v;
          best_deg = d;
        }
      }
      if (var == table->size()) {
        ev.status = EvidenceStatus::sampled_failed;
        ev.detail = "case polynomial is constant; nothing to solve";
        return ev;
      }
      std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ull);
      std::uniform_int_distribution<long> num(-5, 5);
      std::uniform_int_distribution<long> den(1, 4);
      Rational max_abs(0);
      int roots_total = 0, attempted = 0, hits = 0;
      for (int s = 0; s < config.samples; ++s) {
        std::vector<Rational> values;
        for (std::size_t v = 0; v < table->size(); ++v) values.push_back(rat(num(rng), den(rng)));
        UniPoly u = specialize(case_poly.poly, var, values);
        if (u.is_zero() || u.degree() == 0) continue;
        ++attempted;
        auto roots = real_roots(u);
        if (!roots.empty()) ++hits;
        for (const Rational& root : roots) {
          ++roots_total;
          values[var] = root;
          Rational v = thesis.poly.is_zero() ? Rational(0)
                                             : rat_abs(evaluate(thesis.poly, values));
          if (v > max_abs) max_abs = v;
        }
      }
      ev.samples = config.samples;
      ev.roots_found = roots_total;
      // Require real solutions across a reasonable share of the samples;
      // isolated real points (a^2 + b^2 at the origin) must not count as
      // usable evidence.
      if (roots_total == 0 || hits * 4 < attempted) {
        ev.status = EvidenceStatus::sampled_no_real_solutions;
        ev.detail = "real solutions of the case polynomial found in only " +
                    std::to_string(hits) + " of " + std::to_string(attempted) +
                    " samples; the implication is vacuous over the sample box "
                    "(R-factorizability suspect)";
        return ev;
      }
      // Roots carry ~2^-80 approximation error; tolerance far above it.
      Rational tol = rat(1, 1) / Rational(Integer(1) << 40);
      std::ostringstream val;
      val << max_abs.get_d();
      ev.max_abs_value = val.str();
      if (max_abs < tol) {
        ev.status = EvidenceStatus::sampled_ok;
        ev.detail = "thesis vanishes at all sampled real solutions (max |value| " +
                    *ev.max_abs_value + "); probabilistic evidence only, never a certificate";
      } else {
        ev.status = EvidenceStatus::sampled_failed;
        ev.detail = "thesis does not vanish at some sampled real solution (max |value| " +
                    *ev.max_abs_value + ")";
      }
      return ev;
    }
  }
  throw MathError("unhandled implication mode");
}

namespace {

// Probe R-factorizability: restrict the case polynomial to random rational
// lines and count how many lines meet its real zero set. A polynomial with
// infinitely many real zeros is hit by a positive fraction of lines;
// a^2 + b^2 style polynomials are almost never hit.
std::pair<int, int> density_probe(const Polynomial& p, const ProverConfig& config) {
  std::mt19937_64 rng(config.seed ^ 0xc2b2ae3d27d4eb4full);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 3);
  const std::size_t n = p.table()->size();
  int hits = 0, probes = 0;
  for (int i = 0; i < config.density_probes; ++i) {
    std::vector<Rational> base, dir;
    bool nonzero_dir = false;
    for (std::size_t v = 0; v < n; ++v) {
      base.push_back(rat(num(rng), den(rng)));
      dir.push_back(rat(num(rng), den(rng)));
      if (dir.back() != 0) nonzero_dir = true;
    }
    if (!nonzero_dir) continue;
    UniPoly u = restrict_to_line(p, base, dir);
    if (u.is_zero()) continue;
    ++probes;
    if (u.degree() >= 1 && count_real_roots(u) > 0) ++hits;
  }
  return {hits, probes};
}

}  // namespace

ProofReport autarky_prove(const GeoProgram& prog, ImplicationMode default_mode,
                          const std::map<std::string, ImplicationMode>& mode_overrides,
                          const ProverConfig& config) {
  if (prog.cases.empty())
    throw CompileError("the autarky method needs at least one special-case hypothesis");
  CompiledScene scene = compile_scene(prog);
  PredicatePolynomial thesis = compile_predicate(prog.thesis, scene);

  ProofReport report{.method = Method::autarky,
                     .verdict = Verdict::not_proved,
                     .thesis_poly = thesis.poly,
                     .thesis_raw = thesis.raw,
                     .degree_bound = thesis.raw_degree_bound,
                     .nondegeneracy = thesis.nondegeneracy,
                     .assumptions = base_assumptions(scene)};

  std::vector<Polynomial> case_polys;
  for (const auto& named : prog.cases) {
    PredicatePolynomial cp = compile_predicate(named.pred, scene);
    if (cp.poly.is_zero())
      throw CompileError("case '" + named.name + "' compiles to the zero polynomial; an "
                         "identity cannot serve as a special-case hypothesis");
    if (squarefree_part(cp.poly) != cp.poly)
      throw MathError("internal: case polynomial is not squarefree");

    auto it = mode_overrides.find(named.name);
    ImplicationMode mode = it == mode_overrides.end() ? default_mode : it->second;
    HypothesisCase hc{named.name,
                      cp,
                      mode,
                      mode == ImplicationMode::assumed ? RFactFlag::asserted
                                                       : RFactFlag::unchecked,
                      -1,
                      0,
                      check_implication(cp, thesis, mode, config)};
    auto [hits, probes] = density_probe(cp.poly, config);
    hc.density_hits = hits;
    hc.density_probes = probes;
    case_polys.push_back(cp.poly);
    report.cases.push_back(std::move(hc));
  }

  Polynomial m = mcs(case_polys);
  report.mcs_poly = m;
  report.mcs_degree = m.total_degree();

  for (const auto& hc : report.cases) {
    std::string flag = hc.r_factorizable == RFactFlag::asserted ? "asserted" : "unchecked";
    std::string line = "case '" + hc.name + "': R-factorizability " + flag +
                       " (real zero set must be infinite and all complex factors real)";
    if (hc.density_hits >= 0) {
      line += "; real-line probe hit " + std::to_string(hc.density_hits) + "/" +
              std::to_string(hc.density_probes);
      if (hc.density_hits == 0)
        line += " - real zero set appears degenerate, the method's hypothesis is likely violated";
    }
    report.assumptions.push_back(line);
    if (hc.mode == ImplicationMode::assumed)
      report.assumptions.push_back("case '" + hc.name + "': implication evidence is a user "
                                   "assertion, not machine-checked");
    if (hc.mode == ImplicationMode::sampled && hc.evidence.status == EvidenceStatus::sampled_ok)
      report.assumptions.push_back("case '" + hc.name + "': implication evidence is numeric "
                                   "sampling, not a certificate");
  }

  bool all_evidence = true;
  for (const auto& hc : report.cases) all_evidence &= hc.evidence.success();
  const bool degree_gap = report.degree_bound < *report.mcs_degree;
  // A case whose real zero set no probe line ever meets (a^2 + b^2 style)
  // flatly violates the R-factorizability hypothesis: refuse to conclude.
  std::string degenerate_case;
  for (const auto& hc : report.cases)
    if (hc.density_probes > 0 && hc.density_hits == 0) degenerate_case = hc.name;

  if (degree_gap && all_evidence && degenerate_case.empty()) {
    report.verdict = Verdict::proved;
  } else {
    report.method = Method::inconclusive;
    std::string why;
    if (!degree_gap)
      why = "degree bound d = " + std::to_string(report.degree_bound) +
            " is not below the m.c.s. degree D = " + std::to_string(*report.mcs_degree);
    if (!all_evidence) {
      if (!why.empty()) why += "; ";
      why += "implication evidence missing or failed for at least one case";
    }
    if (!degenerate_case.empty()) {
      if (!why.empty()) why += "; ";
      why += "case '" + degenerate_case + "' fails the R-factorizability probe (no real "
             "solutions on any probe line), so the degree-count argument does not apply";
    }
    report.diagnostic = why;
  }
  return report;
}

Polynomial parse_constraint(std::string_view text, const VarTablePtr& table) {
  auto pos = text.find(":=");
  if (pos == std::string_view::npos)
    throw MathError("constraint must have the form \"var := polynomial\"");
  std::string lhs(text.substr(0, pos));
  lhs.erase(std::remove_if(lhs.begin(), lhs.end(), [](unsigned char c) { return std::isspace(c); }),
            lhs.end());
  auto idx = table->index_of(lhs);
  if (!idx) throw MathError("constraint binds unknown variable '" + lhs + "'");
  Polynomial rhs = parse_polynomial(text.substr(pos + 2), table);
  return Polynomial::variable(table, *idx) - rhs;
}

std::optional<std::pair<std::size_t, Polynomial>> solve_explicit_binding(
    const Polynomial& constraint) {
  const auto& table = constraint.table();
  for (std::size_t v = 0; v < table->size(); ++v) {
    if (constraint.degree_in(v) != 1) continue;
    Polynomial coeff(table);   // coefficient of v
    Polynomial rest(table);    // terms free of v
    for (const auto& [m, c] : constraint.terms()) {
      if (m.exponent(v) == 1)
        coeff.add_term(m.without(v), c);
      else
        rest.add_term(m, c);
    }
    if (!coeff.is_constant()) continue;
    // v = -rest / coeff
    Polynomial rhs = rest * (Rational(-1) / coeff.constant_value());
    return std::make_pair(v, rhs);
  }
  return std::nullopt;
}

ProofReport substitution_prove(const GeoProgram& prog, const Polynomial& constraint,
                               const ProverConfig&) {
  CompiledScene scene = compile_scene(prog);
  PredicatePolynomial pp = compile_predicate(prog.thesis, scene);

  ProofReport report{.method = Method::substitution,
                     .verdict = Verdict::not_proved,
                     .thesis_poly = pp.poly,
                     .thesis_raw = pp.raw,
                     .degree_bound = pp.raw_degree_bound,
                     .nondegeneracy = pp.nondegeneracy,
                     .assumptions = base_assumptions(scene)};

  Homogeneity ht = homogeneity(pp.poly);
  if (!ht.homogeneous) {
    report.method = Method::inconclusive;
    report.diagnostic = "substitution method inapplicable: the thesis polynomial " +
                        pp.poly.str() + " is not homogeneous";
    return report;
  }
  if (constraint.is_zero())
    throw MathError("substitution constraint must be a nonzero polynomial");
  Polynomial c = canonicalize(squarefree_part(constraint));
  Homogeneity hc = homogeneity(c);
  if (hc.homogeneous) {
    report.method = Method::inconclusive;
    report.diagnostic = "substitution method inapplicable: the constraint " + c.str() +
                        " is homogeneous, so it cannot force a homogeneous thesis to vanish";
    return report;
  }
  auto binding = solve_explicit_binding(c);
  if (!binding) {
    report.method = Method::inconclusive;
    report.diagnostic = "constraint " + c.str() + " is not solvable as an explicit binding "
                        "variable := polynomial";
    return report;
  }
  auto [var, rhs] = *binding;
  Polynomial residual = substitute_poly(pp.poly, var, rhs);
  report.residual = residual;
  report.assumptions.push_back("constraint " + c.str() +
                               " is squarefree (checked) and assumed R-factorizable");
  if (residual.is_zero()) {
    report.verdict = Verdict::proved;
    report.assumptions.push_back(
        "soundness: every divisor of a homogeneous polynomial is homogeneous, so an "
        "inhomogeneous constraint can only divide the zero polynomial");
  } else {
    report.diagnostic = "thesis restricted to " + prog.variables->name(var) + " := " +
                        rhs.str() + " leaves the nonzero residual " + residual.str();
  }
  return report;
}

}  // namespace geoprove
