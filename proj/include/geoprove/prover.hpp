#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geoprove/compile.hpp"
#include "geoprove/geo.hpp"

namespace geoprove {

enum class ImplicationMode { assumed, divides, sampled };
enum class RFactFlag { asserted, unchecked };

enum class EvidenceStatus {
  asserted,           // user vouches for the geometric implication
  exact_division,     // case polynomial divides the thesis polynomial
  division_failed,
  trivially_true,     // thesis polynomial is zero
  sampled_ok,         // numeric evidence below tolerance (never a certificate)
  sampled_failed,
  sampled_no_real_solutions,  // vacuous over the sample box
};

struct ImplicationEvidence {
  ImplicationMode mode = ImplicationMode::assumed;
  EvidenceStatus status = EvidenceStatus::asserted;
  std::string detail;
  std::optional<std::string> max_abs_value;  // decimal, sampled mode
  int samples = 0;
  int roots_found = 0;

  bool success() const {
    return status == EvidenceStatus::asserted || status == EvidenceStatus::exact_division ||
           status == EvidenceStatus::trivially_true || status == EvidenceStatus::sampled_ok;
  }
};

struct HypothesisCase {
  std::string name;
  PredicatePolynomial poly;  // poly.poly is squarefree and canonical
  ImplicationMode mode = ImplicationMode::assumed;
  RFactFlag r_factorizable = RFactFlag::unchecked;
  // Real-zero-density probe (heuristic): probe lines with >= 1 real point.
  int density_hits = -1;  // -1: probe not run
  int density_probes = 0;
  ImplicationEvidence evidence;
};

enum class Method { direct, autarky, substitution, refuted, inconclusive };
enum class Verdict { proved, not_proved, disproved_at_witness };

struct Witness {
  std::vector<std::pair<std::string, Rational>> point;  // declaration order
};

struct ProofReport {
  Method method = Method::inconclusive;
  Verdict verdict = Verdict::not_proved;
  Polynomial thesis_poly;  // canonical squarefree associated polynomial
  Polynomial thesis_raw;   // cleared numerator before squarefree reduction
  int degree_bound = 0;
  std::optional<Polynomial> mcs_poly;
  std::optional<int> mcs_degree;
  std::vector<HypothesisCase> cases;
  std::vector<Polynomial> nondegeneracy;
  std::vector<std::string> assumptions;
  std::optional<Witness> witness;
  std::optional<Polynomial> residual;     // substitution method remainder
  std::optional<std::string> diagnostic;  // precondition failure, if any
};

struct ProverConfig {
  std::uint64_t seed = 0;
  int samples = 12;        // sampled-mode parameter draws
  int density_probes = 16;  // R-factorizability probe lines
};

// Full expansion of the thesis. Proved iff the associated polynomial is
// zero; otherwise a small rational witness outside the degenerate locus
// refutes the statement.
ProofReport direct_prove(const GeoProgram& prog, const ProverConfig& config = {});

ImplicationEvidence check_implication(const PredicatePolynomial& case_poly,
                                      const PredicatePolynomial& thesis, ImplicationMode mode,
                                      const ProverConfig& config = {});

// The degree-count method: proved iff degree_bound(thesis) < deg mcs(cases)
// and every case carries implication evidence.
ProofReport autarky_prove(const GeoProgram& prog, ImplicationMode default_mode,
                          const std::map<std::string, ImplicationMode>& mode_overrides = {},
                          const ProverConfig& config = {});

// Homogeneity method: a homogeneous thesis that vanishes under an
// inhomogeneous explicit constraint (var := polynomial) is identically zero.
ProofReport substitution_prove(const GeoProgram& prog, const Polynomial& constraint,
                               const ProverConfig& config = {});

// "b := a^2" -> the polynomial b - a^2.
Polynomial parse_constraint(std::string_view text, const VarTablePtr& table);

// Solves C = 0 for some variable that occurs linearly with a constant
// coefficient; returns (variable index, right-hand side).
std::optional<std::pair<std::size_t, Polynomial>> solve_explicit_binding(
    const Polynomial& constraint);

// Deterministic small-rational witness search: grid first, then seeded
// random sampling; every returned point keeps all `avoid` polynomials
// nonzero and makes `target` nonzero.
std::optional<Witness> find_witness(const Polynomial& target,
                                    const std::vector<Polynomial>& avoid,
                                    std::uint64_t seed);

}  // namespace geoprove
