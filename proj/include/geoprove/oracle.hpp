#pragma once

#include <string>
#include <vector>

#include "geoprove/polynomial.hpp"

namespace geoprove {

// Variables bound to algebraically independent transcendental generators:
// the first variable gets e, the rest e^sqrt(2), e^sqrt(3), e^sqrt(5), ...
// (Lindemann-Weierstrass). No nonzero polynomial with rational coefficients
// vanishes at such a point, so a numeric zero test doubles as an identity
// test.
struct UniversalAssignment {
  VarTablePtr table;
  std::vector<std::string> generators;  // display names, declaration order
  unsigned precision_bits = 128;
};

// Deterministic assignment in declaration order. Throws MathError when the
// table exceeds max_vars (the CLI wires GEOPROVE_MAX_VARS through here).
UniversalAssignment assign_universal(const VarTablePtr& vars, unsigned precision_bits = 128,
                                     std::size_t max_vars = 8);

enum class OracleVerdict { likely_identity, not_identity };

struct OracleResult {
  OracleVerdict verdict = OracleVerdict::likely_identity;
  std::string value;   // evaluated value, decimal, 30 significant digits
  std::string margin;  // bound on the interval magnitude at the final precision
  unsigned precision_bits = 0;  // working precision of the final attempt
  bool caveat = false;  // retry cap hit with the interval still straddling zero
};

// Interval evaluation with outward rounding. An interval excluding zero is a
// rigorous nonzero certificate; "likely_identity" is heuristic by design
// (the precision needed to expose a tiny nonzero value is not known a
// priori), so positive verdicts stay flagged as such.
OracleResult identity_test(const Polynomial& p, const UniversalAssignment& assignment,
                           int max_doublings = 4);

}  // namespace geoprove
