#pragma once

#include <map>
#include <string>
#include <vector>

#include "geoprove/geo.hpp"
#include "geoprove/polynomial.hpp"
#include "geoprove/rational_function.hpp"

namespace geoprove {

struct ScenePoint {
  RationalFunction x, y;
};

// Anchor + direction; a slope representation would lose vertical lines.
struct SceneLine {
  ScenePoint anchor;
  ScenePoint dir;
};

// Exact coordinates for every constructed object plus the nondegeneracy
// ledger: every divisor introduced by a construction and every reduced
// coordinate denominator, as canonical squarefree polynomials. Verdicts
// downstream hold outside the union of their zero sets.
struct CompiledScene {
  VarTablePtr table;
  std::vector<std::pair<std::string, ScenePoint>> points;  // declaration order
  std::vector<std::pair<std::string, SceneLine>> lines;
  std::vector<Polynomial> nondegeneracy;  // deduplicated, sorted by text

  const ScenePoint& point(const std::string& name) const;
  const SceneLine& line(const std::string& name) const;
};

// An associated polynomial: canonical squarefree normal form of the cleared
// predicate numerator, the raw (pre-squarefree) numerator it came from, the
// inherited nondegeneracy set, and the DAG degree bound.
struct PredicatePolynomial {
  Polynomial poly;  // canonical squarefree, or zero
  Polynomial raw;   // cleared numerator before squarefree reduction
  std::vector<Polynomial> nondegeneracy;
  int raw_degree_bound = 0;
};

// Throws CompileError when a construction is degenerate for every parameter
// value (e.g. the circumcenter of three identical points).
CompiledScene compile_scene(const GeoProgram& prog);

PredicatePolynomial compile_predicate(const PredicateAst& pred, const CompiledScene& scene);

// Upper bound for the total degree of the cleared predicate numerator,
// computed on the expression DAG with each coordinate entering as its
// reduced numerator/denominator degree pair; products are never expanded.
int degree_bound(const PredicateAst& pred, const CompiledScene& scene);

}  // namespace geoprove
