#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geoprove/rational_function.hpp"

namespace geoprove {

enum class StepKind {
  free_point,
  midpoint,
  centroid,
  circumcenter,
  orthocenter,
  intersect,
  foot,
  reflection,
  line_through,
  perpendicular_through,
  parallel_through,
};

enum class ObjSort { point, line };

struct ConstructionStep {
  std::string name;
  StepKind kind = StepKind::free_point;
  std::vector<std::string> args;  // previously defined objects
  // free_point only: coordinate expressions, already evaluated exactly
  std::optional<std::pair<RationalFunction, RationalFunction>> coords;
  int line = 0;
  int col = 0;

  ObjSort sort() const {
    switch (kind) {
      case StepKind::line_through:
      case StepKind::perpendicular_through:
      case StepKind::parallel_through:
        return ObjSort::line;
      default:
        return ObjSort::point;
    }
  }
};

enum class PredKind { collinear, perpendicular, parallel, equal_length, point_on_line, concyclic };

struct PredicateAst {
  PredKind kind = PredKind::collinear;
  std::vector<std::string> args;
  int line = 0;
  int col = 0;
};

struct NamedCase {
  std::string name;
  PredicateAst pred;
};

// A parsed .geo program: declared variables, construction steps, exactly one
// thesis, and named special-case hypotheses.
struct GeoProgram {
  VarTablePtr variables;
  std::vector<ConstructionStep> steps;
  PredicateAst thesis;
  std::vector<NamedCase> cases;
};

const char* pred_kind_name(PredKind kind);
const char* step_kind_name(StepKind kind);

// Parses the line-oriented DSL; throws ParseError with a source position on
// syntax errors, undefined/duplicate identifiers and sort mismatches.
GeoProgram parse_geo(std::string_view source);
GeoProgram load_geo(const std::string& path);

}  // namespace geoprove
