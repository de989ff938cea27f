#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "geoprove/compile.hpp"
#include "geoprove/errors.hpp"
#include "geoprove/geo.hpp"
#include "test_util.hpp"

using namespace geoprove;
using namespace geoprove::testutil;

namespace {

std::string corpus(const std::string& name) {
  return std::string(GEOPROVE_CORPUS_DIR) + "/" + name;
}

GeoProgram load(const std::string& name) { return load_geo(corpus(name)); }

Polynomial thesis_poly(const GeoProgram& prog) {
  CompiledScene scene = compile_scene(prog);
  return compile_predicate(prog.thesis, scene).poly;
}

const char* kTriangle =
    "vars a b c;\n"
    "point A = (0, 0);\n"
    "point B = (b, a);\n"
    "point C = (c, 0);\n";

}  // namespace

TEST_CASE("parse euler.geo") {
  GeoProgram prog = load("euler.geo");
  CHECK(prog.variables->names() == std::vector<std::string>{"a", "b", "c"});
  int points = 0;
  for (const auto& s : prog.steps)
    if (s.sort() == ObjSort::point) ++points;
  CHECK(points >= 6);
  CHECK(prog.thesis.kind == PredKind::collinear);
  CHECK(prog.thesis.args == std::vector<std::string>{"G", "H", "O"});
  REQUIRE(prog.cases.size() == 3);
  CHECK(prog.cases[0].name == "iso_ab");
}

TEST_CASE("degenerate predicate is allowed") {
  GeoProgram prog = parse_geo("vars a; point A = (a, 0); thesis collinear(A, A, A);");
  CHECK(thesis_poly(prog).is_zero());
}

TEST_CASE("parser diagnostics") {
  // undefined identifier, with position
  try {
    parse_geo("vars a;\npoint B = midpoint(A, C);\nthesis collinear(B, B, B);");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.message().find("undefined identifier 'A'") != std::string::npos);
  }
  // duplicate definition
  CHECK_THROWS_AS(parse_geo("vars a; point A = (a, 0); point A = (0, a); "
                            "thesis collinear(A, A, A);"),
                  ParseError);
  // sort mismatch: point where line expected
  CHECK_THROWS_AS(parse_geo("vars a; point A = (a, 0); point B = (0, a); "
                            "point F = foot(A, B); thesis collinear(A, A, A);"),
                  ParseError);
  // missing thesis
  CHECK_THROWS_AS(parse_geo("vars a; point A = (a, 0);"), ParseError);
  // syntax error
  CHECK_THROWS_AS(parse_geo("vars a; point A = (a 0); thesis collinear(A, A, A);"),
                  ParseError);
}

TEST_CASE("generic triangle centers match the worked coordinates") {
  GeoProgram prog = parse_geo(std::string(kTriangle) +
                              "point G = centroid(A, B, C);\n"
                              "point H = orthocenter(A, B, C);\n"
                              "point O = circumcenter(A, B, C);\n"
                              "thesis collinear(G, H, O);");
  CompiledScene scene = compile_scene(prog);
  auto t = prog.variables;

  const ScenePoint& G = scene.point("G");
  CHECK(G.x == parse_rational_function("(b + c) / 3", t));
  CHECK(G.y == parse_rational_function("a / 3", t));

  const ScenePoint& H = scene.point("H");
  CHECK(H.x == parse_rational_function("b", t));
  CHECK(H.y == parse_rational_function("b * (c - b) / a", t));

  const ScenePoint& O = scene.point("O");
  CHECK(O.x == parse_rational_function("c / 2", t));
  CHECK(O.y == parse_rational_function("(b^2 - c*b + a^2) / (2*a)", t));

  // the division by a is on the ledger
  bool has_a = false;
  for (const auto& nd : scene.nondegeneracy)
    if (nd == P(t, "a")) has_a = true;
  CHECK(has_a);
  for (const auto& nd : scene.nondegeneracy) {
    CHECK(!nd.is_zero());
    CHECK(is_squarefree(nd));
    CHECK(nd == canonicalize(nd));
  }
  // every coordinate denominator divides the product of the ledger
  Polynomial prod = Polynomial::constant(t, rat(1));
  for (const auto& nd : scene.nondegeneracy) prod = prod * nd;
  for (const auto& [name, pt] : scene.points) {
    for (const Polynomial* d : {&pt.x.den(), &pt.y.den()}) {
      if (d->is_constant()) continue;
      CHECK(try_exact_divide(prod, squarefree_part(*d)).has_value());
    }
  }
}

TEST_CASE("collinearity with the origin on two free points") {
  GeoProgram prog = load("collinear_counter.geo");
  CompiledScene scene = compile_scene(prog);
  PredicatePolynomial pp = compile_predicate(prog.thesis, scene);
  auto t = prog.variables;
  CHECK(pp.poly == P(t, "a*d - b*c"));
  CHECK(pp.poly.total_degree() == 2);
  CHECK(is_squarefree(pp.poly));
  CHECK(degree_bound(prog.thesis, scene) == 2);
  // oracle for the bound: full expansion
  CHECK(pp.raw.total_degree() <= degree_bound(prog.thesis, scene));
}

TEST_CASE("right-angle predicates on the generic triangle") {
  GeoProgram prog = load("right_triangle.geo");
  CompiledScene scene = compile_scene(prog);
  auto t = prog.variables;
  REQUIRE(prog.cases.size() == 3);
  Polynomial p1 = compile_predicate(prog.cases[0].pred, scene).poly;
  Polynomial p2 = compile_predicate(prog.cases[1].pred, scene).poly;
  Polynomial p3 = compile_predicate(prog.cases[2].pred, scene).poly;
  CHECK(p1 == P(t, "a^2 + b^2 - c*b"));
  CHECK(p2 == P(t, "b"));
  CHECK(p3 == P(t, "b - c"));
  Polynomial product = mcs(std::vector<Polynomial>{p1, p2, p3});
  CHECK(product == canonicalize(p1 * p2 * p3));
  CHECK(product.total_degree() == 4);
}

TEST_CASE("euler thesis expands to zero and its degree bound is 4") {
  GeoProgram prog = load("euler.geo");
  CompiledScene scene = compile_scene(prog);
  PredicatePolynomial pp = compile_predicate(prog.thesis, scene);
  CHECK(pp.poly.is_zero());
  CHECK(pp.raw.is_zero());
  CHECK(degree_bound(prog.thesis, scene) == 4);

  auto t = prog.variables;
  Polynomial c1 = compile_predicate(prog.cases[0].pred, scene).poly;
  Polynomial c2 = compile_predicate(prog.cases[1].pred, scene).poly;
  Polynomial c3 = compile_predicate(prog.cases[2].pred, scene).poly;
  CHECK(c1 == P(t, "a^2 + b^2 - 2*b*c"));
  CHECK(c2 == P(t, "a^2 + b^2 - c^2"));
  CHECK(c3 == P(t, "2*b - c"));
  CHECK(mcs(std::vector<Polynomial>{c1, c2, c3}).total_degree() == 5);
}

TEST_CASE("degree bound can exceed the degree of a zero polynomial") {
  GeoProgram prog = parse_geo(std::string(kTriangle) + "thesis equal_length(A, B, A, B);");
  CompiledScene scene = compile_scene(prog);
  PredicatePolynomial pp = compile_predicate(prog.thesis, scene);
  CHECK(pp.poly.is_zero());
  CHECK(degree_bound(prog.thesis, scene) == 2);
}

TEST_CASE("degree bound dominates full expansion on the whole corpus") {
  const char* files[] = {"euler.geo",         "collinear_counter.geo", "right_triangle.geo",
                         "origin_guardrail.geo", "midsegment.geo",     "varignon.geo",
                         "centroid_median.geo",  "circum_equidistant.geo", "ortho_altitude.geo",
                         "reflection_iso.geo",   "foot_perp.geo",      "foot_on_line.geo",
                         "ninepoint.geo",        "isosceles_apex.geo", "parallelogram.geo",
                         "unit_counter.geo",     "thales_counter.geo", "midline_parallel.geo"};
  for (const char* f : files) {
    CAPTURE(f);
    GeoProgram prog = load(f);
    CompiledScene scene = compile_scene(prog);
    PredicatePolynomial pp = compile_predicate(prog.thesis, scene);
    if (!pp.raw.is_zero()) CHECK(pp.raw.total_degree() <= pp.raw_degree_bound);
    CHECK(pp.raw_degree_bound == degree_bound(prog.thesis, scene));
    for (const auto& c : prog.cases) {
      PredicatePolynomial cp = compile_predicate(c.pred, scene);
      if (!cp.raw.is_zero()) CHECK(cp.raw.total_degree() <= cp.raw_degree_bound);
    }

    // ledger invariants: entries canonical squarefree; every coordinate
    // denominator's squarefree part divides the product of the entries
    Polynomial prod = Polynomial::constant(prog.variables, rat(1));
    for (const auto& nd : scene.nondegeneracy) {
      CHECK(!nd.is_zero());
      CHECK(is_squarefree(nd));
      CHECK(nd == canonicalize(nd));
      prod = prod * nd;
    }
    for (const auto& [name, pt] : scene.points) {
      for (const Polynomial* d : {&pt.x.den(), &pt.y.den()}) {
        if (d->is_constant()) continue;
        CHECK(try_exact_divide(prod, squarefree_part(*d)).has_value());
      }
    }
  }
}

TEST_CASE("theorem corpus: direct expansion yields zero") {
  const char* provable[] = {"midsegment.geo",     "varignon.geo",      "centroid_median.geo",
                            "circum_equidistant.geo", "ortho_altitude.geo", "reflection_iso.geo",
                            "foot_perp.geo",      "foot_on_line.geo",  "ninepoint.geo",
                            "isosceles_apex.geo", "parallelogram.geo", "midline_parallel.geo"};
  for (const char* f : provable) {
    CAPTURE(f);
    CHECK(thesis_poly(load(f)).is_zero());
  }
  const char* refutable[] = {"collinear_counter.geo", "right_triangle.geo",
                             "origin_guardrail.geo", "unit_counter.geo", "thales_counter.geo"};
  for (const char* f : refutable) {
    CAPTURE(f);
    CHECK(!thesis_poly(load(f)).is_zero());
  }
}

TEST_CASE("identically degenerate constructions are compile errors") {
  CHECK_THROWS_AS(compile_scene(parse_geo(
                      "vars a; point A = (a, a); point B = (a, a); point C = (a, a); "
                      "point O = circumcenter(A, B, C); thesis collinear(A, B, C);")),
                  CompileError);
  CHECK_THROWS_AS(compile_scene(parse_geo(
                      "vars a; point A = (a, 0); point B = (a, 0); "
                      "line L = line(A, B); thesis collinear(A, A, B);")),
                  CompileError);
  // parallel lines never intersect
  CHECK_THROWS_AS(compile_scene(parse_geo(
                      "vars a b; point A = (0, 0); point B = (a, b); point C = (1, 1); "
                      "line L = line(A, B); line M = parallel_through(C, L); "
                      "point X = intersect(L, M); thesis collinear(A, B, X);")),
                  CompileError);
}

TEST_CASE("predicate symmetry and midpoint symmetry") {
  GeoProgram prog = parse_geo(std::string(kTriangle) +
                              "point M = midpoint(A, B);\n"
                              "point N = midpoint(B, A);\n"
                              "thesis collinear(A, B, C);");
  CompiledScene scene = compile_scene(prog);
  CHECK(scene.point("M").x == scene.point("N").x);
  CHECK(scene.point("M").y == scene.point("N").y);

  PredicateAst abc{PredKind::collinear, {"A", "B", "C"}, 0, 0};
  PredicateAst cab{PredKind::collinear, {"C", "A", "B"}, 0, 0};
  PredicateAst bac{PredKind::collinear, {"B", "A", "C"}, 0, 0};
  Polynomial p0 = compile_predicate(abc, scene).poly;
  CHECK(compile_predicate(cab, scene).poly == p0);
  CHECK(compile_predicate(bac, scene).poly == p0);

  PredicateAst cyc{PredKind::concyclic, {"A", "B", "C", "M"}, 0, 0};
  PredicateAst cyc2{PredKind::concyclic, {"B", "A", "M", "C"}, 0, 0};
  CHECK(compile_predicate(cyc, scene).poly == compile_predicate(cyc2, scene).poly);
}

TEST_CASE("renaming intermediates does not change the thesis polynomial") {
  GeoProgram a = load("ninepoint.geo");
  std::ifstream in(corpus("ninepoint.geo"));
  std::stringstream buf;
  buf << in.rdbuf();
  std::string src = buf.str();
  for (const auto& [from, to] :
       std::vector<std::pair<std::string, std::string>>{{"side", "zz"}, {"Ma", "K1"}}) {
    std::string::size_type pos = 0;
    while ((pos = src.find(from, pos)) != std::string::npos) {
      src.replace(pos, from.size(), to);
      pos += to.size();
    }
  }
  GeoProgram b = parse_geo(src);
  CHECK(thesis_poly(a) == thesis_poly(b));
}

TEST_CASE("reordering independent steps does not change coordinates") {
  GeoProgram a = parse_geo(std::string(kTriangle) +
                           "point M = midpoint(A, B);\npoint N = midpoint(B, C);\n"
                           "thesis collinear(M, N, C);");
  GeoProgram b = parse_geo(std::string(kTriangle) +
                           "point N = midpoint(B, C);\npoint M = midpoint(A, B);\n"
                           "thesis collinear(M, N, C);");
  CHECK(thesis_poly(a) == thesis_poly(b));
  CompiledScene sa = compile_scene(a), sb = compile_scene(b);
  CHECK(sa.point("M").x == sb.point("M").x);
  CHECK(sa.point("N").y == sb.point("N").y);
}

TEST_CASE("length/slope predicates on variable-coordinate scenes are homogeneous") {
  GeoProgram prog = parse_geo(
      "vars a b c d;\n"
      "point A = (0, 0);\npoint B = (b, a);\npoint C = (c, 0);\npoint D = (c, d);\n"
      "point M = midpoint(B, D);\npoint G = centroid(A, B, C);\n"
      "line L = line(A, D);\npoint F = foot(B, L);\n"
      "thesis equal_length(A, M, G, F);");
  CompiledScene scene = compile_scene(prog);
  for (PredKind kind : {PredKind::equal_length, PredKind::perpendicular}) {
    for (auto args : std::vector<std::vector<std::string>>{
             {"A", "M", "G", "F"}, {"B", "C", "D", "M"}, {"F", "G", "M", "D"}}) {
      PredicateAst pred{kind, args, 0, 0};
      Polynomial p = compile_predicate(pred, scene).poly;
      if (!p.is_zero()) CHECK(homogeneity(p).homogeneous);
    }
  }
}
