#include <fstream>
#include <map>
#include <sstream>

#include "geoprove/errors.hpp"
#include "geoprove/expr_parse.hpp"
#include "geoprove/geo.hpp"

namespace geoprove {

const char* pred_kind_name(PredKind kind) {
  switch (kind) {
    case PredKind::collinear: return "collinear";
    case PredKind::perpendicular: return "perpendicular";
    case PredKind::parallel: return "parallel";
    case PredKind::equal_length: return "equal_length";
    case PredKind::point_on_line: return "point_on_line";
    case PredKind::concyclic: return "concyclic";
  }
  return "?";
}

const char* step_kind_name(StepKind kind) {
  switch (kind) {
    case StepKind::free_point: return "point";
    case StepKind::midpoint: return "midpoint";
    case StepKind::centroid: return "centroid";
    case StepKind::circumcenter: return "circumcenter";
    case StepKind::orthocenter: return "orthocenter";
    case StepKind::intersect: return "intersect";
    case StepKind::foot: return "foot";
    case StepKind::reflection: return "reflection";
    case StepKind::line_through: return "line";
    case StepKind::perpendicular_through: return "perpendicular_through";
    case StepKind::parallel_through: return "parallel_through";
  }
  return "?";
}

namespace {

const std::map<std::string, std::pair<StepKind, std::vector<ObjSort>>, std::less<>>
    kPointCtors = {
        {"midpoint", {StepKind::midpoint, {ObjSort::point, ObjSort::point}}},
        {"centroid", {StepKind::centroid, {ObjSort::point, ObjSort::point, ObjSort::point}}},
        {"circumcenter",
         {StepKind::circumcenter, {ObjSort::point, ObjSort::point, ObjSort::point}}},
        {"orthocenter",
         {StepKind::orthocenter, {ObjSort::point, ObjSort::point, ObjSort::point}}},
        {"intersect", {StepKind::intersect, {ObjSort::line, ObjSort::line}}},
        {"foot", {StepKind::foot, {ObjSort::point, ObjSort::line}}},
        {"reflection", {StepKind::reflection, {ObjSort::point, ObjSort::line}}},
};

const std::map<std::string, std::pair<StepKind, std::vector<ObjSort>>, std::less<>>
    kLineCtors = {
        {"line", {StepKind::line_through, {ObjSort::point, ObjSort::point}}},
        {"perpendicular_through",
         {StepKind::perpendicular_through, {ObjSort::point, ObjSort::line}}},
        {"parallel_through", {StepKind::parallel_through, {ObjSort::point, ObjSort::line}}},
};

const std::map<std::string, std::pair<PredKind, std::vector<ObjSort>>, std::less<>>
    kPredicates = {
        {"collinear", {PredKind::collinear, {ObjSort::point, ObjSort::point, ObjSort::point}}},
        {"perpendicular",
         {PredKind::perpendicular,
          {ObjSort::point, ObjSort::point, ObjSort::point, ObjSort::point}}},
        {"parallel",
         {PredKind::parallel, {ObjSort::point, ObjSort::point, ObjSort::point, ObjSort::point}}},
        {"equal_length",
         {PredKind::equal_length,
          {ObjSort::point, ObjSort::point, ObjSort::point, ObjSort::point}}},
        {"point_on_line", {PredKind::point_on_line, {ObjSort::point, ObjSort::line}}},
        {"concyclic",
         {PredKind::concyclic, {ObjSort::point, ObjSort::point, ObjSort::point, ObjSort::point}}},
};

bool reserved_word(const std::string& s) {
  return s == "vars" || s == "point" || s == "line" || s == "thesis" || s == "case" ||
         kPointCtors.count(s) > 0 || kLineCtors.count(s) > 0 || kPredicates.count(s) > 0;
}

class GeoParser {
 public:
  explicit GeoParser(std::string_view source) : ts_(tokenize(source)) {}

  GeoProgram parse() {
    parse_vars();
    bool saw_thesis = false;
    while (!ts_.at_end()) {
      const Token& t = ts_.peek();
      if (t.is_ident("point") || t.is_ident("line")) {
        if (saw_thesis) ts_.fail("construction steps must precede the thesis");
        parse_step();
      } else if (t.is_ident("thesis")) {
        if (saw_thesis) ts_.fail("duplicate thesis (a program proves exactly one)");
        ts_.next();
        prog_.thesis = parse_predicate();
        ts_.expect_sym(';', "after the thesis");
        saw_thesis = true;
      } else if (t.is_ident("case")) {
        if (!saw_thesis) ts_.fail("cases must follow the thesis");
        parse_case();
      } else {
        ts_.fail("expected 'point', 'line', 'thesis' or 'case'");
      }
    }
    if (!saw_thesis) ts_.fail("program has no thesis");
    return std::move(prog_);
  }

 private:
  void parse_vars() {
    if (!ts_.peek().is_ident("vars")) ts_.fail("program must start with a 'vars' declaration");
    ts_.next();
    std::vector<std::string> names;
    while (ts_.peek().kind == Token::Kind::Ident) names.push_back(ts_.next().text);
    if (names.empty()) ts_.fail("expected at least one variable name");
    ts_.expect_sym(';', "after the variable list");
    for (const auto& n : names)
      if (reserved_word(n)) ts_.fail("'" + n + "' is a reserved word");
    prog_.variables = VariableTable::create(names);
  }

  std::string parse_object_name() {
    const Token& t = ts_.peek();
    if (t.kind != Token::Kind::Ident) ts_.fail("expected an identifier");
    if (reserved_word(t.text)) ts_.fail("'" + t.text + "' is a reserved word");
    return ts_.next().text;
  }

  void declare(const std::string& name, ObjSort sort, const Token& at) {
    if (sorts_.count(name))
      throw ParseError("duplicate definition of '" + name + "'", at.line, at.col);
    if (prog_.variables->index_of(name))
      throw ParseError("'" + name + "' is already a variable", at.line, at.col);
    sorts_.emplace(name, sort);
  }

  std::string parse_ref(ObjSort want) {
    const Token t = ts_.peek();
    if (t.kind != Token::Kind::Ident) ts_.fail("expected the name of a defined object");
    auto it = sorts_.find(t.text);
    if (it == sorts_.end())
      throw ParseError("undefined identifier '" + t.text + "'", t.line, t.col);
    if (it->second != want)
      throw ParseError(std::string("sort mismatch: '") + t.text + "' is a " +
                           (it->second == ObjSort::point ? "point" : "line") + ", expected a " +
                           (want == ObjSort::point ? "point" : "line"),
                       t.line, t.col);
    ts_.next();
    return t.text;
  }

  std::vector<std::string> parse_arg_list(const std::vector<ObjSort>& sig) {
    ts_.expect_sym('(', "to open the argument list");
    std::vector<std::string> args;
    for (std::size_t i = 0; i < sig.size(); ++i) {
      if (i > 0) ts_.expect_sym(',', "between arguments");
      args.push_back(parse_ref(sig[i]));
    }
    ts_.expect_sym(')', "to close the argument list");
    return args;
  }

  void parse_step() {
    const Token intro = ts_.next();  // 'point' or 'line'
    const bool is_point = intro.text == "point";
    const Token name_tok = ts_.peek();
    std::string name = parse_object_name();
    ts_.expect_sym('=', "in the definition of '" + name + "'");

    ConstructionStep step;
    step.name = name;
    step.line = name_tok.line;
    step.col = name_tok.col;

    const Token& head = ts_.peek();
    if (is_point && head.is_sym('(')) {
      ts_.next();
      RationalFunction x = parse_ratexpr(ts_, prog_.variables);
      ts_.expect_sym(',', "between the coordinates");
      RationalFunction y = parse_ratexpr(ts_, prog_.variables);
      ts_.expect_sym(')', "to close the coordinate pair");
      step.kind = StepKind::free_point;
      step.coords = std::make_pair(std::move(x), std::move(y));
    } else if (head.kind == Token::Kind::Ident) {
      const auto& ctors = is_point ? kPointCtors : kLineCtors;
      auto it = ctors.find(head.text);
      if (it == ctors.end())
        ts_.fail(std::string("unknown ") + (is_point ? "point" : "line") + " construction '" +
                 head.text + "'");
      ts_.next();
      step.kind = it->second.first;
      step.args = parse_arg_list(it->second.second);
    } else {
      ts_.fail("expected a construction");
    }
    ts_.expect_sym(';', "after the definition of '" + name + "'");
    declare(name, is_point ? ObjSort::point : ObjSort::line, name_tok);
    prog_.steps.push_back(std::move(step));
  }

  PredicateAst parse_predicate() {
    const Token head = ts_.peek();
    if (head.kind != Token::Kind::Ident) ts_.fail("expected a predicate");
    auto it = kPredicates.find(head.text);
    if (it == kPredicates.end()) ts_.fail("unknown predicate '" + head.text + "'");
    ts_.next();
    PredicateAst pred;
    pred.kind = it->second.first;
    pred.line = head.line;
    pred.col = head.col;
    pred.args = parse_arg_list(it->second.second);
    return pred;
  }

  void parse_case() {
    ts_.next();  // 'case'
    const Token name_tok = ts_.peek();
    std::string name = parse_object_name();
    for (const auto& c : prog_.cases)
      if (c.name == name)
        throw ParseError("duplicate case name '" + name + "'", name_tok.line, name_tok.col);
    ts_.expect_sym(':', "after the case name");
    PredicateAst pred = parse_predicate();
    ts_.expect_sym(';', "after the case predicate");
    prog_.cases.push_back(NamedCase{std::move(name), std::move(pred)});
  }

  TokenStream ts_;
  GeoProgram prog_;
  std::map<std::string, ObjSort> sorts_;
};

}  // namespace

GeoProgram parse_geo(std::string_view source) { return GeoParser(source).parse(); }

GeoProgram load_geo(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MathError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_geo(buf.str());
}

}  // namespace geoprove
