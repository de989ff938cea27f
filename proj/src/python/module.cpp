#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "geoprove/compile.hpp"
#include "geoprove/errors.hpp"
#include "geoprove/expr_parse.hpp"
#include "geoprove/oracle.hpp"
#include "geoprove/report.hpp"
#include "geoprove/run.hpp"
#include "geoprove/version.hpp"

namespace py = pybind11;
using namespace geoprove;

namespace {

// Hold the shared table behind a tiny wrapper so python sees a value type.
struct PyVarTable {
  VarTablePtr ptr;
};

ImplicationMode mode_from(const std::string& name) {
  if (name == "assumed") return ImplicationMode::assumed;
  if (name == "divides") return ImplicationMode::divides;
  if (name == "sampled") return ImplicationMode::sampled;
  throw MathError("unknown implication mode '" + name + "'");
}

PredicatePolynomial thesis_pp(const GeoProgram& prog) {
  CompiledScene scene = compile_scene(prog);
  return compile_predicate(prog.thesis, scene);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact polynomial engine and geometry prover";
  m.attr("__version__") = kEngineVersion;

  py::register_exception<MathError>(m, "MathError");
  py::register_exception<ParseError>(m, "GeoParseError");
  py::register_exception<CompileError>(m, "GeoCompileError");

  py::class_<PyVarTable>(m, "VariableTable")
      .def(py::init([](const std::vector<std::string>& names) {
        return PyVarTable{VariableTable::create(names)};
      }))
      .def_property_readonly("names",
                             [](const PyVarTable& t) { return t.ptr->names(); })
      .def("__len__", [](const PyVarTable& t) { return t.ptr->size(); })
      .def("__repr__", [](const PyVarTable& t) {
        std::string s = "VariableTable([";
        for (std::size_t i = 0; i < t.ptr->size(); ++i)
          s += (i ? ", '" : "'") + t.ptr->name(i) + "'";
        return s + "])";
      });

  py::class_<Polynomial>(m, "Polynomial")
      .def("__str__", &Polynomial::str)
      .def("__repr__", [](const Polynomial& p) { return "Polynomial(" + p.str() + ")"; })
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
      .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
      .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
      .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
      .def("__neg__", [](const Polynomial& a) { return -a; })
      .def("__pow__", [](const Polynomial& a, unsigned k) { return a.pow(k); })
      .def("is_zero", &Polynomial::is_zero)
      .def("total_degree",
           [](const Polynomial& p) -> py::object {
             if (p.is_zero()) return py::none();  // degree -infinity
             return py::int_(p.total_degree());
           })
      .def("term_count", &Polynomial::term_count);

  py::class_<RationalFunction>(m, "RationalFunction")
      .def("__str__", &RationalFunction::str)
      .def_property_readonly("num", &RationalFunction::num)
      .def_property_readonly("den", &RationalFunction::den)
      .def("is_polynomial", &RationalFunction::is_polynomial)
      .def("is_zero", &RationalFunction::is_zero);

  m.def("poly", [](const std::string& text, const PyVarTable& t) {
    return parse_polynomial(text, t.ptr);
  });
  m.def("gcd", [](const Polynomial& a, const Polynomial& b) { return gcd(a, b); });
  m.def("lcm", [](const Polynomial& a, const Polynomial& b) { return lcm(a, b); });
  m.def("exact_divide",
        [](const Polynomial& a, const Polynomial& b) { return exact_divide(a, b); });
  m.def("squarefree_part", [](const Polynomial& p) { return squarefree_part(p); });
  m.def("is_squarefree", [](const Polynomial& p) { return is_squarefree(p); });
  m.def("canonicalize", [](const Polynomial& p) { return canonicalize(p); });
  m.def("mcs", [](const std::vector<Polynomial>& set) { return mcs(set); });
  m.def("homogeneous_degree", [](const Polynomial& p) -> py::object {
    Homogeneity h = homogeneity(p);
    if (!h.homogeneous) return py::none();
    if (h.all_degrees) return py::str("all");
    return py::int_(h.degree);
  });
  m.def("homogeneous_components", [](const Polynomial& p) { return homogeneous_components(p); });
  m.def("substitute", [](const Polynomial& p, const std::map<std::string, std::string>& binds) {
    std::map<std::string, RationalFunction> bindings;
    for (const auto& [name, text] : binds)
      bindings.emplace(name, parse_rational_function(text, p.table()));
    return substitute(p, bindings);
  });

  py::class_<GeoProgram>(m, "GeoProgram")
      .def_property_readonly("variables",
                             [](const GeoProgram& p) { return p.variables->names(); })
      .def_property_readonly("cases",
                             [](const GeoProgram& p) {
                               std::vector<std::string> names;
                               for (const auto& c : p.cases) names.push_back(c.name);
                               return names;
                             })
      .def_property_readonly("step_count",
                             [](const GeoProgram& p) { return p.steps.size(); });

  m.def("parse_geo", [](const std::string& source) { return parse_geo(source); });
  m.def("load_geo", [](const std::string& path) { return load_geo(path); });

  m.def("thesis_polynomial", [](const GeoProgram& prog) { return thesis_pp(prog).poly; });
  m.def("thesis_raw_numerator", [](const GeoProgram& prog) { return thesis_pp(prog).raw; });
  m.def("thesis_degree_bound",
        [](const GeoProgram& prog) { return thesis_pp(prog).raw_degree_bound; });
  m.def("case_polynomial", [](const GeoProgram& prog, const std::string& name) {
    CompiledScene scene = compile_scene(prog);
    for (const auto& c : prog.cases)
      if (c.name == name) return compile_predicate(c.pred, scene).poly;
    throw MathError("unknown case '" + name + "'");
  });
  m.def("nondegeneracy", [](const GeoProgram& prog) {
    return compile_scene(prog).nondegeneracy;
  });

  m.def(
      "direct_prove_json",
      [](const GeoProgram& prog, std::uint64_t seed) {
        return report_json(direct_prove(prog, ProverConfig{seed})).dump();
      },
      py::arg("prog"), py::arg("seed") = 0);
  m.def(
      "autarky_prove_json",
      [](const GeoProgram& prog, const std::string& mode, std::uint64_t seed) {
        return report_json(autarky_prove(prog, mode_from(mode), {}, ProverConfig{seed})).dump();
      },
      py::arg("prog"), py::arg("mode") = "assumed", py::arg("seed") = 0);
  m.def(
      "substitution_prove_json",
      [](const GeoProgram& prog, const std::string& constraint, std::uint64_t seed) {
        Polynomial c = parse_constraint(constraint, prog.variables);
        return report_json(substitution_prove(prog, c, ProverConfig{seed})).dump();
      },
      py::arg("prog"), py::arg("constraint"), py::arg("seed") = 0);
  m.def(
      "identity_test_json",
      [](const Polynomial& p, unsigned precision, std::size_t max_vars) {
        UniversalAssignment ua = assign_universal(p.table(), precision, max_vars);
        return oracle_json(identity_test(p, ua), ua).dump();
      },
      py::arg("p"), py::arg("precision") = 128, py::arg("max_vars") = 8);

  m.def(
      "run_file",
      [](const std::string& path, const std::string& command, const std::string& mode,
         unsigned precision, const std::string& format, std::uint64_t seed,
         const std::optional<std::string>& constraint) {
        RunConfig config;
        config.input_path = path;
        config.command = parse_command(command);
        config.mode = mode_from(mode);
        config.precision_bits = precision;
        config.format = format == "json" ? OutputFormat::json : OutputFormat::text;
        config.seed = seed;
        config.constraint = constraint;
        RunResult r = run(config);
        return py::make_tuple(r.exit_code, r.output, r.error);
      },
      py::arg("path"), py::arg("command"), py::arg("mode") = "assumed",
      py::arg("precision") = 128, py::arg("format") = "text", py::arg("seed") = 0,
      py::arg("constraint") = std::nullopt);
}
