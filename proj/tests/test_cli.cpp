#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "geoprove/report.hpp"
#include "geoprove/run.hpp"
#include "test_util.hpp"

using namespace geoprove;

namespace {
std::string corpus(const std::string& name) {
  return std::string(GEOPROVE_CORPUS_DIR) + "/" + name;
}

RunConfig cfg(const std::string& file, Command cmd) {
  RunConfig c;
  c.input_path = corpus(file);
  c.command = cmd;
  return c;
}
}  // namespace

TEST_CASE("exit codes honor the contract across the corpus") {
  CHECK(run(cfg("euler.geo", Command::check)).exit_code == 0);
  CHECK(run(cfg("euler.geo", Command::autarky)).exit_code == 0);
  CHECK(run(cfg("collinear_counter.geo", Command::check)).exit_code == 2);
  CHECK(run(cfg("thales_counter.geo", Command::check)).exit_code == 2);
  CHECK(run(cfg("midsegment.geo", Command::check)).exit_code == 0);
  CHECK(run(cfg("ninepoint.geo", Command::check)).exit_code == 0);

  RunConfig guard = cfg("origin_guardrail.geo", Command::autarky);
  guard.mode = ImplicationMode::divides;
  CHECK(run(guard).exit_code == 1);

  // input errors
  RunConfig missing = cfg("no_such_file.geo", Command::check);
  RunResult r = run(missing);
  CHECK(r.exit_code == 3);
  CHECK(!r.error.empty());

  // autarky without cases is an input error
  CHECK(run(cfg("midsegment.geo", Command::autarky)).exit_code == 3);
}

TEST_CASE("parse errors report a diagnostic on the error stream") {
  RunConfig c;
  c.command = Command::check;
  c.input_path = "/tmp/geoprove_bad_input.geo";
  {
    std::ofstream out(c.input_path);
    out << "vars a;\npoint A = midpoint(Q, Q);\nthesis collinear(A, A, A);\n";
  }
  RunResult r = run(c);
  CHECK(r.exit_code == 3);
  CHECK(r.output.empty());
  CHECK(r.error.find("undefined identifier 'Q'") != std::string::npos);
  CHECK(r.error.find("line 2") != std::string::npos);
}

TEST_CASE("autarky euler report carries d=4, D=5") {
  RunConfig c = cfg("euler.geo", Command::autarky);
  c.format = OutputFormat::json;
  RunResult r = run(c);
  CHECK(r.exit_code == 0);
  Json doc = Json::parse(r.output);
  CHECK(doc["engine_version"] == "0.1.0");
  CHECK(doc["autarky"]["verdict"] == "proved");
  CHECK(doc["autarky"]["thesis"]["degree_bound"] == 4);
  CHECK(doc["autarky"]["mcs"]["degree"] == 5);
  CHECK(doc["autarky"]["cases"].size() == 3);
}

TEST_CASE("byte-identical output for identical config") {
  for (Command cmd : {Command::check, Command::autarky, Command::report}) {
    RunConfig c = cfg("euler.geo", cmd);
    c.constraint = "b := a^2";
    for (OutputFormat f : {OutputFormat::text, OutputFormat::json}) {
      c.format = f;
      RunResult r1 = run(c);
      RunResult r2 = run(c);
      CHECK(r1.output == r2.output);
      CHECK(r1.exit_code == r2.exit_code);
    }
  }
}

TEST_CASE("json output round-trips") {
  for (const char* f : {"euler.geo", "collinear_counter.geo", "origin_guardrail.geo"}) {
    CAPTURE(f);
    RunConfig c = cfg(f, Command::report);
    c.constraint = "b := a^2";
    c.format = OutputFormat::json;
    RunResult r = run(c);
    Json parsed = Json::parse(r.output);
    CHECK(parsed.dump(2) + "\n" == r.output);
  }
}

TEST_CASE("report command runs every method without short-circuiting") {
  RunConfig c = cfg("euler.geo", Command::report);
  c.constraint = "b := a^2";
  c.format = OutputFormat::json;
  RunResult r = run(c);
  CHECK(r.exit_code == 0);
  Json doc = Json::parse(r.output);
  CHECK(doc.contains("direct"));
  CHECK(doc.contains("autarky"));
  CHECK(doc.contains("homog"));
  CHECK(doc.contains("oracle"));
  CHECK(doc["direct"]["verdict"] == "proved");
  CHECK(doc["autarky"]["verdict"] == "proved");
  CHECK(doc["homog"]["substitution"]["verdict"] == "proved");
  CHECK(doc["oracle"]["verdict"] == "likely_identity");

  // refuted thesis: direct refutes, oracle sees a nonzero value
  RunConfig c2 = cfg("collinear_counter.geo", Command::report);
  c2.format = OutputFormat::json;
  RunResult r2 = run(c2);
  CHECK(r2.exit_code == 2);
  Json doc2 = Json::parse(r2.output);
  CHECK(doc2["direct"]["verdict"] == "disproved_at_witness");
  CHECK(doc2["oracle"]["verdict"] == "not_identity");
}

TEST_CASE("homog command") {
  RunConfig c = cfg("euler.geo", Command::homog);
  c.constraint = "b := a^2";
  c.format = OutputFormat::json;
  RunResult r = run(c);
  CHECK(r.exit_code == 0);
  Json doc = Json::parse(r.output);
  CHECK(doc["homog"]["homogeneous"] == true);
  CHECK(doc["homog"]["substitution"]["verdict"] == "proved");
  CHECK(doc["homog"]["substitution"]["residual"] == "0");

  // inhomogeneous thesis: precondition failure diagnostic
  RunConfig c2 = cfg("unit_counter.geo", Command::homog);
  c2.constraint = "b := a^2";
  c2.format = OutputFormat::json;
  RunResult r2 = run(c2);
  CHECK(r2.exit_code == 1);
  Json doc2 = Json::parse(r2.output);
  CHECK(doc2["homog"]["homogeneous"] == false);
  std::string diag = doc2["homog"]["substitution"]["diagnostic"];
  CHECK(diag.find("not homogeneous") != std::string::npos);

  // analysis only without a constraint
  RunConfig c3 = cfg("euler.geo", Command::homog);
  c3.format = OutputFormat::json;
  RunResult r3 = run(c3);
  CHECK(r3.exit_code == 1);
  CHECK_FALSE(Json::parse(r3.output)["homog"].contains("substitution"));
}

TEST_CASE("oracle command exit codes") {
  CHECK(run(cfg("euler.geo", Command::oracle)).exit_code == 0);
  CHECK(run(cfg("collinear_counter.geo", Command::oracle)).exit_code == 1);

  RunConfig c = cfg("euler.geo", Command::oracle);
  c.format = OutputFormat::json;
  Json doc = Json::parse(run(c).output);
  CHECK(doc["oracle"]["precision_bits"] == 128);
  CHECK(doc["oracle"]["generators"]["a"] == "e");
  CHECK(doc["oracle"]["generators"]["c"] == "e^sqrt(3)");
}

TEST_CASE("max_vars cap applies to the oracle") {
  RunConfig c = cfg("varignon.geo", Command::oracle);  // 6 variables
  c.max_vars = 4;
  RunResult r = run(c);
  CHECK(r.exit_code == 3);
  CHECK(r.error.find("at most 4 variables") != std::string::npos);
  c.max_vars = 8;
  CHECK(run(c).exit_code == 0);
}
