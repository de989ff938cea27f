#include "geoprove/run.hpp"

#include <sstream>

#include "geoprove/errors.hpp"
#include "geoprove/oracle.hpp"
#include "geoprove/report.hpp"
#include "geoprove/version.hpp"

namespace geoprove {

namespace {

int verdict_code(const ProofReport& r) {
  switch (r.verdict) {
    case Verdict::proved: return 0;
    case Verdict::not_proved: return 1;
    case Verdict::disproved_at_witness: return 2;
  }
  return 1;
}

struct HomogSection {
  bool homogeneous = false;
  bool all_degrees = false;
  int degree = 0;
  std::string thesis;
  std::optional<ProofReport> substitution;
};

HomogSection homog_run(const GeoProgram& prog, const RunConfig& config,
                       const ProverConfig& pcfg) {
  CompiledScene scene = compile_scene(prog);
  PredicatePolynomial pp = compile_predicate(prog.thesis, scene);
  Homogeneity h = homogeneity(pp.poly);
  HomogSection section{h.homogeneous, h.all_degrees, h.degree, pp.poly.str(), std::nullopt};
  if (config.constraint) {
    Polynomial c = parse_constraint(*config.constraint, prog.variables);
    section.substitution = substitution_prove(prog, c, pcfg);
  }
  return section;
}

Json homog_json(const HomogSection& s) {
  Json j;
  j["thesis_polynomial"] = s.thesis;
  j["homogeneous"] = s.homogeneous;
  if (s.homogeneous) {
    if (s.all_degrees)
      j["degree"] = "all";
    else
      j["degree"] = s.degree;
  }
  if (s.substitution) j["substitution"] = report_json(*s.substitution);
  return j;
}

std::string homog_text(const HomogSection& s) {
  std::ostringstream out;
  out << "thesis polynomial: " << s.thesis << "\n";
  if (!s.homogeneous)
    out << "homogeneous: no\n";
  else if (s.all_degrees)
    out << "homogeneous: yes (zero polynomial, every degree)\n";
  else
    out << "homogeneous: yes, degree " << s.degree << "\n";
  if (s.substitution) out << report_text(*s.substitution);
  return out.str();
}

struct OracleSection {
  OracleResult result;
  UniversalAssignment assignment;
};

OracleSection oracle_run(const GeoProgram& prog, const RunConfig& config) {
  CompiledScene scene = compile_scene(prog);
  PredicatePolynomial pp = compile_predicate(prog.thesis, scene);
  UniversalAssignment ua = assign_universal(prog.variables, config.precision_bits,
                                            config.max_vars);
  // The raw numerator is the honest zero test of the predicate: nothing has
  // been divided out of it besides the cleared denominator.
  return {identity_test(pp.raw, ua), std::move(ua)};
}

std::string config_mode(const RunConfig& c) { return mode_name(c.mode); }

}  // namespace

Command parse_command(const std::string& name) {
  if (name == "check") return Command::check;
  if (name == "autarky") return Command::autarky;
  if (name == "homog") return Command::homog;
  if (name == "oracle") return Command::oracle;
  if (name == "report") return Command::report;
  throw MathError("unknown command '" + name + "'");
}

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    GeoProgram prog = load_geo(config.input_path);
    ProverConfig pcfg{config.seed, 12, 16};

    Json doc;
    doc["engine_version"] = kEngineVersion;
    const char* cmd_name = config.command == Command::check    ? "check"
                           : config.command == Command::autarky ? "autarky"
                           : config.command == Command::homog   ? "homog"
                           : config.command == Command::oracle  ? "oracle"
                                                                : "report";
    doc["command"] = cmd_name;
    doc["input"] = config.input_path;
    Json cfg;
    cfg["mode"] = config_mode(config);
    cfg["precision_bits"] = config.precision_bits;
    cfg["seed"] = config.seed;
    if (config.constraint) cfg["constraint"] = *config.constraint;
    doc["config"] = std::move(cfg);

    std::ostringstream text;
    text << "geoprove " << kEngineVersion << ": " << cmd_name << " " << config.input_path
         << "\n";

    switch (config.command) {
      case Command::check: {
        ProofReport r = direct_prove(prog, pcfg);
        doc["direct"] = report_json(r);
        text << report_text(r);
        result.exit_code = verdict_code(r);
        break;
      }
      case Command::autarky: {
        ProofReport r = autarky_prove(prog, config.mode, {}, pcfg);
        doc["autarky"] = report_json(r);
        text << report_text(r);
        result.exit_code = verdict_code(r);
        break;
      }
      case Command::homog: {
        HomogSection s = homog_run(prog, config, pcfg);
        doc["homog"] = homog_json(s);
        text << homog_text(s);
        result.exit_code = s.substitution ? verdict_code(*s.substitution) : 1;
        break;
      }
      case Command::oracle: {
        OracleSection s = oracle_run(prog, config);
        doc["oracle"] = oracle_json(s.result, s.assignment);
        text << oracle_text(s.result, s.assignment);
        result.exit_code =
            (s.result.verdict == OracleVerdict::likely_identity && !s.result.caveat) ? 0 : 1;
        break;
      }
      case Command::report: {
        // Fixed order, never short-circuits: the cross-checks between the
        // methods are the point.
        ProofReport direct = direct_prove(prog, pcfg);
        doc["direct"] = report_json(direct);
        text << "[direct]\n" << report_text(direct);

        std::optional<ProofReport> autarky;
        if (!prog.cases.empty()) {
          autarky = autarky_prove(prog, config.mode, {}, pcfg);
          doc["autarky"] = report_json(*autarky);
          text << "[autarky]\n" << report_text(*autarky);
        } else {
          doc["autarky"] = Json{{"skipped", "no cases declared"}};
          text << "[autarky]\nskipped: no cases declared\n";
        }

        HomogSection homog = homog_run(prog, config, pcfg);
        doc["homog"] = homog_json(homog);
        text << "[homog]\n" << homog_text(homog);

        OracleSection oracle = oracle_run(prog, config);
        doc["oracle"] = oracle_json(oracle.result, oracle.assignment);
        text << "[oracle]\n" << oracle_text(oracle.result, oracle.assignment);

        if (direct.verdict == Verdict::disproved_at_witness)
          result.exit_code = 2;
        else if (direct.verdict == Verdict::proved ||
                 (autarky && autarky->verdict == Verdict::proved) ||
                 (homog.substitution && homog.substitution->verdict == Verdict::proved))
          result.exit_code = 0;
        else
          result.exit_code = 1;
        break;
      }
    }

    result.output =
        config.format == OutputFormat::json ? doc.dump(2) + "\n" : text.str();
    return result;
  } catch (const ParseError& e) {
    result.exit_code = 3;
    result.error = std::string("parse error: ") + e.what() + "\n";
  } catch (const CompileError& e) {
    result.exit_code = 3;
    result.error = std::string("compile error: ") + e.what() + "\n";
  } catch (const MathError& e) {
    result.exit_code = 3;
    result.error = std::string("input error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace geoprove
