#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "geoprove/run.hpp"
#include "geoprove/version.hpp"

using namespace geoprove;

int main(int argc, char** argv) {
  CLI::App app{"geoprove: an exact prover for plane-geometry theorems"};
  app.set_version_flag("--version", std::string(kEngineVersion));
  app.require_subcommand(1);

  RunConfig config;
  std::string mode = "assumed";
  std::string format = "text";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", config.input_path, "input .geo file")->required();
    sub->add_option("--mode", mode, "implication evidence mode: assumed|divides|sampled")
        ->check(CLI::IsMember({"assumed", "divides", "sampled"}));
    sub->add_option("--precision", config.precision_bits, "oracle working precision in bits");
    sub->add_option("--format", format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", config.seed, "random seed for sampling and witness search");
    sub->add_option("--constraint", [&config](const std::vector<std::string>& vals) {
      config.constraint = vals.front();
      return true;
    }, "explicit substitution constraint, e.g. \"b := a^2\"");
    return sub;
  };

  auto* check = add_common(app.add_subcommand("check", "direct expansion proof"));
  auto* autarky = add_common(app.add_subcommand("autarky", "degree-count proof via m.c.s."));
  auto* homog = add_common(
      app.add_subcommand("homog", "homogeneity analysis and substitution proof"));
  auto* oracle = add_common(
      app.add_subcommand("oracle", "numeric identity test at the universal point"));
  auto* report = add_common(app.add_subcommand("report", "run every method, merged report"));

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) config.command = Command::check;
  if (autarky->parsed()) config.command = Command::autarky;
  if (homog->parsed()) config.command = Command::homog;
  if (oracle->parsed()) config.command = Command::oracle;
  if (report->parsed()) config.command = Command::report;

  config.mode = mode == "divides" ? ImplicationMode::divides
                : mode == "sampled" ? ImplicationMode::sampled
                                    : ImplicationMode::assumed;
  config.format = format == "json" ? OutputFormat::json : OutputFormat::text;

  if (const char* cap = std::getenv("GEOPROVE_MAX_VARS")) {
    char* end = nullptr;
    long v = std::strtol(cap, &end, 10);
    if (end && *end == '\0' && v > 0) config.max_vars = static_cast<std::size_t>(v);
  }

  RunResult result = run(config);
  std::cout << result.output;
  std::cerr << result.error;
  return result.exit_code;
}
