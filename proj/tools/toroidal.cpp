#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "toroidal/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Toroidalization of locally toroidal morphisms to a surface"};
  app.require_subcommand(1);

  toroidal::RunOptions run;
  std::string trace_out;
  std::size_t max_steps = 0;
  auto* run_cmd = app.add_subcommand("run", "principalize, lift and classify a scenario");
  run_cmd->add_option("scenario", run.scenario, "scenario JSON")->required();
  run_cmd->add_option("-o,--trace", trace_out, "write the trace JSON here");
  run_cmd->add_option("--max-steps", max_steps, "blowup budget per round")->check(CLI::PositiveNumber);
  run_cmd->add_option("--format", run.format, "stdout format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, toroidal::OutputFormat>{{"json", toroidal::OutputFormat::Json},
                                                       {"text", toroidal::OutputFormat::Text}}));

  std::string trace_in;
  auto* verify_cmd = app.add_subcommand("verify", "re-check a recorded trace");
  verify_cmd->add_option("trace", trace_in, "trace JSON")->required();

  toroidal::OracleOptions oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive search over all center choices");
  oracle_cmd->add_option("scenario", oracle.scenario, "scenario JSON")->required();
  oracle_cmd->add_option("--depth", oracle.depth, "maximal chain length")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--max-entry", oracle.max_entry, "largest initial exponent")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--max-k", oracle.max_k, "largest number of toroidal variables")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : toroidal::kExitUsage;
  }

  if (*run_cmd) {
    if (!trace_out.empty()) run.trace_out = trace_out;
    if (max_steps > 0) run.max_steps = max_steps;
    return toroidal::cmd_run(run, std::cout, std::cerr);
  }
  if (*verify_cmd) return toroidal::cmd_verify(trace_in, std::cout, std::cerr);
  return toroidal::cmd_oracle(oracle, std::cout, std::cerr);
}
