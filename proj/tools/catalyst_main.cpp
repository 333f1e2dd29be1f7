#include "catalysis/cli.hpp"
#include "catalysis/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using catalysis::cli::ProblemInput;

struct RawOptions {
  std::string input_file;
  std::string psi1;
  std::string psi2;
  std::string phi;
  std::string format = "human";
  std::size_t k = 2;
  std::size_t grid_denominator = 1000;
  bool stats = false;
};

void add_common(CLI::App* cmd, RawOptions& opts) {
  cmd->add_option("--input", opts.input_file, "JSON document with psi1, psi2 (string arrays), optional k, phi");
  cmd->add_option("--psi1", opts.psi1, "comma-separated Schmidt coefficients, e.g. 0.4,0.4,0.1,0.1");
  cmd->add_option("--psi2", opts.psi2, "comma-separated Schmidt coefficients, e.g. 1/2,1/4,1/4,0");
  cmd->add_option("--format", opts.format, "output format")->check(CLI::IsMember({"human", "machine"}));
}

ProblemInput build_input(const RawOptions& opts, const CLI::App& cmd) {
  ProblemInput in;
  in.k = opts.k;
  in.grid_denominator = opts.grid_denominator;
  in.stats = opts.stats;
  in.format = opts.format == "machine" ? catalysis::cli::OutputFormat::Machine : catalysis::cli::OutputFormat::Human;
  if (!opts.input_file.empty()) in = catalysis::cli::merge_input_file(opts.input_file, in);
  // Explicit flags win over the document.
  const auto given = [&](const char* name) {
    const CLI::Option* opt = cmd.get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--k")) in.k = opts.k;
  if (given("--grid-denominator")) in.grid_denominator = opts.grid_denominator;
  if (!opts.psi1.empty()) in.psi1 = catalysis::cli::split_list(opts.psi1);
  if (!opts.psi2.empty()) in.psi2 = catalysis::cli::split_list(opts.psi2);
  if (!opts.phi.empty()) in.phi = catalysis::cli::split_list(opts.phi);
  return in;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact search for entanglement catalysts between incomparable pure states"};
  app.require_subcommand(1);

  RawOptions opts;
  auto* compare = app.add_subcommand("compare", "majorization verdict and prefix-sum tables");
  auto* find = app.add_subcommand("find", "decide existence of a k x k catalyst and list all of them");
  auto* verify = app.add_subcommand("verify", "check a given catalyst directly");
  auto* oracle = app.add_subcommand("oracle", "brute-force grid search over k x k catalysts");
  for (auto* cmd : {compare, find, verify, oracle}) add_common(cmd, opts);
  for (auto* cmd : {find, oracle}) {
    cmd->add_option("--k", opts.k, "catalyst dimension")->capture_default_str();
  }
  find->add_flag("--stats", opts.stats, "include timing in the output");
  verify->add_option("--phi", opts.phi, "comma-separated catalyst coefficients");
  oracle->add_option("--grid-denominator", opts.grid_denominator, "grid step 1/d")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : catalysis::cli::kExitError;
  }

  try {
    if (*compare) return catalysis::cli::cmd_compare(build_input(opts, *compare), std::cout, std::cerr);
    if (*find) return catalysis::cli::cmd_find(build_input(opts, *find), std::cout, std::cerr);
    if (*verify) return catalysis::cli::cmd_verify(build_input(opts, *verify), std::cout, std::cerr);
    if (*oracle) return catalysis::cli::cmd_oracle(build_input(opts, *oracle), std::cout, std::cerr);
  } catch (const catalysis::CatalysisError& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return catalysis::cli::kExitError;
}
