#include "qrealize/cli.hpp"
#include "qrealize/io.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace qrealize::cli;

  CLI::App app{"Physical realizability of linear systems as open quantum harmonic oscillators"};
  app.set_version_flag("--version", qrealize::io::kToolVersion);
  app.require_subcommand(1);

  Options opts;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--rank-tol", opts.rank_tol, "relative singular-value cutoff for ranks")
        ->check(CLI::PositiveNumber);
    sub->add_option("--residual-tol", opts.residual_tol, "relative threshold for identity checks")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", opts.seed, "seed for the minimality certificate (default 0)");
  };

  std::string input;
  std::string output;
  std::string realization;

  auto* count = app.add_subcommand("count", "print rank r of S~, minimal n_v and the eigenvalue bound");
  count->add_option("file", input, "system JSON")->required();
  add_common(count);

  auto* synth = app.add_subcommand("synthesize", "build (R, Lambda, B1, D1) and write a JSON report");
  synth->add_option("file", input, "system JSON")->required();
  synth->add_option("-o,--output", output, "report path")->required();
  synth->add_option("--trials", opts.trials, "random candidates for the minimality certificate")
      ->check(CLI::PositiveNumber);
  add_common(synth);

  auto* check = app.add_subcommand("check", "verify a proposed (B1, D1) against a system");
  check->add_option("system", input, "system JSON")->required();
  check->add_option("realization", realization, "JSON with B1 and D1 (or a synthesize report)")
      ->required();
  add_common(check);

  auto* paper = app.add_subcommand("paper-example", "reproduce the built-in four-state example");
  paper->add_option("--trials", opts.trials, "random candidates for the minimality certificate")
      ->check(CLI::PositiveNumber);
  add_common(paper);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitDomain;
  }

  if (*count) return cmd_count(input, opts, std::cout, std::cerr);
  if (*synth) return cmd_synthesize(input, output, opts, std::cout, std::cerr);
  if (*check) return cmd_check(input, realization, opts, std::cout, std::cerr);
  return cmd_paper_example(opts, std::cout, std::cerr);
}
