#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "mvg/cli.hpp"

int main(int argc, char** argv) {
  using namespace mvg::cli;
  CLI::App app{"Many-valued graph-based modal logic: evaluate, check and analyze frames"};
  app.require_subcommand(1);

  Options opts;
  std::string format = "table";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget", opts.budget, "Maximum enumeration size")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
    sub->add_flag("--close", opts.close, "Replace unstable valuation tables by their closures");
  };

  std::string frame, formula, sequent, mode = "model";
  std::optional<std::string> emit;

  auto* eval = app.add_subcommand("eval", "Print the extent and intent of a formula");
  eval->add_option("frame", frame, "Frame file (JSON)")->required();
  eval->add_option("formula", formula, "Formula, e.g. \"[]_M psi\"")->required();
  add_common(eval);

  auto* check = app.add_subcommand("check", "Check a sequent in the model or on the frame");
  check->add_option("frame", frame, "Frame file (JSON)")->required();
  check->add_option("sequent", sequent, "Sequent, e.g. \"[]_M psi |- phi\"")->required();
  check->add_option("--mode", mode, "model or frame")->check(CLI::IsMember({"model", "frame"}));
  add_common(check);

  auto* analyze = app.add_subcommand("analyze", "Compatibility, reflexivity and correspondence conditions");
  analyze->add_option("frame", frame, "Frame file (JSON)")->required();
  add_common(analyze);

  auto* casestudy = app.add_subcommand("casestudy", "Reproduce the bundled three-theory case study");
  casestudy->add_option("--emit", emit, "Also write the bundled frame file to this path");

  auto* concepts = app.add_subcommand("concepts", "List all concepts of the induced polarity");
  concepts->add_option("frame", frame, "Frame file (JSON)")->required();
  add_common(concepts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }
  opts.format = format == "json" ? Format::Json : Format::Table;

  if (eval->parsed()) return cmd_eval(frame, formula, opts, std::cout, std::cerr);
  if (check->parsed()) return cmd_check(frame, sequent, mode, opts, std::cout, std::cerr);
  if (analyze->parsed()) return cmd_analyze(frame, opts, std::cout, std::cerr);
  if (casestudy->parsed()) return cmd_casestudy(emit, std::cout, std::cerr);
  if (concepts->parsed()) return cmd_concepts(frame, opts, std::cout, std::cerr);
  return kError;
}
