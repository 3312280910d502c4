// argv front end for the tabulation toolkit. Flags are mapped onto the
// option structs in ballotrank/cli.hpp and handed to the command bodies;
// no logic lives here.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ballotrank/cli.hpp"

namespace {

using ballotrank::Variant;
using namespace ballotrank::cli;

const std::map<std::string, InputFormat> kFormats{
    {"ballots", InputFormat::ballots}, {"margins", InputFormat::margins}};
const std::map<std::string, Method> kMethods{
    {"ballotrank", Method::ballotrank}, {"minimax", Method::minimax},
    {"rankedpairs", Method::rankedpairs}, {"schulze", Method::schulze},
    {"irv", Method::irv},               {"cv", Method::cv}};
const std::map<std::string, Variant> kVariants{
    {"selfloops", Variant::self_loops},
    {"noselfloops", Variant::no_self_loops},
    {"unweighted", Variant::unweighted}};
const std::map<std::string, OutputFormat> kOutputs{
    {"json", OutputFormat::json},
    {"csv", OutputFormat::csv},
    {"text", OutputFormat::text}};

// The damping flag needs present/absent detection (absence falls back to
// $BALLOTRANK_DAMPING), so it parses into a plain double here and is moved
// into the optional after parsing.
struct DampingFlag {
  CLI::App* sub = nullptr;
  double value = 0.85;

  void wire(CLI::App* s) {
    sub = s;
    s->add_option("--damping", value, "walk damping factor d in [0, 1]");
  }
  void store(CommonOptions& opt) const {
    if (sub->count("--damping")) opt.damping = value;
  }
};

void add_input_flags(CLI::App* sub, CommonOptions& opt) {
  sub->add_option("--input", opt.input, "input file, or - for stdin")
      ->required();
  sub->add_option("--format", opt.format, "input format")
      ->transform(CLI::CheckedTransformer(kFormats));
}

void add_output_flag(CLI::App* sub, CommonOptions& opt) {
  sub->add_option("--output", opt.output, "output format")
      ->transform(CLI::CheckedTransformer(kOutputs));
}

void add_solver_flags(CLI::App* sub, CommonOptions& opt) {
  sub->add_option("--variant", opt.variant, "walk kernel variant")
      ->transform(CLI::CheckedTransformer(kVariants));
  sub->add_option("--tolerance", opt.tolerance, "L1 stopping threshold");
  sub->add_option("--max-iter", opt.max_iter, "power iteration cap");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ranked-ballot tabulation toolkit"};
  app.require_subcommand(1);

  CommonOptions tab_opt;
  DampingFlag tab_damping;
  auto* tab = app.add_subcommand("tabulate", "run one method on one input");
  add_input_flags(tab, tab_opt);
  tab->add_option("--method", tab_opt.method, "tabulation method")
      ->transform(CLI::CheckedTransformer(kMethods));
  tab_damping.wire(tab);
  add_solver_flags(tab, tab_opt);
  add_output_flag(tab, tab_opt);
  tab->add_option("--emit-graph", tab_opt.emit_graph,
                  "write the walk graph as Graphviz DOT");

  CompareOptions cmp_opt;
  DampingFlag cmp_damping;
  auto* cmp = app.add_subcommand("compare", "run several methods side by side");
  add_input_flags(cmp, cmp_opt.common);
  cmp->add_option("--methods", cmp_opt.methods,
                  "methods to run (default: all the input supports)")
      ->transform(CLI::CheckedTransformer(kMethods))
      ->delimiter(',');
  cmp_damping.wire(cmp);
  add_solver_flags(cmp, cmp_opt.common);
  add_output_flag(cmp, cmp_opt.common);

  SweepOptions sweep_opt;
  sweep_opt.common.output = OutputFormat::csv;
  auto* sweep = app.add_subcommand("sweep", "tabulate across a damping grid");
  add_input_flags(sweep, sweep_opt.common);
  sweep->add_option("--d-min", sweep_opt.grid_start, "grid start");
  sweep->add_option("--d-max", sweep_opt.grid_stop, "grid stop");
  sweep->add_option("--d-step", sweep_opt.grid_step, "grid step");
  add_solver_flags(sweep, sweep_opt.common);
  add_output_flag(sweep, sweep_opt.common);

  CriteriaOptions crit_opt;
  DampingFlag crit_damping;
  auto* crit = app.add_subcommand("criteria", "run the criteria suites");
  crit->add_option("--suite", crit_opt.suite, "random | fixtures | all");
  crit->add_option("--trials", crit_opt.trials, "random trials per criterion");
  crit->add_option("--seed", crit_opt.seed, "base seed for random trials");
  crit->add_option("--method", crit_opt.common.method, "scoring method")
      ->transform(CLI::CheckedTransformer(kMethods));
  crit_damping.wire(crit);
  add_output_flag(crit, crit_opt.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  tab_damping.store(tab_opt);
  cmp_damping.store(cmp_opt.common);
  crit_damping.store(crit_opt.common);

  if (*tab) return cmd_tabulate(tab_opt, std::cout, std::cerr);
  if (*cmp) return cmd_compare(cmp_opt, std::cout, std::cerr);
  if (*sweep) return cmd_sweep(sweep_opt, std::cout, std::cerr);
  return cmd_criteria(crit_opt, std::cout, std::cerr);
}
