// rhorep: construct and check braid group representations on weight spaces.
#include <iostream>

#include <CLI11.hpp>

#include "rhorep/cli.hpp"

using rhorep::cli::Command;
using rhorep::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Exact braid group matrices on weight spaces of quantum sl(2) tensor powers at roots of unity"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  RunConfig cfg;
  std::string word, output;
  int specialize = 0;
  bool float_check = false;
  app.add_option("--output", output, "Write the JSON document to this path (atomic)");
  app.add_flag("--float_check,--float-check", float_check, "Cross-check against complex evaluation (tol 1e-9)");

  auto nlr = [&](CLI::App* sub, bool with_l) {
    sub->add_option("--n", cfg.n, "Number of strands")->required();
    if (with_l) sub->add_option("--l", cfg.l, "Weight level l")->required();
    sub->add_option("--r", cfg.r, "Root of unity order, q = exp(i pi / r)")->required();
  };

  auto* dims = app.add_subcommand("dims", "kappa, dim A, dim B, dim W");
  nlr(dims, true);
  dims->callback([&] { cfg.command = Command::dims; });

  auto* mats = app.add_subcommand("matrices", "Generator or word matrices as JSON");
  mats->add_option("--rep", cfg.rep, "V | W | N | N20 | N21")->required();
  mats->add_option("--n", cfg.n)->required();
  mats->add_option("--l", cfg.l, "Ignored for N20, N21");
  mats->add_option("--r", cfg.r)->required();
  mats->add_option("--word", word, "Comma separated signed generators, e.g. \"1,2,-1\"");
  mats->callback([&] { cfg.command = Command::matrices; });

  auto* twist = app.add_subcommand("twist", "Full twist on the dominant space");
  nlr(twist, true);
  twist->callback([&] { cfg.command = Command::twist; });

  auto* split = app.add_subcommand("split-check", "Search for an invariant complement");
  split->add_option("--rep", cfg.rep, "N20 | N21 | SR")->required();
  nlr(split, false);
  split->callback([&] { cfg.command = Command::split_check; });

  auto* gen = app.add_subcommand("generic", "Three-variable family over Z[q, s, t]");
  gen->add_option("--rep", cfg.rep, "N20 | N21")->required();
  gen->add_option("--n", cfg.n)->required();
  gen->add_option("--specialize", specialize, "Evaluate at the root of unity of order r");
  gen->add_option("--word", word);
  gen->callback([&] { cfg.command = Command::generic; });

  auto* hecke = app.add_subcommand("hecke", "Cubic relation checks");
  hecke->add_option("--check", cfg.check, "minpoly | order | quotient42")->required();
  hecke->add_option("--rep", cfg.rep, "N20 | N21 (inferred from n mod r when absent)");
  hecke->add_option("--n", cfg.n);
  hecke->add_option("--r", cfg.r);
  hecke->callback([&] { cfg.command = Command::hecke; });

  auto* all = app.add_subcommand("verify-all", "Run every property on a parameter grid");
  all->add_option("--max-n", cfg.max_n)->capture_default_str();
  all->add_option("--max-r", cfg.max_r)->capture_default_str();
  all->callback([&] { cfg.command = Command::verify_all; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (!word.empty() || mats->count("--word") || gen->count("--word")) cfg.word = word;
  if (gen->count("--specialize")) cfg.specialize = specialize;
  cfg.output = output;
  cfg.float_check = float_check;
  return rhorep::cli::run(cfg, std::cout);
}
