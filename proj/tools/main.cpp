#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "app/commands.hpp"

int main(int argc, char** argv) {
  CLI::App cli{"Minimax and parameter-free online linear optimization: games, sweeps and verification"};
  cli.require_subcommand(1);

  mmo::app::RunOptions run;
  run.jobs = mmo::app::default_jobs();
  std::string out_dir, format;
  std::uint64_t seed = 0;
  auto* run_cmd = cli.add_subcommand("run", "run an experiment sweep from a YAML spec");
  run_cmd->add_option("--spec", run.spec_path, "experiment file")->required();
  auto* out_opt = run_cmd->add_option("--out", out_dir, "output directory (overrides outputs.dir)");
  run_cmd->add_option("--jobs", run.jobs, "concurrent runs (default: MINIMAX_ONLINE_JOBS or core count)")
      ->check(CLI::PositiveNumber);
  auto* seed_opt = run_cmd->add_option("--seed", seed, "base seed (overrides game.seed)");
  auto* format_opt = run_cmd->add_option("--format", format, "trace format")->check(CLI::IsMember({"csv", "json"}));

  mmo::app::VerifyOptions verify;
  auto* verify_cmd = cli.add_subcommand("verify", "run lemma and theorem verification suites");
  verify_cmd->add_option("--lemma", verify.lemmas, "suite to run (repeatable)")
      ->check(CLI::IsMember(mmo::app::verify_suite_names()));
  verify_cmd->add_flag("--all", verify.all, "run every suite");
  verify_cmd->add_option("--regime", verify.regime, "one-round regime")
      ->check(CLI::IsMember({"orthogonal", "parallel", "all"}));

  mmo::app::CurvesOptions curves;
  std::string curves_out;
  auto* curves_cmd = cli.add_subcommand("curves", "emit regret-vs-envelope curves as tidy CSV");
  curves_cmd->add_option("--spec,trace_dir", curves.trace_dir, "run output directory holding runs.json")->required();
  auto* curves_out_opt = curves_cmd->add_option("--out", curves_out, "CSV path (stdout if absent)");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*run_cmd) {
    if (*out_opt) run.out_dir = out_dir;
    if (*seed_opt) run.seed = seed;
    if (*format_opt) run.format = format;
    return mmo::app::run_command(run, std::cout, std::cerr);
  }
  if (*verify_cmd) return mmo::app::verify_command(verify, std::cout, std::cerr);
  if (*curves_out_opt) curves.out = curves_out;
  return mmo::app::curves_command(curves, std::cout, std::cerr);
}
