#include <cstdio>
#include <exception>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

void add_out(CLI::App* cmd, std::string& out) {
  cmd->add_option("--out", out, "output directory")->capture_default_str();
}

void add_parallel(CLI::App* cmd, int& parallel) {
  cmd->add_option("--parallel", parallel,
                  "worker threads (results are schedule-independent)")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Random 3-SAT instances with 0, 1, or 2 planted assignments: "
      "generators, first-moment curves, unit-clause analysis, and solver "
      "sweeps"};
  app.require_subcommand(1);

  hstool::GenerateConfig gen;
  {
    auto* cmd = app.add_subcommand(
        "generate", "write DIMACS instance files plus a seed manifest");
    cmd->add_option("--mode", gen.mode, "planted assignments: 0, 1, or 2")
        ->required()
        ->check(CLI::Range(0, 2));
    cmd->add_option("--n", gen.n, "variables")->required();
    cmd->add_option("--r", gen.r, "clause density m/n")->required();
    cmd->add_option("--k", gen.k, "clause width")->capture_default_str();
    cmd->add_option("--count", gen.count, "instances to write")
        ->capture_default_str();
    cmd->add_option("--seed", gen.seed, "master seed")->capture_default_str();
    cmd->add_option("--prefix", gen.prefix, "file name prefix")
        ->capture_default_str();
    cmd->add_flag("--reveal-hidden", gen.reveal_hidden,
                  "embed planted assignments as CNF comments");
    add_out(cmd, gen.out);
  }

  hstool::CurvesConfig curves;
  {
    auto* cmd = app.add_subcommand(
        "curves", "log expected-solution-count curves over the overlap");
    cmd->add_option("--k", curves.k, "clause width")->capture_default_str();
    cmd->add_option("--r-grid", curves.r_grid, "densities, one CSV per value")
        ->required();
    cmd->add_option("--grid", curves.grid, "alpha samples on [0,1]")
        ->capture_default_str();
    add_out(cmd, curves.out);
  }

  hstool::ThresholdsConfig thresholds;
  {
    auto* cmd = app.add_subcommand(
        "thresholds",
        "symmetric-dominance thresholds and asymptotic bounds per k");
    cmd->add_option("--k-list", thresholds.k_list, "clause widths")
        ->capture_default_str();
    add_out(cmd, thresholds.out);
  }

  hstool::OdeConfig ode;
  {
    auto* cmd = app.add_subcommand(
        "ode", "integrate the unit-clause mean-field trajectories");
    cmd->add_option("--mode", ode.modes, "planted modes to run")
        ->capture_default_str();
    cmd->add_option("--r-grid", ode.r_grid, "densities to integrate");
    cmd->add_option("--step", ode.h, "RK4 step in x")->capture_default_str();
    cmd->add_option("--stride", ode.stride, "CSV keeps every stride-th step")
        ->capture_default_str();
    cmd->add_flag("--critical", ode.critical,
                  "also bisect the critical density per mode");
    add_out(cmd, ode.out);
  }

  hstool::TraceConfig trace;
  {
    auto* cmd = app.add_subcommand(
        "trace", "empirical clause-density trace of one unit-clause run");
    cmd->add_option("--mode", trace.mode, "planted assignments: 0, 1, or 2")
        ->required()
        ->check(CLI::Range(0, 2));
    cmd->add_option("--n", trace.n, "variables")->capture_default_str();
    cmd->add_option("--r", trace.r, "clause density")->capture_default_str();
    cmd->add_option("--seed", trace.seed, "master seed")->capture_default_str();
    cmd->add_option("--points", trace.points, "target sample count")
        ->capture_default_str();
    add_out(cmd, trace.out);
  }

  hstool::UcSweepConfig uc;
  {
    auto* cmd = app.add_subcommand(
        "uc-sweep", "unit-clause success rates over a density grid");
    cmd->add_option("--mode", uc.modes, "planted modes to run")
        ->capture_default_str();
    cmd->add_option("--n", uc.n, "variables")->capture_default_str();
    cmd->add_option("--r-grid", uc.r_grid, "density grid")->required();
    cmd->add_option("--trials", uc.trials, "trials per (mode, r) point")
        ->capture_default_str();
    cmd->add_option("--seed", uc.seed, "master seed")->capture_default_str();
    add_parallel(cmd, uc.parallel);
    add_out(cmd, uc.out);
  }

  hstool::SolverSweepConfig solver;
  {
    auto* cmd = app.add_subcommand(
        "solver-sweep", "WalkSAT or DPLL medians over instances per mode");
    cmd->add_option("--solver", solver.solver, "walksat or dpll")
        ->capture_default_str();
    cmd->add_option("--mode", solver.modes, "planted modes to run")
        ->capture_default_str();
    cmd->add_option("--n", solver.n, "variables")->required();
    cmd->add_option("--r-grid", solver.r_grid, "density grid")->required();
    cmd->add_option("--trials", solver.trials, "instances per (mode, r)")
        ->capture_default_str();
    cmd->add_option("--budget", solver.budget,
                    "work cap (flips or branchings); 0 = solver default");
    cmd->add_option("--init", solver.init, "walksat start: random or biased")
        ->capture_default_str();
    cmd->add_option("--bias-agreement", solver.bias_agreement,
                    "per-bit agreement of the biased start")
        ->capture_default_str();
    cmd->add_option("--greedy-prob", solver.greedy_probability,
                    "walksat greedy-step probability")
        ->capture_default_str();
    cmd->add_option("--rule", solver.rule,
                    "dpll first branch: random_first, fixed_false_first, "
                    "majority_first")
        ->capture_default_str();
    cmd->add_option("--seed", solver.seed, "master seed")
        ->capture_default_str();
    add_parallel(cmd, solver.parallel);
    add_out(cmd, solver.out);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("generate")) return hstool::run_generate(gen);
    if (app.got_subcommand("curves")) return hstool::run_curves(curves);
    if (app.got_subcommand("thresholds"))
      return hstool::run_thresholds(thresholds);
    if (app.got_subcommand("ode")) return hstool::run_ode(ode);
    if (app.got_subcommand("trace")) return hstool::run_trace(trace);
    if (app.got_subcommand("uc-sweep")) return hstool::run_uc_sweep(uc);
    if (app.got_subcommand("solver-sweep"))
      return hstool::run_solver_sweep(solver);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
