#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hstool {

// Config structs hold the resolved flag values of one subcommand; every run
// function validates, executes, and returns a process exit code.

struct GenerateConfig {
  int mode = 0;
  int n = 0;
  int k = 3;
  double r = 0.0;
  int count = 25;
  std::uint64_t seed = 0;
  std::string out = ".";
  std::string prefix = "instance";
  bool reveal_hidden = false;
};
int run_generate(const GenerateConfig& cfg);

struct CurvesConfig {
  int k = 3;
  std::vector<double> r_grid;
  int grid = 2001;  // number of alpha samples on [0, 1]
  std::string out = ".";
};
int run_curves(const CurvesConfig& cfg);

struct ThresholdsConfig {
  std::vector<int> k_list{3, 4, 5, 7, 10, 20};
  std::string out = ".";
};
int run_thresholds(const ThresholdsConfig& cfg);

struct OdeConfig {
  std::vector<int> modes{0, 1, 2};
  std::vector<double> r_grid;
  double h = 1e-4;
  int stride = 10;  // trajectory CSV keeps every stride-th sample
  bool critical = false;  // also bisect the critical density per mode
  std::string out = ".";
};
int run_ode(const OdeConfig& cfg);

struct TraceConfig {
  int mode = 0;
  int n = 100000;
  double r = 2.0;
  std::uint64_t seed = 0;
  int points = 1000;  // target number of samples over the run
  std::string out = ".";
};
int run_trace(const TraceConfig& cfg);

struct UcSweepConfig {
  std::vector<int> modes{0, 2};
  int n = 30000;
  std::vector<double> r_grid;
  int trials = 200;
  std::uint64_t seed = 0;
  int parallel = 1;
  std::string out = ".";
};
int run_uc_sweep(const UcSweepConfig& cfg);

struct SolverSweepConfig {
  std::string solver = "walksat";  // walksat | dpll
  std::vector<int> modes{0, 1, 2};
  int n = 0;
  std::vector<double> r_grid;
  int trials = 25;
  std::uint64_t budget = 0;  // 0 = solver default (walksat 10^8; dpll unlimited)
  // walksat variant
  std::string init = "random";  // random | biased
  double bias_agreement = 0.75;
  double greedy_probability = 0.5;
  // dpll variant
  std::string rule = "fixed_false_first";
  std::uint64_t seed = 0;
  int parallel = 1;
  std::string out = ".";
};
int run_solver_sweep(const SolverSweepConfig& cfg);

}  // namespace hstool
