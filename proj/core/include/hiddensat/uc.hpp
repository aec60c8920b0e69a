#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hiddensat/formula.hpp"

// The Unit Clause heuristic on concrete 3-SAT formulas: rounds of one free
// step (uniform unset variable, uniform truth value) followed by exhaustive
// unit propagation picking uniformly among current unit clauses; a run fails
// the moment an empty clause appears.  Alongside plain runs this module
// collects success statistics over sampled instances and exact clause-count
// traces for validating the mean-field trajectory.

namespace hiddensat {

struct UcOutcome {
  bool success = false;
  // On success, the satisfying assignment; on failure, the partial state
  // with unassigned variables reading false.
  Assignment assignment;
  std::uint64_t steps = 0;  // rounds executed
  std::optional<std::uint64_t> failure_step;
  int peak_unit_queue = 0;  // max simultaneous unit clauses
};

// Runs UC on f (requires f.k == 3; throws std::domain_error otherwise).
// hidden_A fixes the agreement gauge used by density traces and the peak
// statistics; pass std::nullopt to classify by positive-literal count.
UcOutcome uc_run(const Formula& f, const std::optional<Assignment>& hidden_A,
                 std::uint64_t seed);

struct DensityTrace {
  int n = 0;
  struct Sample {
    std::int64_t variables_set = 0;
    std::array<std::int64_t, 4> s3{};  // surviving 3-clauses by agreement
    std::array<std::int64_t, 3> s2{};  // surviving 2-clauses by agreement
  };
  std::vector<Sample> samples;
};

// Exact surviving-clause counts sampled every `sample_every` assignments
// (plus the initial and final states).  For tracing purposes the run
// continues past contradictions — an empty clause is simply discarded — so
// the trace always covers the full range of x; this matches the mean-field
// process, which tracks clause densities irrespective of rare local
// conflicts.
DensityTrace empirical_density_trace(const Formula& f,
                                     const std::optional<Assignment>& hidden_A,
                                     std::uint64_t seed,
                                     std::int64_t sample_every);

struct UcSweepSpec {
  int n = 0;
  HiddenMode mode = HiddenMode::zero;
  std::vector<double> r_values;
  int trials = 0;
  std::uint64_t master_seed = 0;
};

struct SuccessPoint {
  double r = 0.0;
  int trials = 0;
  int successes = 0;
  double rate = 0.0;
  double ci_low = 0.0;   // 95% Wilson interval
  double ci_high = 0.0;
};

// Fresh instance (m = round(r*n)) and fresh run per trial, with seeds
// derived from (master_seed, point index, trial index); deterministic and
// schedule-independent.
std::vector<SuccessPoint> uc_success_rate(const UcSweepSpec& spec);

// Runs one sweep cell; exposed so callers can parallelize over trials while
// keeping the exact seed derivation (point/trial indices as in
// uc_success_rate).
bool uc_trial(int n, HiddenMode mode, double r, std::uint64_t master_seed,
              std::uint64_t point_index, std::uint64_t trial_index);

}  // namespace hiddensat
