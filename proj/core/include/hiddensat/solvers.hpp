#pragma once

#include <cstdint>
#include <optional>

#include "hiddensat/formula.hpp"

// In-repo solvers for the hardness-ordering experiments: WalkSAT with a
// configurable initial state, and a myopic DPLL (unit propagation only, no
// pure-literal rule, no learning) with three first-branch rules.  Work is
// counted in flips (WalkSAT) or decision nodes (DPLL) so runs are comparable
// across machines.

namespace hiddensat {

enum class SolveStatus { sat, unsat, budget_exhausted };

struct SolveResult {
  SolveStatus status = SolveStatus::budget_exhausted;
  std::optional<Assignment> model;  // present iff status == sat
  std::uint64_t work = 0;           // flips or branchings
  std::uint64_t wall_seed = 0;      // seed echo
};

struct WalksatParams {
  enum class Init { uniform_random, biased };

  std::uint64_t max_flips = 100'000'000;
  // Each step: greedy (min break-count, ties uniform) with this
  // probability, otherwise a uniformly random variable of the clause.
  double greedy_probability = 0.5;
  Init init = Init::uniform_random;
  // Biased init agrees with bias_target independently per bit with
  // probability bias_agreement (expected, not exact, overlap).
  std::optional<Assignment> bias_target;
  double bias_agreement = 0.75;
  std::uint64_t seed = 0;
  // Test mode: recompute the unsatisfied-clause set from scratch every 10^4
  // flips and fail loudly on divergence.
  bool audit = false;
};

// No restarts; stops at the first model or at max_flips.  status is never
// unsat.  Requires k >= 2.
SolveResult walksat_solve(const Formula& f, const WalksatParams& params);

enum class BranchRule { random_first, fixed_false_first, majority_first };

struct DpllParams {
  BranchRule branch_rule = BranchRule::random_first;
  std::uint64_t branching_budget = UINT64_MAX;
  std::uint64_t seed = 0;
};

// Complete backtracking search (within budget): exhaustive unit propagation
// at every node, then a two-way split per branch_rule:
//   random_first:      uniform free variable, uniform first value
//   fixed_false_first: uniform free variable, first value false
//   majority_first:    free variable with max occurrences in residual
//                      clauses (ties uniform), first value = its majority
//                      polarity (ties false)
// work counts decision nodes; the budget ends the search with
// budget_exhausted.  A sat model completes unset variables as false.
SolveResult dpll_solve(const Formula& f, const DpllParams& params);

// Verifies that the first descent of random_first DPLL (up to its first
// conflict, or to success) performs exactly the assignment sequence of a UC
// run with the same seed.  Identical-by-construction: both drive the shared
// propagation engine with the same draw discipline.
bool first_descent_equals_uc(const Formula& f, std::uint64_t seed);

}  // namespace hiddensat
