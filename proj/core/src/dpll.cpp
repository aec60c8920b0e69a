#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hiddensat/rng.hpp"
#include "hiddensat/solvers.hpp"
#include "prop_engine.hpp"

namespace hiddensat {

namespace {

Formula widen_empty(const Formula& f) {
  Formula g = f;
  g.k = 3;
  return g;
}

std::pair<int, bool> choose_branch(const detail::PropEngine& eng, Rng& rng,
                                   BranchRule rule) {
  switch (rule) {
    case BranchRule::random_first:
      return eng.pick_free(rng);
    case BranchRule::fixed_false_first: {
      const int var = eng.free_var_at(
          rng.below(static_cast<std::uint64_t>(eng.free_count())));
      return {var, false};
    }
    case BranchRule::majority_first: {
      // Highest total occurrence count over the residual clauses; at a
      // decision point some free variable still occurs, so best ends > 0.
      std::int64_t best = -1;
      std::vector<int> ties;
      for (int i = 0; i < eng.free_count(); ++i) {
        const int v = eng.free_var_at(static_cast<std::size_t>(i));
        const std::int64_t score =
            eng.pos_occurrences(v) + eng.neg_occurrences(v);
        if (score > best) {
          best = score;
          ties.clear();
          ties.push_back(v);
        } else if (score == best) {
          ties.push_back(v);
        }
      }
      const int var = ties.size() == 1 ? ties[0] : ties[rng.below(ties.size())];
      return {var, eng.pos_occurrences(var) > eng.neg_occurrences(var)};
    }
  }
  throw std::logic_error("choose_branch: unreachable");
}

struct Frame {
  std::size_t mark = 0;  // trail size before the decision assignment
  int var = 0;
  bool first_value = false;
  bool tried_second = false;
};

// Iterative backtracking search over the shared propagation engine.  The
// budget is the number of two-way splits the search may perform; a proof
// that finishes using exactly the budget still reports its real verdict.
// With stop_after_first_descent, the search returns at the first conflict
// (or at success) without backtracking — the first-descent test hook.
SolveStatus search(detail::PropEngine& eng, Rng& rng, const DpllParams& params,
                   std::uint64_t& work, bool stop_after_first_descent) {
  bool ok = eng.propagate(rng);
  std::vector<Frame> stack;
  for (;;) {
    if (ok) {
      if (eng.active_clauses() == 0) return SolveStatus::sat;
      if (work >= params.branching_budget) return SolveStatus::budget_exhausted;
      ++work;
      const auto [var, value] = choose_branch(eng, rng, params.branch_rule);
      stack.push_back({eng.trail_size(), var, value, false});
      ok = eng.assign(var, value, false) && eng.propagate(rng);
      continue;
    }
    if (stop_after_first_descent) return SolveStatus::budget_exhausted;
    while (!stack.empty() && stack.back().tried_second) stack.pop_back();
    if (stack.empty()) return SolveStatus::unsat;
    Frame& frame = stack.back();
    frame.tried_second = true;
    eng.undo_to(frame.mark);
    ok = eng.assign(frame.var, !frame.first_value, false) && eng.propagate(rng);
  }
}

}  // namespace

SolveResult dpll_solve(const Formula& f, const DpllParams& params) {
  if (f.k == 0 && f.clauses.empty())
    return dpll_solve(widen_empty(f), params);

  detail::PropEngine engine(f, nullptr);
  Rng rng(params.seed);

  SolveResult result;
  result.wall_seed = params.seed;
  result.status = search(engine, rng, params, result.work,
                         /*stop_after_first_descent=*/false);
  if (result.status == SolveStatus::sat)
    result.model = engine.snapshot_assignment();
  return result;
}

bool first_descent_equals_uc(const Formula& f, std::uint64_t seed) {
  const Formula g =
      (f.k == 0 && f.clauses.empty()) ? widen_empty(f) : f;

  const std::vector<detail::StepRecord> uc_log = detail::uc_descent_log(g, seed);

  detail::PropEngine engine(g, nullptr);
  Rng rng(seed);
  std::vector<detail::StepRecord> dpll_log;
  engine.set_recorder(&dpll_log);
  DpllParams params;  // random_first; the budget never binds on one descent
  std::uint64_t work = 0;
  search(engine, rng, params, work, /*stop_after_first_descent=*/true);

  // The descent ends at success once no clauses remain, while the
  // assignment heuristic keeps setting the leftover free variables, so the
  // descent log is a prefix of the full run's log.
  if (dpll_log.size() > uc_log.size()) return false;
  return std::equal(dpll_log.begin(), dpll_log.end(), uc_log.begin());
}

}  // namespace hiddensat
