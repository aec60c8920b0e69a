#pragma once

#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

#include "hiddensat/formula.hpp"
#include "hiddensat/rng.hpp"

// Internal assignment/propagation engine shared by the Unit Clause heuristic
// and the DPLL solver.  Both algorithms are driven through the exact same
// assign/propagate code with the same RNG discipline, which is what makes
// "DPLL's first descent replays UC bit for bit" an identity rather than a
// coincidence.
//
// Per-clause state is (unassigned-literal count, agreeing-literal count
// among the unassigned, satisfied-literal count); a clause is active while
// no literal is satisfied.  All updates are O(occurrences of the assigned
// variable), with an extra O(k) walk when a clause leaves the active set,
// and everything is reversible for backtracking.

namespace hiddensat::detail {

// One performed assignment, in order; forced marks unit propagations.
struct StepRecord {
  int var = 0;
  bool value = false;
  bool forced = false;
  bool operator==(const StepRecord&) const = default;
};

class PropEngine {
 public:
  // `ref` selects the agreement gauge for the S_{len,agree} counters; null
  // means the all-true reference (agreement == positive polarity).
  // Requires a canonical formula (pairwise-distinct clause variables).
  PropEngine(const Formula& f, const Assignment* ref);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }

  bool conflict() const noexcept { return count(0, 0) > 0; }
  std::int64_t active_clauses() const noexcept { return active_count_; }
  int free_count() const noexcept { return static_cast<int>(free_vars_.size()); }

  bool assigned(int var) const noexcept { return values_[var] >= 0; }
  bool value_of(int var) const noexcept { return values_[var] == 1; }

  // Uniform free variable, then uniform sign: exactly two RNG draws.
  std::pair<int, bool> pick_free(Rng& rng) const {
    const int var = free_vars_[rng.below(free_vars_.size())];
    return {var, rng.coin()};
  }

  // Free variables in pool order (the order is an implementation detail;
  // callers draw indices uniformly or scan the whole pool).
  int free_var_at(std::size_t idx) const noexcept { return free_vars_[idx]; }

  // Sets a free variable; returns false iff this created an empty clause.
  bool assign(int var, bool value, bool forced);

  // Random-order unit propagation to fixpoint.  Returns false on conflict;
  // with keep_going, empty clauses are recorded in the counters but
  // propagation of the remaining units continues (density tracing).
  bool propagate(Rng& rng, bool keep_going = false);

  std::size_t trail_size() const noexcept { return trail_.size(); }
  // Unwinds assignments past `mark` and clears the pending-unit queue.
  void undo_to(std::size_t mark);

  // Number of active clauses with `len` unassigned literals, `agree` of
  // which agree with the reference.
  std::int64_t count(int len, int agree) const noexcept {
    return counts_[static_cast<std::size_t>(len) * (k_ + 1) + agree];
  }
  int unit_active() const noexcept;
  int peak_unit_active() const noexcept { return peak_unit_; }

  // Occurrences of each polarity of `var` among active clauses, counting
  // only unassigned literal positions (the majority branch rule's score).
  std::int64_t pos_occurrences(int var) const noexcept { return pos_occ_[var]; }
  std::int64_t neg_occurrences(int var) const noexcept { return neg_occ_[var]; }

  // When set, every successful assign() appends a StepRecord.
  void set_recorder(std::vector<StepRecord>* recorder) noexcept {
    recorder_ = recorder;
  }

  Assignment snapshot_assignment() const;  // unassigned variables read false

 private:
  void bucket_add(int len, int agree, int delta) noexcept {
    counts_[static_cast<std::size_t>(len) * (k_ + 1) + agree] += delta;
  }

  int n_ = 0;
  int k_ = 0;
  std::vector<std::int32_t> lits_;       // flattened clause literals
  std::vector<std::uint8_t> agrees_;     // per flattened literal
  std::vector<std::int32_t> occ_flat_;   // literal indices, grouped by var
  std::vector<std::int32_t> occ_start_;  // var -> range in occ_flat_

  std::vector<std::int16_t> len_;       // unassigned literals per clause
  std::vector<std::int16_t> agree_;     // agreeing unassigned literals
  std::vector<std::int16_t> num_true_;  // satisfied literals per clause
  std::vector<std::int8_t> values_;     // -1 free, 0 false, 1 true

  std::vector<std::int32_t> free_vars_;
  std::vector<std::int32_t> free_pos_;

  std::vector<std::int32_t> pending_;  // candidate unit clauses
  std::vector<std::uint8_t> in_pending_;

  std::vector<std::int64_t> counts_;  // (k+1) x (k+1) active-clause table
  std::int64_t active_count_ = 0;
  std::vector<std::int64_t> pos_occ_;
  std::vector<std::int64_t> neg_occ_;

  std::vector<std::int32_t> trail_;
  int peak_unit_ = 0;
  std::vector<StepRecord>* recorder_ = nullptr;
};

// Defined in uc.cpp; the assignment log of a full UC run (used by the
// first-descent comparison hook in dpll.cpp).
std::vector<StepRecord> uc_descent_log(const Formula& f, std::uint64_t seed);

}  // namespace hiddensat::detail
