#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "hiddensat/rng.hpp"
#include "hiddensat/solvers.hpp"

namespace hiddensat {

namespace {

// Flattened clause/occurrence tables plus the classic satisfied-literal
// counters; flips are O(occurrences of the flipped variable).
struct WalksatState {
  int n = 0;
  int k = 0;
  std::vector<std::int32_t> lits;       // clause-major, width k
  std::vector<std::int32_t> occ_flat;   // literal indices per (var, polarity)
  std::vector<std::int32_t> occ_start;  // 2*(var-1) + polarity -> range
  std::vector<std::uint8_t> value;      // 1-based
  std::vector<std::int32_t> num_true;   // per clause
  std::vector<std::int32_t> unsat;      // unsatisfied clause ids
  std::vector<std::int32_t> unsat_pos;  // clause id -> index in unsat, or -1

  explicit WalksatState(const Formula& f) : n(f.n), k(f.k) {
    lits.reserve(f.clauses.size() * k);
    for (const Clause& c : f.clauses)
      for (const Literal lit : c) lits.push_back(lit.code);

    occ_start.assign(2 * static_cast<std::size_t>(n) + 1, 0);
    auto slot = [&](std::int32_t code) {
      const int var = code < 0 ? -code : code;
      return 2 * (var - 1) + (code > 0 ? 1 : 0);
    };
    for (const std::int32_t code : lits) ++occ_start[slot(code) + 1];
    for (std::size_t i = 1; i < occ_start.size(); ++i)
      occ_start[i] += occ_start[i - 1];
    occ_flat.resize(lits.size());
    std::vector<std::int32_t> cursor(occ_start.begin(), occ_start.end() - 1);
    for (std::size_t j = 0; j < lits.size(); ++j)
      occ_flat[cursor[slot(lits[j])]++] = static_cast<std::int32_t>(j);

    value.assign(static_cast<std::size_t>(n) + 1, 0);
    num_true.assign(f.clauses.size(), 0);
    unsat_pos.assign(f.clauses.size(), -1);
  }

  // Occurrence range of the literal of `var` that is true under `val`.
  std::pair<std::int32_t, std::int32_t> true_occ_range(int var,
                                                       bool val) const {
    const std::size_t s = 2 * static_cast<std::size_t>(var - 1) + (val ? 1 : 0);
    return {occ_start[s], occ_start[s + 1]};
  }
  std::pair<std::int32_t, std::int32_t> false_occ_range(int var,
                                                        bool val) const {
    return true_occ_range(var, !val);
  }

  void unsat_add(std::int32_t c) {
    unsat_pos[c] = static_cast<std::int32_t>(unsat.size());
    unsat.push_back(c);
  }
  void unsat_remove(std::int32_t c) {
    const std::int32_t pos = unsat_pos[c];
    const std::int32_t last = unsat.back();
    unsat[pos] = last;
    unsat_pos[last] = pos;
    unsat.pop_back();
    unsat_pos[c] = -1;
  }

  void rebuild_counts() {
    for (auto& t : num_true) t = 0;
    for (std::size_t j = 0; j < lits.size(); ++j) {
      const std::int32_t code = lits[j];
      const int var = code < 0 ? -code : code;
      if ((code > 0) == (value[var] != 0))
        ++num_true[j / static_cast<std::size_t>(k)];
    }
    unsat.clear();
    for (auto& p : unsat_pos) p = -1;
    for (std::size_t c = 0; c < num_true.size(); ++c)
      if (num_true[c] == 0) unsat_add(static_cast<std::int32_t>(c));
  }

  // Clauses this flip would newly unsatisfy: active occurrences of the
  // currently-true literal of var that have no other satisfied literal.
  int break_count(int var) const {
    const auto [lo, hi] = true_occ_range(var, value[var] != 0);
    int breaks = 0;
    for (std::int32_t idx = lo; idx < hi; ++idx)
      if (num_true[occ_flat[idx] / k] == 1) ++breaks;
    return breaks;
  }

  void flip(int var) {
    const bool old_val = value[var] != 0;
    const auto [tlo, thi] = true_occ_range(var, old_val);
    for (std::int32_t idx = tlo; idx < thi; ++idx) {
      const std::int32_t c = occ_flat[idx] / k;
      if (--num_true[c] == 0) unsat_add(c);
    }
    const auto [flo, fhi] = false_occ_range(var, old_val);
    for (std::int32_t idx = flo; idx < fhi; ++idx) {
      const std::int32_t c = occ_flat[idx] / k;
      if (num_true[c]++ == 0) unsat_remove(c);
    }
    value[var] = old_val ? 0 : 1;
  }

  Assignment to_assignment() const {
    Assignment a(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v)
      if (value[v]) a.set(static_cast<std::size_t>(v) - 1, true);
    return a;
  }
};

}  // namespace

SolveResult walksat_solve(const Formula& f, const WalksatParams& params) {
  if (f.k < 2 && !f.clauses.empty())
    throw std::domain_error("walksat_solve: requires clause width >= 2");
  if (!f.canonical)
    throw std::invalid_argument("walksat_solve: non-canonical formula");
  if (!(params.greedy_probability >= 0.0 && params.greedy_probability <= 1.0))
    throw std::invalid_argument("walksat_solve: greedy_probability in [0,1]");
  if (params.init == WalksatParams::Init::biased) {
    if (!params.bias_target ||
        params.bias_target->size() != static_cast<std::size_t>(f.n))
      throw std::invalid_argument("walksat_solve: biased init needs a target");
    if (!(params.bias_agreement >= 0.0 && params.bias_agreement <= 1.0))
      throw std::invalid_argument("walksat_solve: bias_agreement in [0,1]");
  }

  Rng rng(params.seed);
  SolveResult result;
  result.wall_seed = params.seed;

  WalksatState st(f);
  for (int v = 1; v <= st.n; ++v) {
    bool bit;
    if (params.init == WalksatParams::Init::uniform_random) {
      bit = rng.coin();
    } else {
      const bool target = (*params.bias_target)[static_cast<std::size_t>(v) - 1];
      bit = rng.uniform01() < params.bias_agreement ? target : !target;
    }
    st.value[v] = bit ? 1 : 0;
  }
  st.rebuild_counts();

  std::vector<int> ties;
  std::uint64_t flips = 0;
  while (!st.unsat.empty()) {
    if (flips >= params.max_flips) {
      result.status = SolveStatus::budget_exhausted;
      result.work = flips;
      return result;
    }
    const std::int32_t c = st.unsat[rng.below(st.unsat.size())];
    const std::int32_t base = c * st.k;

    int var;
    if (rng.uniform01() < 1.0 - params.greedy_probability) {
      const std::int32_t code = st.lits[base + rng.below(st.k)];
      var = code < 0 ? -code : code;
    } else {
      int best = INT32_MAX;
      ties.clear();
      for (int t = 0; t < st.k; ++t) {
        const std::int32_t code = st.lits[base + t];
        const int v = code < 0 ? -code : code;
        const int b = st.break_count(v);
        if (b < best) {
          best = b;
          ties.clear();
          ties.push_back(v);
        } else if (b == best) {
          ties.push_back(v);
        }
      }
      var = ties.size() == 1 ? ties[0] : ties[rng.below(ties.size())];
    }

    st.flip(var);
    ++flips;

    if (params.audit && flips % 10000 == 0) {
      const std::size_t live = st.unsat.size();
      WalksatState check = st;
      check.rebuild_counts();
      if (check.unsat.size() != live)
        throw std::logic_error("walksat_solve: unsat-set audit failed");
    }
  }

  result.status = SolveStatus::sat;
  result.model = st.to_assignment();
  result.work = flips;
  return result;
}

}  // namespace hiddensat
