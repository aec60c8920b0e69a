#include "prop_engine.hpp"

#include <stdexcept>

namespace hiddensat::detail {

PropEngine::PropEngine(const Formula& f, const Assignment* ref) {
  if (!f.canonical)
    throw std::invalid_argument(
        "PropEngine: formula has repeated variables within a clause");
  if (f.k < 1) throw std::invalid_argument("PropEngine: empty clause width");
  if (ref && ref->size() != static_cast<std::size_t>(f.n))
    throw std::invalid_argument("PropEngine: reference length mismatch");

  n_ = f.n;
  k_ = f.k;
  const std::size_t m = f.clauses.size();

  lits_.reserve(m * k_);
  agrees_.reserve(m * k_);
  for (const Clause& c : f.clauses) {
    if (static_cast<int>(c.size()) != k_)
      throw std::invalid_argument("PropEngine: non-uniform clause width");
    for (const Literal lit : c) {
      lits_.push_back(lit.code);
      const bool ref_bit =
          ref ? (*ref)[static_cast<std::size_t>(lit.variable()) - 1] : true;
      agrees_.push_back(lit.positive() == ref_bit ? 1 : 0);
    }
  }

  // Occurrence lists in CSR form, grouped by variable.
  occ_start_.assign(static_cast<std::size_t>(n_) + 2, 0);
  for (const std::int32_t code : lits_)
    ++occ_start_[static_cast<std::size_t>(code < 0 ? -code : code) + 1];
  for (std::size_t v = 1; v < occ_start_.size(); ++v)
    occ_start_[v] += occ_start_[v - 1];
  occ_flat_.resize(lits_.size());
  {
    std::vector<std::int32_t> cursor(occ_start_.begin(), occ_start_.end() - 1);
    for (std::size_t j = 0; j < lits_.size(); ++j) {
      const std::int32_t code = lits_[j];
      const int var = code < 0 ? -code : code;
      occ_flat_[cursor[var]++] = static_cast<std::int32_t>(j);
    }
  }

  len_.assign(m, static_cast<std::int16_t>(k_));
  agree_.assign(m, 0);
  num_true_.assign(m, 0);
  counts_.assign(static_cast<std::size_t>(k_ + 1) * (k_ + 1), 0);
  for (std::size_t c = 0; c < m; ++c) {
    int agree = 0;
    for (int t = 0; t < k_; ++t) agree += agrees_[c * k_ + t];
    agree_[c] = static_cast<std::int16_t>(agree);
    bucket_add(k_, agree, 1);
  }
  active_count_ = static_cast<std::int64_t>(m);

  values_.assign(static_cast<std::size_t>(n_) + 1, -1);
  free_vars_.resize(static_cast<std::size_t>(n_));
  free_pos_.assign(static_cast<std::size_t>(n_) + 1, -1);
  for (int v = 1; v <= n_; ++v) {
    free_vars_[static_cast<std::size_t>(v) - 1] = v;
    free_pos_[v] = v - 1;
  }

  pos_occ_.assign(static_cast<std::size_t>(n_) + 1, 0);
  neg_occ_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (const std::int32_t code : lits_) {
    if (code > 0)
      ++pos_occ_[code];
    else
      ++neg_occ_[-code];
  }

  in_pending_.assign(m, 0);
  for (std::size_t c = 0; c < m; ++c) {
    if (len_[c] == 1) {
      pending_.push_back(static_cast<std::int32_t>(c));
      in_pending_[c] = 1;
    }
  }
  peak_unit_ = unit_active();
}

int PropEngine::unit_active() const noexcept {
  std::int64_t total = 0;
  for (int j = 0; j <= k_; ++j) total += count(1, j);
  return static_cast<int>(total);
}

bool PropEngine::assign(int var, bool value, bool forced) {
  assert(values_[var] < 0);
  values_[var] = value ? 1 : 0;

  // Remove from the free pool (swap with the last entry).
  const std::int32_t pos = free_pos_[var];
  const std::int32_t last = free_vars_.back();
  free_vars_[pos] = last;
  free_pos_[last] = pos;
  free_vars_.pop_back();
  free_pos_[var] = -1;

  trail_.push_back(var);
  if (recorder_) recorder_->push_back({var, value, forced});

  bool ok = true;
  for (std::int32_t idx = occ_start_[var]; idx < occ_start_[var + 1]; ++idx) {
    const std::int32_t j = occ_flat_[idx];
    const std::int32_t c = j / k_;
    const std::int32_t code = lits_[j];
    const bool lit_true = (code > 0) == value;
    const int a = agrees_[j];
    const bool was_active = num_true_[c] == 0;

    if (was_active) {
      bucket_add(len_[c], agree_[c], -1);
      (code > 0 ? pos_occ_ : neg_occ_)[var] -= 1;
    }
    len_[c] -= 1;
    agree_[c] = static_cast<std::int16_t>(agree_[c] - a);

    if (lit_true) {
      num_true_[c] += 1;
      if (was_active) {
        // The clause leaves the residual formula; its other unassigned
        // literals stop counting toward occurrence scores.
        --active_count_;
        for (std::int32_t t = c * k_; t < (c + 1) * k_; ++t) {
          const std::int32_t code2 = lits_[t];
          const int v2 = code2 < 0 ? -code2 : code2;
          if (v2 != var && values_[v2] < 0)
            (code2 > 0 ? pos_occ_ : neg_occ_)[v2] -= 1;
        }
      }
    } else if (was_active) {
      bucket_add(len_[c], agree_[c], 1);
      if (len_[c] == 1 && !in_pending_[c]) {
        pending_.push_back(c);
        in_pending_[c] = 1;
      }
      if (len_[c] == 0) ok = false;  // empty clause
    }
  }

  const int units = unit_active();
  if (units > peak_unit_) peak_unit_ = units;
  return ok;
}

bool PropEngine::propagate(Rng& rng, bool keep_going) {
  while (!pending_.empty()) {
    const std::uint64_t i = rng.below(pending_.size());
    const std::int32_t c = pending_[i];
    pending_[i] = pending_.back();
    pending_.pop_back();
    in_pending_[c] = 0;
    if (num_true_[c] != 0 || len_[c] != 1) continue;  // stale entry

    // Find the lone unassigned literal and satisfy it.
    std::int32_t code = 0;
    for (std::int32_t t = c * k_; t < (c + 1) * k_; ++t) {
      const std::int32_t cand = lits_[t];
      const int v = cand < 0 ? -cand : cand;
      if (values_[v] < 0) {
        code = cand;
        break;
      }
    }
    assert(code != 0);
    const int var = code < 0 ? -code : code;
    if (!assign(var, code > 0, true) && !keep_going) return false;
  }
  return keep_going || !conflict();
}

void PropEngine::undo_to(std::size_t mark) {
  for (const std::int32_t c : pending_) in_pending_[c] = 0;
  pending_.clear();

  while (trail_.size() > mark) {
    const int var = trail_.back();
    trail_.pop_back();
    const bool value = values_[var] == 1;
    values_[var] = -1;
    free_pos_[var] = static_cast<std::int32_t>(free_vars_.size());
    free_vars_.push_back(var);

    for (std::int32_t idx = occ_start_[var]; idx < occ_start_[var + 1];
         ++idx) {
      const std::int32_t j = occ_flat_[idx];
      const std::int32_t c = j / k_;
      const std::int32_t code = lits_[j];
      const bool lit_true = (code > 0) == value;
      const int a = agrees_[j];

      len_[c] += 1;
      agree_[c] = static_cast<std::int16_t>(agree_[c] + a);
      if (lit_true) {
        num_true_[c] -= 1;
        if (num_true_[c] == 0) {
          // Clause re-enters the residual formula.
          ++active_count_;
          bucket_add(len_[c], agree_[c], 1);
          for (std::int32_t t = c * k_; t < (c + 1) * k_; ++t) {
            const std::int32_t code2 = lits_[t];
            const int v2 = code2 < 0 ? -code2 : code2;
            if (values_[v2] < 0) (code2 > 0 ? pos_occ_ : neg_occ_)[v2] += 1;
          }
        }
      } else if (num_true_[c] == 0) {
        bucket_add(len_[c] - 1, agree_[c] - a, -1);
        bucket_add(len_[c], agree_[c], 1);
        (code > 0 ? pos_occ_ : neg_occ_)[var] += 1;
      }
    }
  }
}

Assignment PropEngine::snapshot_assignment() const {
  Assignment a(static_cast<std::size_t>(n_));
  for (int v = 1; v <= n_; ++v)
    if (values_[v] == 1) a.set(static_cast<std::size_t>(v) - 1, true);
  return a;
}

}  // namespace hiddensat::detail
