#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "hiddensat/formula.hpp"
#include "hiddensat/stats.hpp"

// Shared helpers for the unit suites: terse formula construction and the
// couple of classical statistical tests used to check sampler distributions.

namespace testutil {

inline hiddensat::Clause clause(std::initializer_list<int> lits) {
  hiddensat::Clause c;
  for (int code : lits) c.push_back({code < 0 ? -code : code, code > 0});
  return c;
}

inline hiddensat::Formula formula(int n, int k,
                                  std::initializer_list<std::initializer_list<int>> cls) {
  hiddensat::Formula f;
  f.n = n;
  f.k = k;
  for (const auto& c : cls) f.clauses.push_back(clause(c));
  return f;
}

inline hiddensat::Assignment assignment(std::string_view bits) {
  return hiddensat::Assignment::from_string(bits);
}

// Goodness-of-fit p-value of observed counts against given cell
// probabilities (df = cells - 1).
inline double chi_square_gof_p(const std::vector<std::int64_t>& observed,
                               const std::vector<double>& probs) {
  const double total = std::accumulate(observed.begin(), observed.end(), 0.0);
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expected = total * probs[i];
    const double d = observed[i] - expected;
    stat += d * d / expected;
  }
  return hiddensat::stats::chi_square_sf(stat, static_cast<int>(observed.size()) - 1);
}

// Two-sample chi-square homogeneity test over matching cells
// (df = cells - 1).
inline double chi_square_two_sample_p(const std::vector<std::int64_t>& a,
                                      const std::vector<std::int64_t>& b) {
  const double na = std::accumulate(a.begin(), a.end(), 0.0);
  const double nb = std::accumulate(b.begin(), b.end(), 0.0);
  double stat = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double pooled = (a[i] + b[i]) / (na + nb);
    if (pooled == 0.0) continue;
    const double ea = na * pooled, eb = nb * pooled;
    stat += (a[i] - ea) * (a[i] - ea) / ea + (b[i] - eb) * (b[i] - eb) / eb;
  }
  return hiddensat::stats::chi_square_sf(stat, static_cast<int>(a.size()) - 1);
}

// Wilcoxon rank-sum z-statistic (normal approximation, midranks and tie
// correction); |z| small means the two samples look identically distributed.
inline double rank_sum_z(std::vector<double> xs, std::vector<double> ys) {
  struct Tagged {
    double v;
    int sample;
  };
  std::vector<Tagged> all;
  for (double v : xs) all.push_back({v, 0});
  for (double v : ys) all.push_back({v, 1});
  std::sort(all.begin(), all.end(),
            [](const Tagged& a, const Tagged& b) { return a.v < b.v; });
  const std::size_t n = all.size();
  std::vector<double> rank(n);
  double tie_sq_sum = 0.0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && all[j].v == all[i].v) ++j;
    const double mid = 0.5 * ((i + 1) + j);  // average of ranks i+1..j
    for (std::size_t t = i; t < j; ++t) rank[t] = mid;
    for (std::size_t t = i; t < j; ++t) tie_sq_sum += mid * mid;
    i = j;
  }
  const double n1 = static_cast<double>(xs.size());
  const double n2 = static_cast<double>(ys.size());
  double r1 = 0.0;
  double rank_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (all[i].sample == 0) r1 += rank[i];
    rank_sq += rank[i] * rank[i];
  }
  (void)tie_sq_sum;
  const double nn = n1 + n2;
  const double mean = n1 * (nn + 1.0) / 2.0;
  // Tie-corrected variance: n1*n2/(nn*(nn-1)) * (sum r_i^2 - nn*(nn+1)^2/4).
  const double var =
      n1 * n2 / (nn * (nn - 1.0)) * (rank_sq - nn * (nn + 1.0) * (nn + 1.0) / 4.0);
  if (var <= 0.0) return 0.0;  // all values identical
  return (r1 - mean) / std::sqrt(var);
}

}  // namespace testutil
