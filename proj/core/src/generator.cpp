#include "hiddensat/generator.hpp"

#include <algorithm>
#include <stdexcept>

#include "hiddensat/rng.hpp"

namespace hiddensat {

namespace {

// Stream tags so the reference assignment and each clause draw their
// randomness from disjoint substreams of the master seed.
constexpr std::uint64_t kAssignmentStream = 0;
constexpr std::uint64_t kClauseStream = 1;

void validate(const GeneratorSpec& spec) {
  if (spec.k < 2) throw std::invalid_argument("generator: k must be >= 2");
  if (spec.k > spec.n) throw std::invalid_argument("generator: k > n");
  if (spec.m < 0) throw std::invalid_argument("generator: m < 0");
  if (spec.k > 62)
    throw std::invalid_argument("generator: k too large for pattern sampling");
}

// Floyd's algorithm: uniform k-subset of {1..n} in O(k) draws.
void sample_variable_set(Rng& rng, int n, int k, std::vector<int>& out) {
  out.clear();
  for (int j = n - k + 1; j <= n; ++j) {
    const int t = static_cast<int>(rng.below(static_cast<std::uint64_t>(j))) + 1;
    if (std::find(out.begin(), out.end(), t) == out.end())
      out.push_back(t);
    else
      out.push_back(j);
  }
  std::sort(out.begin(), out.end());
}

}  // namespace

std::uint64_t admissible_pattern_count(int k, HiddenMode mode) {
  if (k < 1 || k > 62)
    throw std::domain_error("admissible_pattern_count: k out of range");
  const std::uint64_t all = std::uint64_t{1} << k;
  switch (mode) {
    case HiddenMode::zero:
      return all;
    case HiddenMode::one:
      return all - 1;
    case HiddenMode::two:
      if (k < 2)
        throw std::domain_error(
            "admissible_pattern_count: mode=two requires k >= 2");
      return all - 2;
  }
  throw std::domain_error("admissible_pattern_count: bad mode");
}

bool clause_admissible(const Clause& c, const Assignment& A, HiddenMode mode) {
  switch (mode) {
    case HiddenMode::zero:
      return true;
    case HiddenMode::one:
      return evaluate_clause(c, A);
    case HiddenMode::two: {
      // Satisfied by A and by its complement: at least one literal agrees
      // with A and at least one disagrees.
      bool agree = false, disagree = false;
      for (const Literal lit : c) {
        const bool lit_true = A[static_cast<std::size_t>(lit.variable()) - 1] ==
                              lit.positive();
        (lit_true ? agree : disagree) = true;
      }
      return agree && disagree;
    }
  }
  throw std::domain_error("clause_admissible: bad mode");
}

HiddenInstance sample_instance(const GeneratorSpec& spec) {
  validate(spec);

  HiddenInstance inst;
  inst.spec = spec;
  inst.formula.n = spec.n;
  inst.formula.k = spec.k;
  inst.formula.clauses.reserve(static_cast<std::size_t>(spec.m));

  // Reference assignment A.  Mode zero plants nothing but still uses the
  // all-ones reference internally so pattern bits always mean "literal
  // agrees with the reference" (for zero that reduces to "positive").
  Assignment A(static_cast<std::size_t>(spec.n), true);
  if (spec.mode != HiddenMode::zero) {
    Rng rng(derive_seed(spec.seed, kAssignmentStream));
    for (int i = 0; i < spec.n; ++i) A.set(static_cast<std::size_t>(i), rng.coin());
    inst.hidden.push_back(A);
    if (spec.mode == HiddenMode::two) inst.hidden.push_back(A.complement());
  }

  const std::uint64_t patterns = admissible_pattern_count(spec.k, spec.mode);
  std::vector<int> vars;
  vars.reserve(static_cast<std::size_t>(spec.k));
  for (int i = 0; i < spec.m; ++i) {
    Rng rng(derive_seed(spec.seed, kClauseStream, static_cast<std::uint64_t>(i)));
    sample_variable_set(rng, spec.n, spec.k, vars);
    // Admissible patterns: one -> at least one agreeing literal (skip
    // pattern 0); two -> at least one agreeing and one disagreeing (skip 0
    // and all-ones); zero -> all 2^k patterns.
    std::uint64_t pattern = rng.below(patterns);
    if (spec.mode != HiddenMode::zero) pattern += 1;
    Clause c;
    c.reserve(vars.size());
    for (std::size_t t = 0; t < vars.size(); ++t) {
      const bool agrees = ((pattern >> t) & 1) != 0;
      const bool ref = A[static_cast<std::size_t>(vars[t]) - 1];
      c.emplace_back(vars[t], agrees == ref);
    }
    inst.formula.clauses.push_back(std::move(c));
  }

  GenerationMeta meta;
  meta.mode = spec.mode;
  meta.seed = spec.seed;
  meta.hidden = inst.hidden;
  inst.formula.meta = std::move(meta);
  return inst;
}

std::vector<double> initial_density_profile(double r, HiddenMode mode, int k) {
  if (k < 2 || k > 62)
    throw std::invalid_argument("initial_density_profile: k out of range");
  if (r < 0.0)
    throw std::invalid_argument("initial_density_profile: r < 0");
  const double patterns =
      static_cast<double>(admissible_pattern_count(k, mode));
  std::vector<double> profile(static_cast<std::size_t>(k) + 1, 0.0);
  // C(k,j) admissible patterns have j agreeing literals, except that mode
  // one forbids j=0 and mode two forbids j=0 and j=k.
  double binom = 1.0;  // C(k,0)
  for (int j = 0; j <= k; ++j) {
    const bool forbidden =
        (mode != HiddenMode::zero && j == 0) ||
        (mode == HiddenMode::two && j == k);
    if (!forbidden) profile[static_cast<std::size_t>(j)] = r * binom / patterns;
    binom = binom * (k - j) / (j + 1);
  }
  return profile;
}

}  // namespace hiddensat
