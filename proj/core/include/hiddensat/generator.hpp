#pragma once

#include <cstdint>
#include <vector>

#include "hiddensat/formula.hpp"

// Samplers for random k-SAT instances with 0, 1, or 2 planted ("hidden")
// satisfying assignments, plus the induced initial clause-type densities
// consumed by the mean-field analysis.
//
// A 1-hidden instance keeps only clauses satisfied by a reference assignment
// A; a 2-hidden instance keeps clauses satisfied by both A and its
// complement.  Relative to A each clause is a variable set plus a sign
// pattern, and conditioning on the mode restricts the pattern to an
// admissible set (2^k, 2^k - 1, or 2^k - 2 patterns).  Patterns are sampled
// directly from the admissible set — no rejection loop — and clause draws
// use counter-derived seeds so generation is order-independent.

namespace hiddensat {

struct GeneratorSpec {
  int n = 0;
  int k = 0;
  int m = 0;
  HiddenMode mode = HiddenMode::zero;
  std::uint64_t seed = 0;
};

struct HiddenInstance {
  Formula formula;
  std::vector<Assignment> hidden;  // 0, 1, or 2 assignments
  GeneratorSpec spec;
};

// Number of sign patterns a clause may take relative to the hidden
// assignment: 2^k (zero), 2^k - 1 (one), 2^k - 2 (two).  Throws
// std::domain_error for mode=two with k < 2.
std::uint64_t admissible_pattern_count(int k, HiddenMode mode);

// zero: always true; one: c satisfied by A; two: c satisfied by A and by
// complement(A).
bool clause_admissible(const Clause& c, const Assignment& A, HiddenMode mode);

// Draws the instance determined by `spec`: A uniform on {0,1}^n (modes one
// and two; empty hidden list for zero), then m independent clauses, each a
// uniform k-subset of variables with a uniform admissible sign pattern.
// Bit-identical across runs and platforms for equal specs.
HiddenInstance sample_instance(const GeneratorSpec& spec);

// Initial density profile s_k[j] of k-clauses with j literals agreeing with
// A (canonical gauge), j = 0..k: s_k[j] = r * C(k,j) / admissible count,
// with forbidden j zeroed.  For the default k=3:
//   zero -> (r/8, 3r/8, 3r/8, r/8)
//   one  -> (0, 3r/7, 3r/7, r/7)
//   two  -> (0, r/2, r/2, 0)
std::vector<double> initial_density_profile(double r, HiddenMode mode,
                                            int k = 3);

}  // namespace hiddensat
