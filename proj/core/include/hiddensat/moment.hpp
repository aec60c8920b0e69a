#pragma once

#include <vector>

#include "hiddensat/formula.hpp"

// First-moment landscape of planted k-SAT: the expected number of satisfying
// assignments at overlap alpha with the planted assignment grows like
// exp(n * curve(alpha)), where curve is one of the log of
//
//   f(alpha) = H(alpha) + r*ln(1 - (1 - alpha^k) / (2^k - 1))        [1-hidden]
//   g(alpha) = H(alpha) + r*ln(1 - (1 - alpha^k - (1-alpha)^k) / (2^k - 2))
//                                                                    [2-hidden]
//   baseline = H(alpha) + r*ln(1 - 2^-k)                             [0-hidden]
//
// with H the natural-log binary entropy and the convention 0*ln 0 = 0.
// This header exposes the curves, their maximizers, the density threshold
// below which the 2-hidden landscape is dominated by its symmetric point
// alpha = 1/2, the companion asymptotic bounds, and exact finite-n expected
// solution counts for both clause models (distinct variables vs. literals
// drawn with replacement).

namespace hiddensat::moment {

enum class CurveKind { one_hidden, two_hidden, zero_hidden };

double one_hidden_log_curve(int k, double r, double alpha);
double two_hidden_log_curve(int k, double r, double alpha);
double zero_hidden_log_curve(int k, double r, double alpha);
double log_curve(CurveKind kind, int k, double r, double alpha);

struct ArgmaxResult {
  double alpha = 0.0;
  double log_value = 0.0;
};

// Global maximizer over [0,1] within +-tol in alpha: dense uniform grid
// (>= 10^4 points) plus geometric grids hugging both endpoints (the
// competing maximum near alpha = 1 is extremely narrow for large k), then
// golden-section refinement.  For symmetric curves, a tie between alpha*
// and 1 - alpha* reports the maximizer >= 1/2.
ArgmaxResult argmax_alpha(CurveKind kind, int k, double r, double tol = 1e-10);

struct ThresholdResult {
  int k = 0;
  double r_star = 0.0;
  // Maximizer of the 2-hidden curve just below r_star (always 1/2).
  double alpha_star_below = 0.5;
  // Bisection probes: (r, argmax alpha at r), recorded in probe order.
  std::vector<std::pair<double, double>> certificate;
};

// Largest r (within tol) such that sup_alpha g = g(1/2): bisection on r over
// [1, asymptotic_upper_bound(k)] with the inner maximization above.  Throws
// BracketError (with the probe log) if the bracket does not straddle the
// transition.  Supported k: 3..20.
ThresholdResult dominance_threshold(int k, double tol = 1e-5);

// 2^k ln 2 - (ln 2)/2 - 1/2: densities above this are unsatisfiable with
// probability 1 - o(1) in the 2-hidden ensemble.
double asymptotic_upper_bound(int k);

// (2^k ln 2 - (ln 2)/2 - 1) - dominance_threshold(k): the shortfall of the
// dominance threshold from its large-k asymptote.
double epsilon_gap(int k, double tol = 1e-5);
double epsilon_gap_from(int k, double r_star);

enum class VariableModel { distinct, with_replacement };

// log of E[number of satisfying assignments] for the finite ensemble with n
// variables and m clauses of width k: sum over overlap classes z of
// C(n,z) * (1 - p_viol(z))^m, evaluated in log-sum-exp form.
//
// distinct: clause variable sets are uniform k-subsets (the generator's
// model); p_viol uses subset counts, e.g. mode one:
//   p_viol(z) = (C(n,k) - C(z,k)) / (C(n,k) * (2^k - 1)).
// with_replacement: literal positions are i.i.d. uniform variables; p_viol
// uses (z/n)^k in place of the subset ratios.  Mode zero: p_viol = 2^-k.
double exact_expected_count(int n, int k, int m, HiddenMode mode,
                            VariableModel model);

}  // namespace hiddensat::moment
