#include "hiddensat/moment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hiddensat/errors.hpp"

namespace hiddensat::moment {

namespace {

constexpr double kLn2 = std::numbers::ln2;

double entropy(double alpha) {
  // Natural-log binary entropy with the 0*ln 0 = 0 endpoint convention.
  if (alpha <= 0.0 || alpha >= 1.0) return 0.0;
  return -alpha * std::log(alpha) - (1.0 - alpha) * std::log1p(-alpha);
}

double pow_int(double x, int k) {
  double acc = 1.0;
  for (int i = 0; i < k; ++i) acc *= x;
  return acc;
}

void check_curve_args(int k, double r, double alpha) {
  if (k < 2) throw std::invalid_argument("curve: k must be >= 2");
  if (r < 0.0) throw std::invalid_argument("curve: r must be >= 0");
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("curve: alpha must lie in [0,1]");
}

}  // namespace

double one_hidden_log_curve(int k, double r, double alpha) {
  check_curve_args(k, r, alpha);
  const double denom = std::exp2(k) - 1.0;
  const double q = (1.0 - pow_int(alpha, k)) / denom;
  return entropy(alpha) + r * std::log1p(-q);
}

double two_hidden_log_curve(int k, double r, double alpha) {
  check_curve_args(k, r, alpha);
  const double denom = std::exp2(k) - 2.0;
  const double q =
      (1.0 - pow_int(alpha, k) - pow_int(1.0 - alpha, k)) / denom;
  return entropy(alpha) + r * std::log1p(-q);
}

double zero_hidden_log_curve(int k, double r, double alpha) {
  check_curve_args(k, r, alpha);
  return entropy(alpha) + r * std::log1p(-std::exp2(-k));
}

double log_curve(CurveKind kind, int k, double r, double alpha) {
  switch (kind) {
    case CurveKind::one_hidden:
      return one_hidden_log_curve(k, r, alpha);
    case CurveKind::two_hidden:
      return two_hidden_log_curve(k, r, alpha);
    case CurveKind::zero_hidden:
      return zero_hidden_log_curve(k, r, alpha);
  }
  throw std::invalid_argument("log_curve: bad curve kind");
}

namespace {

// Golden-section maximization on [lo, hi]; the curve is unimodal within the
// basin the grid search hands us.
ArgmaxResult golden_refine(CurveKind kind, int k, double r, double lo,
                           double hi, double tol) {
  constexpr double invphi = 0.618033988749894848;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = log_curve(kind, k, r, c);
  double fd = log_curve(kind, k, r, d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = log_curve(kind, k, r, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = log_curve(kind, k, r, d);
    }
  }
  const double mid = 0.5 * (a + b);
  return {mid, log_curve(kind, k, r, mid)};
}

}  // namespace

ArgmaxResult argmax_alpha(CurveKind kind, int k, double r, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("argmax_alpha: tol must be > 0");

  // Candidate grid: uniform (odd count, so alpha = 1/2 is a grid point)
  // plus geometric ladders at both endpoints down to 1e-13 — the competing
  // maximum of the 2-hidden curve sits within O(2^-k ln 2^k) of alpha = 1.
  std::vector<double> grid;
  constexpr int kUniform = 20001;
  grid.reserve(kUniform + 2 * 180 + 2);
  for (int i = 0; i < kUniform; ++i)
    grid.push_back(static_cast<double>(i) / (kUniform - 1));
  constexpr double kGeoStart = 1e-13;
  constexpr double kGeoStop = 2e-2;
  constexpr double kGeoStep = 1.1646;  // ~180 points per endpoint
  for (double d = kGeoStart; d < kGeoStop; d *= kGeoStep) {
    grid.push_back(d);
    grid.push_back(1.0 - d);
  }
  std::sort(grid.begin(), grid.end());

  std::size_t best = 0;
  double best_val = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = log_curve(kind, k, r, grid[i]);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }

  const double lo = best > 0 ? grid[best - 1] : grid[best];
  const double hi = best + 1 < grid.size() ? grid[best + 1] : grid[best];
  ArgmaxResult res = hi > lo ? golden_refine(kind, k, r, lo, hi, tol)
                             : ArgmaxResult{grid[best], best_val};
  if (best_val > res.log_value) res = {grid[best], best_val};

  // Symmetric curves have mirror maximizers; report the one >= 1/2.
  const double mirror = 1.0 - res.alpha;
  if (mirror > res.alpha) {
    const double mv = log_curve(kind, k, r, mirror);
    if (std::abs(mv - res.log_value) <=
        1e-12 * std::max(1.0, std::abs(res.log_value)))
      res = {mirror, mv};
  }
  return res;
}

double asymptotic_upper_bound(int k) {
  if (k < 2) throw std::invalid_argument("asymptotic_upper_bound: k >= 2");
  return std::exp2(k) * kLn2 - 0.5 * kLn2 - 0.5;
}

ThresholdResult dominance_threshold(int k, double tol) {
  if (k < 3 || k > 20)
    throw std::invalid_argument("dominance_threshold: supported k is 3..20");
  if (tol <= 0.0)
    throw std::invalid_argument("dominance_threshold: tol must be > 0");

  ThresholdResult result;
  result.k = k;

  // Dominated(r): the refined global maximum does not exceed the value at
  // alpha = 1/2 beyond floating tolerance.
  auto probe = [&](double r) {
    const ArgmaxResult am = argmax_alpha(CurveKind::two_hidden, k, r);
    const double center = two_hidden_log_curve(k, r, 0.5);
    result.certificate.emplace_back(r, am.alpha);
    const double margin = am.log_value - center;
    return margin <= 1e-12 * std::max(1.0, std::abs(center));
  };

  double lo = 1.0;
  double hi = asymptotic_upper_bound(k);
  if (!probe(lo) || probe(hi)) {
    std::vector<std::pair<double, double>> probes;
    for (const auto& [r, alpha] : result.certificate)
      probes.emplace_back(r, alpha);
    throw BracketError(
        "dominance_threshold: bracket [1, upper bound] does not straddle the "
        "transition",
        std::move(probes));
  }

  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (probe(mid) ? lo : hi) = mid;
  }

  result.r_star = 0.5 * (lo + hi);
  result.alpha_star_below =
      argmax_alpha(CurveKind::two_hidden, k, lo).alpha;
  return result;
}

double epsilon_gap_from(int k, double r_star) {
  return (std::exp2(k) * kLn2 - 0.5 * kLn2 - 1.0) - r_star;
}

double epsilon_gap(int k, double tol) {
  return epsilon_gap_from(k, dominance_threshold(k, tol).r_star);
}

namespace {

double log_choose(int n, int z) {
  return std::lgamma(n + 1.0) - std::lgamma(z + 1.0) - std::lgamma(n - z + 1.0);
}

// C(z,k)/C(n,k) as a stable product; 0 when z < k.
double subset_ratio(int z, int n, int k) {
  if (z < k) return 0.0;
  double acc = 1.0;
  for (int i = 0; i < k; ++i)
    acc *= static_cast<double>(z - i) / static_cast<double>(n - i);
  return acc;
}

double violation_probability(int z, int n, int k, HiddenMode mode,
                             VariableModel model) {
  switch (mode) {
    case HiddenMode::zero:
      return std::exp2(-k);
    case HiddenMode::one: {
      const double hit = model == VariableModel::distinct
                             ? subset_ratio(z, n, k)
                             : pow_int(static_cast<double>(z) / n, k);
      return (1.0 - hit) / (std::exp2(k) - 1.0);
    }
    case HiddenMode::two: {
      const double hit_a = model == VariableModel::distinct
                               ? subset_ratio(z, n, k)
                               : pow_int(static_cast<double>(z) / n, k);
      const double hit_b =
          model == VariableModel::distinct
              ? subset_ratio(n - z, n, k)
              : pow_int(static_cast<double>(n - z) / n, k);
      return (1.0 - hit_a - hit_b) / (std::exp2(k) - 2.0);
    }
  }
  throw std::invalid_argument("violation_probability: bad mode");
}

}  // namespace

double exact_expected_count(int n, int k, int m, HiddenMode mode,
                            VariableModel model) {
  if (n < k) throw std::invalid_argument("exact_expected_count: n < k");
  if (m < 0) throw std::invalid_argument("exact_expected_count: m < 0");

  // z counts variables on which an assignment agrees with the reference.
  // Mode zero has no reference; the z-sum still totals 2^n.
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(n) + 1);
  for (int z = 0; z <= n; ++z) {
    const double p = violation_probability(z, n, k, mode, model);
    terms.push_back(log_choose(n, z) +
                    (m == 0 ? 0.0 : m * std::log1p(-p)));
  }
  const double peak = *std::max_element(terms.begin(), terms.end());
  double sum = 0.0;
  for (const double t : terms) sum += std::exp(t - peak);
  return peak + std::log(sum);
}

}  // namespace hiddensat::moment
