#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

// Small order-statistics and interval helpers shared by the sweep drivers
// and the test suites.

namespace hiddensat::stats {

// Median with the usual midpoint convention for even counts.
template <class T>
double median(std::vector<T> values) {
  if (values.empty()) throw std::invalid_argument("median of empty set");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return static_cast<double>(values[n / 2]);
  return 0.5 * (static_cast<double>(values[n / 2 - 1]) +
                static_cast<double>(values[n / 2]));
}

// Linear-interpolation quantile, q in [0,1].
template <class T>
double quantile(std::vector<T> values, double q) {
  if (values.empty()) throw std::invalid_argument("quantile of empty set");
  if (!(q >= 0.0 && q <= 1.0))
    throw std::invalid_argument("quantile: q outside [0,1]");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return (1.0 - frac) * static_cast<double>(values[lo]) +
         frac * static_cast<double>(values[hi]);
}

// 95% (by default) Wilson score interval for a binomial proportion.
inline std::pair<double, double> wilson_interval(int successes, int trials,
                                                 double z = 1.959963984540054) {
  if (trials <= 0) throw std::invalid_argument("wilson_interval: trials <= 0");
  const double nn = trials;
  const double p = successes / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2.0 * nn)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

// Survival function of the chi-square distribution (upper regularized
// incomplete gamma Q(df/2, x/2)), for goodness-of-fit tests.  Series
// expansion below the shape parameter, Lentz continued fraction above.
inline double chi_square_sf(double x, int df) {
  if (x < 0.0 || df <= 0) throw std::invalid_argument("chi_square_sf args");
  if (x == 0.0) return 1.0;
  const double a = 0.5 * df;
  const double xx = 0.5 * x;
  const double log_prefix = a * std::log(xx) - xx - std::lgamma(a);

  if (xx < a + 1.0) {
    // P(a,x) by series, return 1 - P.
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < 500; ++n) {
      term *= xx / (a + n);
      sum += term;
      if (term < sum * 1e-16) break;
    }
    return 1.0 - std::exp(log_prefix) * sum;
  }
  // Q(a,x) by continued fraction (modified Lentz).
  constexpr double tiny = 1e-300;
  double b = xx + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(log_prefix) * h;
}

}  // namespace hiddensat::stats
