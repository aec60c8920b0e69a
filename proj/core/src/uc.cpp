#include "hiddensat/uc.hpp"

#include <cmath>
#include <stdexcept>

#include "hiddensat/generator.hpp"
#include "hiddensat/rng.hpp"
#include "hiddensat/stats.hpp"
#include "prop_engine.hpp"

namespace hiddensat {

namespace {

constexpr std::uint64_t kInstanceStream = 0;
constexpr std::uint64_t kRunStream = 1;

const Assignment* ref_or_null(const std::optional<Assignment>& hidden_A) {
  return hidden_A ? &*hidden_A : nullptr;
}

void require_3sat(const Formula& f, const char* who) {
  if (f.k != 3 && !(f.k == 0 && f.clauses.empty()))
    throw std::domain_error(std::string(who) + ": requires a 3-SAT formula");
}

// A clause-free formula may carry k = 0; give it the width the engine
// tables expect.
Formula widen_empty(const Formula& f) {
  Formula g = f;
  g.k = 3;
  return g;
}

}  // namespace

UcOutcome uc_run(const Formula& f, const std::optional<Assignment>& hidden_A,
                 std::uint64_t seed) {
  require_3sat(f, "uc_run");
  if (f.k == 0) return uc_run(widen_empty(f), hidden_A, seed);
  detail::PropEngine engine(f, ref_or_null(hidden_A));
  Rng rng(seed);

  UcOutcome out;
  while (engine.free_count() > 0) {
    ++out.steps;
    const auto [var, value] = engine.pick_free(rng);
    if (!engine.assign(var, value, false) || !engine.propagate(rng)) {
      out.failure_step = out.steps;
      break;
    }
  }
  out.success = !out.failure_step.has_value();
  out.assignment = engine.snapshot_assignment();
  out.peak_unit_queue = engine.peak_unit_active();
  return out;
}

namespace detail {

std::vector<StepRecord> uc_descent_log(const Formula& f, std::uint64_t seed) {
  PropEngine engine(f, nullptr);
  Rng rng(seed);
  std::vector<StepRecord> log;
  engine.set_recorder(&log);
  while (engine.free_count() > 0) {
    const auto [var, value] = engine.pick_free(rng);
    if (!engine.assign(var, value, false) || !engine.propagate(rng)) break;
  }
  return log;
}

}  // namespace detail

DensityTrace empirical_density_trace(const Formula& f,
                                     const std::optional<Assignment>& hidden_A,
                                     std::uint64_t seed,
                                     std::int64_t sample_every) {
  require_3sat(f, "empirical_density_trace");
  if (f.k == 0) return empirical_density_trace(widen_empty(f), hidden_A, seed, sample_every);
  if (sample_every < 1)
    throw std::invalid_argument("empirical_density_trace: sample_every >= 1");

  detail::PropEngine engine(f, ref_or_null(hidden_A));
  Rng rng(seed);

  DensityTrace trace;
  trace.n = f.n;
  auto snapshot = [&] {
    DensityTrace::Sample s;
    s.variables_set = static_cast<std::int64_t>(engine.trail_size());
    for (int j = 0; j < 4; ++j) s.s3[j] = engine.count(3, j);
    for (int j = 0; j < 3; ++j) s.s2[j] = engine.count(2, j);
    trace.samples.push_back(s);
  };

  snapshot();
  std::int64_t next_sample = sample_every;
  while (engine.free_count() > 0) {
    const auto [var, value] = engine.pick_free(rng);
    // An empty clause just drops out of the counts; the trace keeps going.
    engine.assign(var, value, false);
    engine.propagate(rng, /*keep_going=*/true);
    while (static_cast<std::int64_t>(engine.trail_size()) >= next_sample) {
      // Propagation may overshoot several sampling points in one cascade;
      // the counts at those points are no longer observable, so sampling
      // records the first state at or past each point.
      snapshot();
      next_sample += sample_every;
    }
  }
  if (trace.samples.back().variables_set !=
      static_cast<std::int64_t>(engine.trail_size()))
    snapshot();
  return trace;
}

bool uc_trial(int n, HiddenMode mode, double r, std::uint64_t master_seed,
              std::uint64_t point_index, std::uint64_t trial_index) {
  GeneratorSpec spec;
  spec.n = n;
  spec.k = 3;
  spec.m = static_cast<int>(std::llround(r * n));
  spec.mode = mode;
  spec.seed = derive_seed(master_seed, point_index, trial_index, kInstanceStream);
  const HiddenInstance inst = sample_instance(spec);
  const std::uint64_t run_seed =
      derive_seed(master_seed, point_index, trial_index, kRunStream);
  return uc_run(inst.formula, std::nullopt, run_seed).success;
}

std::vector<SuccessPoint> uc_success_rate(const UcSweepSpec& spec) {
  if (spec.trials < 1)
    throw std::invalid_argument("uc_success_rate: trials >= 1");

  std::vector<SuccessPoint> points;
  points.reserve(spec.r_values.size());
  for (std::size_t pi = 0; pi < spec.r_values.size(); ++pi) {
    const double r = spec.r_values[pi];
    SuccessPoint pt;
    pt.r = r;
    pt.trials = spec.trials;
    for (int t = 0; t < spec.trials; ++t)
      pt.successes += uc_trial(spec.n, spec.mode, r, spec.master_seed,
                               static_cast<std::uint64_t>(pi),
                               static_cast<std::uint64_t>(t))
                          ? 1
                          : 0;
    pt.rate = static_cast<double>(pt.successes) / spec.trials;
    const auto [lo, hi] = stats::wilson_interval(pt.successes, pt.trials);
    pt.ci_low = lo;
    pt.ci_high = hi;
    points.push_back(pt);
  }
  return points;
}

}  // namespace hiddensat
