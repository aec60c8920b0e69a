#include <benchmark/benchmark.h>

#include <optional>

#include "hiddensat/generator.hpp"
#include "hiddensat/moment.hpp"
#include "hiddensat/ode.hpp"
#include "hiddensat/rng.hpp"
#include "hiddensat/solvers.hpp"
#include "hiddensat/uc.hpp"

using namespace hiddensat;

namespace {

void BM_SampleInstance(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto inst = sample_instance({.n = n, .k = 3, .m = 3 * n,
                                 .mode = HiddenMode::two, .seed = seed++});
    benchmark::DoNotOptimize(inst.formula.clauses.data());
  }
  state.SetItemsProcessed(state.iterations() * 3 * n);
}
BENCHMARK(BM_SampleInstance)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_UcRun(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto inst = sample_instance({.n = n, .k = 3, .m = 2 * n,
                               .mode = HiddenMode::zero, .seed = 11});
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto out = uc_run(inst.formula, std::nullopt, seed++);
    benchmark::DoNotOptimize(out.steps);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_UcRun)->Arg(10000)->Arg(100000);

void BM_WalksatFlips(benchmark::State& state) {
  auto inst = sample_instance({.n = 2000, .k = 3, .m = 8000,
                               .mode = HiddenMode::one, .seed = 21});
  WalksatParams p;
  p.max_flips = 200000;
  std::uint64_t seed = 1;
  std::uint64_t flips = 0;
  for (auto _ : state) {
    p.seed = seed++;
    auto res = walksat_solve(inst.formula, p);
    flips += res.work;
    benchmark::DoNotOptimize(res.status);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(flips));
}
BENCHMARK(BM_WalksatFlips);

void BM_DpllRefute(benchmark::State& state) {
  auto inst = sample_instance({.n = 120, .k = 3, .m = 1200,
                               .mode = HiddenMode::zero, .seed = 33});
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto res = dpll_solve(inst.formula,
                          {.branch_rule = BranchRule::fixed_false_first,
                           .seed = seed++});
    benchmark::DoNotOptimize(res.work);
  }
}
BENCHMARK(BM_DpllRefute);

void BM_ArgmaxAlpha(benchmark::State& state) {
  for (auto _ : state) {
    auto am = moment::argmax_alpha(moment::CurveKind::two_hidden, 5, 20.5);
    benchmark::DoNotOptimize(am.alpha);
  }
}
BENCHMARK(BM_ArgmaxAlpha);

void BM_DominanceThreshold(benchmark::State& state) {
  for (auto _ : state) {
    auto th = moment::dominance_threshold(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(th.r_star);
  }
}
BENCHMARK(BM_DominanceThreshold)->Arg(3)->Arg(10);

void BM_IntegrateUc(benchmark::State& state) {
  auto prof = initial_density_profile(2.0, HiddenMode::one);
  for (auto _ : state) {
    auto traj = ode::integrate_uc({prof[0], prof[1], prof[2], prof[3]});
    benchmark::DoNotOptimize(traj.max_lambda1);
  }
}
BENCHMARK(BM_IntegrateUc);

}  // namespace

BENCHMARK_MAIN();
