#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <optional>

#include "commands.hpp"
#include "hiddensat/generator.hpp"
#include "hiddensat/rng.hpp"
#include "hiddensat/solvers.hpp"
#include "hiddensat/stats.hpp"
#include "util.hpp"

namespace hstool {

namespace {

constexpr std::uint64_t kInstanceStream = 21;
constexpr std::uint64_t kRunStream = 22;

struct TrialRecord {
  std::string status;
  std::uint64_t work = 0;
  std::uint64_t run_seed = 0;
  std::string fingerprint;
};

const char* status_name(hiddensat::SolveStatus s) {
  switch (s) {
    case hiddensat::SolveStatus::sat: return "sat";
    case hiddensat::SolveStatus::unsat: return "unsat";
    case hiddensat::SolveStatus::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

hiddensat::BranchRule rule_from_name(const std::string& name) {
  if (name == "random_first") return hiddensat::BranchRule::random_first;
  if (name == "fixed_false_first")
    return hiddensat::BranchRule::fixed_false_first;
  if (name == "majority_first") return hiddensat::BranchRule::majority_first;
  throw std::invalid_argument("unknown dpll rule: " + name);
}

}  // namespace

int run_solver_sweep(const SolverSweepConfig& cfg) {
  using namespace hiddensat;

  if (cfg.r_grid.empty())
    throw std::invalid_argument("solver-sweep: --r-grid is required");
  if (cfg.n < 1 || cfg.trials < 1)
    throw std::invalid_argument("solver-sweep: need n >= 1, trials >= 1");
  if (cfg.solver != "walksat" && cfg.solver != "dpll")
    throw std::invalid_argument("solver-sweep: solver is walksat or dpll");
  const bool walksat = cfg.solver == "walksat";
  if (walksat && cfg.init != "random" && cfg.init != "biased")
    throw std::invalid_argument("solver-sweep: init is random or biased");
  if (!walksat) rule_from_name(cfg.rule);  // validate early
  std::vector<HiddenMode> modes;
  for (const int d : cfg.modes) {
    modes.push_back(mode_from_digit(d));
    if (walksat && cfg.init == "biased" && modes.back() == HiddenMode::zero)
      throw std::invalid_argument(
          "solver-sweep: biased init needs a hidden assignment; mode 0 has none");
  }
  const std::string variant = walksat ? cfg.init : cfg.rule;
  const std::uint64_t budget =
      cfg.budget ? cfg.budget : (walksat ? 100'000'000ull : UINT64_MAX);

  const std::filesystem::path dir(cfg.out);
  ensure_dir(dir);

  ordered_json config;
  config["solver"] = cfg.solver;
  config["variant"] = variant;
  config["modes"] = cfg.modes;
  config["n"] = cfg.n;
  config["r_grid"] = cfg.r_grid;
  config["trials"] = cfg.trials;
  config["budget"] = budget;
  if (walksat) {
    config["greedy_probability"] = cfg.greedy_probability;
    if (cfg.init == "biased") config["bias_agreement"] = cfg.bias_agreement;
  }
  config["seed"] = cfg.seed;
  ManifestIo manifest{dir / "solver_sweep_manifest.json", config,
                      "solver-sweep"};

  const std::size_t num_r = cfg.r_grid.size();
  const std::size_t total = modes.size() * num_r * cfg.trials;
  std::vector<std::optional<TrialRecord>> results(total);

  std::string created = utc_timestamp();
  if (const ordered_json prev = manifest.load_existing(); !prev.is_null()) {
    for (std::size_t li = 0; li < total; ++li) {
      const std::string key = fmt::format("{}", li);
      if (!prev.contains(key)) continue;
      const ordered_json& e = prev.at(key);
      results[li] = TrialRecord{e.at("status").get<std::string>(),
                                e.at("work").get<std::uint64_t>(),
                                e.at("run_seed").get<std::uint64_t>(),
                                e.at("fingerprint").get<std::string>()};
    }
  }

  std::mutex mutex;
  std::size_t since_save = 0;
  const std::size_t save_every = std::max<std::size_t>(1, total / 64);
  auto serialize = [&] {
    ordered_json records;
    for (std::size_t li = 0; li < total; ++li) {
      if (!results[li]) continue;
      const TrialRecord& rec = *results[li];
      records[fmt::format("{}", li)] = {{"status", rec.status},
                                        {"work", rec.work},
                                        {"run_seed", rec.run_seed},
                                        {"fingerprint", rec.fingerprint}};
    }
    return records;
  };

  std::vector<std::size_t> todo;
  for (std::size_t li = 0; li < total; ++li)
    if (!results[li]) todo.push_back(li);

  run_tasks(todo.size(), cfg.parallel, [&](std::size_t idx) {
    const std::size_t li = todo[idx];
    const std::size_t t = li % cfg.trials;
    const std::size_t ri = (li / cfg.trials) % num_r;
    const std::size_t mi = li / cfg.trials / num_r;
    const double r = cfg.r_grid[ri];
    // Seeds hang off (mode, r-bits, trial), not grid positions, so a cell's
    // stream is independent of how the sweep is arranged.
    const std::uint64_t r_bits = std::bit_cast<std::uint64_t>(r);
    const std::uint64_t mode_id = static_cast<std::uint64_t>(cfg.modes[mi]);

    TrialRecord rec;
    rec.run_seed = derive_seed(cfg.seed, kRunStream, mode_id, r_bits,
                               static_cast<std::uint64_t>(t));
    try {
      GeneratorSpec spec;
      spec.n = cfg.n;
      spec.k = 3;
      spec.m = static_cast<int>(std::llround(r * cfg.n));
      spec.mode = modes[mi];
      spec.seed = derive_seed(cfg.seed, kInstanceStream, mode_id, r_bits,
                              static_cast<std::uint64_t>(t));
      const HiddenInstance inst = sample_instance(spec);
      rec.fingerprint = fingerprint_hex(write_dimacs(inst.formula, false));

      SolveResult res;
      if (walksat) {
        WalksatParams wp;
        wp.max_flips = budget;
        wp.greedy_probability = cfg.greedy_probability;
        wp.seed = rec.run_seed;
        if (cfg.init == "biased") {
          wp.init = WalksatParams::Init::biased;
          wp.bias_target = inst.hidden.front();
          wp.bias_agreement = cfg.bias_agreement;
        }
        res = walksat_solve(inst.formula, wp);
      } else {
        DpllParams dp;
        dp.branch_rule = rule_from_name(cfg.rule);
        dp.branching_budget = budget;
        dp.seed = rec.run_seed;
        res = dpll_solve(inst.formula, dp);
      }
      rec.status = status_name(res.status);
      rec.work = res.work;
    } catch (const std::exception& e) {
      // A failed trial is a data point, not a reason to lose the sweep.
      rec.status = fmt::format("error:{}", e.what());
      rec.work = 0;
    }

    const std::lock_guard<std::mutex> lock(mutex);
    results[li] = std::move(rec);
    if (++since_save >= save_every) {
      since_save = 0;
      manifest.save(serialize(), created);
    }
  });
  manifest.save(serialize(), created);

  // Per-trial CSV.
  std::string trials_csv =
      "mode,n,r,seed,solver,variant,status,work,fingerprint\n";
  for (std::size_t mi = 0; mi < modes.size(); ++mi)
    for (std::size_t ri = 0; ri < num_r; ++ri)
      for (int t = 0; t < cfg.trials; ++t) {
        const TrialRecord& rec =
            *results[(mi * num_r + ri) * cfg.trials + t];
        csv_row(trials_csv,
                {fmt::format("{}", cfg.modes[mi]), fmt::format("{}", cfg.n),
                 num(cfg.r_grid[ri]), fmt::format("{}", rec.run_seed),
                 cfg.solver, variant, rec.status, fmt::format("{}", rec.work),
                 rec.fingerprint});
      }
  write_file(dir / "solver_trials.csv", trials_csv);

  // Aggregates: medians/quartiles of work with budget-exhausted runs kept
  // at their censored budget value, so an unfinished run counts as "at
  // least the budget" instead of being dropped.
  std::string agg_csv =
      "mode,n,r,solver,variant,trials,sat,unsat,exhausted,median_work,"
      "q1_work,q3_work,success_rate\n";
  ordered_json aggregates = ordered_json::array();
  std::vector<std::vector<double>> medians(modes.size(),
                                           std::vector<double>(num_r));
  for (std::size_t mi = 0; mi < modes.size(); ++mi)
    for (std::size_t ri = 0; ri < num_r; ++ri) {
      int sat = 0, unsat = 0, exhausted = 0;
      std::vector<double> work;
      for (int t = 0; t < cfg.trials; ++t) {
        const TrialRecord& rec =
            *results[(mi * num_r + ri) * cfg.trials + t];
        if (rec.status == "sat") ++sat;
        else if (rec.status == "unsat") ++unsat;
        else if (rec.status == "budget_exhausted") ++exhausted;
        else continue;  // error rows carry no work value
        work.push_back(static_cast<double>(rec.work));
      }
      const double med = work.empty() ? 0.0 : stats::median(work);
      const double q1 = work.empty() ? 0.0 : stats::quantile(work, 0.25);
      const double q3 = work.empty() ? 0.0 : stats::quantile(work, 0.75);
      const double success = static_cast<double>(sat) / cfg.trials;
      medians[mi][ri] = med;
      csv_row(agg_csv,
              {fmt::format("{}", cfg.modes[mi]), fmt::format("{}", cfg.n),
               num(cfg.r_grid[ri]), cfg.solver, variant,
               fmt::format("{}", cfg.trials), fmt::format("{}", sat),
               fmt::format("{}", unsat), fmt::format("{}", exhausted),
               num(med), num(q1), num(q3), num(success)});
      ordered_json row;
      row["mode"] = cfg.modes[mi];
      row["r"] = cfg.r_grid[ri];
      row["sat"] = sat;
      row["unsat"] = unsat;
      row["exhausted"] = exhausted;
      row["median_work"] = med;
      row["q1_work"] = q1;
      row["q3_work"] = q3;
      row["success_rate"] = success;
      aggregates.push_back(std::move(row));
    }
  write_file(dir / "solver_aggregate.csv", agg_csv);

  // Mode-vs-mode ordering verdicts per r, when the sweep covers the modes
  // involved.  Ratios use the hardness ordering's canonical direction.
  ordered_json verdicts = ordered_json::array();
  auto median_of = [&](int mode_digit, std::size_t ri) -> std::optional<double> {
    for (std::size_t mi = 0; mi < modes.size(); ++mi)
      if (cfg.modes[mi] == mode_digit) return medians[mi][ri];
    return std::nullopt;
  };
  for (std::size_t ri = 0; ri < num_r; ++ri) {
    ordered_json v;
    v["r"] = cfg.r_grid[ri];
    const auto m0 = median_of(0, ri), m1 = median_of(1, ri),
               m2 = median_of(2, ri);
    if (m1 && m2 && *m1 > 0) {
      const double ratio = *m2 / *m1;
      v["median_ratio_2_over_1"] = ratio;
      v["two_over_one_ge_5"] = ratio >= 5.0;
      v["two_over_one_le_3"] = ratio <= 3.0;
      v["one_le_tenth_of_two"] = *m1 <= *m2 / 10.0;
    }
    if (m0 && m2 && *m0 > 0) {
      const double ratio = *m2 / *m0;
      v["median_ratio_2_over_0"] = ratio;
      v["two_zero_within_2x"] = ratio >= 0.5 && ratio <= 2.0;
      v["two_ge_third_of_zero"] = *m2 >= *m0 / 3.0;
    }
    if (m0 && m1 && m2 && *m0 > 0 && *m1 > 0 && *m2 > 0) {
      const double lo = std::min({*m0, *m1, *m2});
      const double hi = std::max({*m0, *m1, *m2});
      v["median_spread"] = hi / lo;
      v["all_within_4x"] = hi <= 4.0 * lo;
    }
    if (v.size() > 1) verdicts.push_back(std::move(v));
  }

  ordered_json summary;
  summary["config"] = config;
  summary["aggregates"] = aggregates;
  summary["verdicts"] = verdicts;
  write_file(dir / "solver_sweep_summary.json", summary.dump(2) + "\n");
  fmt::print("solver-sweep: {} cells, {} trials total -> {}\n",
             modes.size() * num_r, total, dir.string());
  return 0;
}

}  // namespace hstool
