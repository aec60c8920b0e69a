#include <algorithm>
#include <cmath>
#include <limits>

#include "commands.hpp"
#include "hiddensat/errors.hpp"
#include "hiddensat/generator.hpp"
#include "hiddensat/ode.hpp"
#include "hiddensat/rng.hpp"
#include "hiddensat/uc.hpp"
#include "util.hpp"

namespace hstool {

namespace {

const char* status_name(hiddensat::ode::TrajectoryStatus s) {
  switch (s) {
    case hiddensat::ode::TrajectoryStatus::completed: return "completed";
    case hiddensat::ode::TrajectoryStatus::supercritical: return "supercritical";
    case hiddensat::ode::TrajectoryStatus::exhausted: return "exhausted";
  }
  return "?";
}

std::string trajectory_csv(const hiddensat::ode::Trajectory& traj) {
  std::string csv = "x,s30,s31,s32,s33,s20,s21,s22,lambda1\n";
  for (const auto& s : traj.samples)
    csv_row(csv, {num(s.x), num(s.s3[0]), num(s.s3[1]), num(s.s3[2]),
                  num(s.s3[3]), num(s.s2[0]), num(s.s2[1]), num(s.s2[2]),
                  num(s.lambda1)});
  return csv;
}

}  // namespace

int run_ode(const OdeConfig& cfg) {
  using namespace hiddensat;

  if (cfg.r_grid.empty() && !cfg.critical)
    throw std::invalid_argument("ode: need --r-grid and/or --critical");
  if (cfg.stride < 1) throw std::invalid_argument("ode: stride >= 1");

  const std::filesystem::path dir(cfg.out);
  ensure_dir(dir);

  ode::IntegrateOptions opts;
  opts.h = cfg.h;
  opts.sample_stride = static_cast<std::size_t>(cfg.stride);

  ordered_json records = ordered_json::array();
  ordered_json summary_rows = ordered_json::array();
  for (const int mode_d : cfg.modes) {
    const HiddenMode mode = mode_from_digit(mode_d);
    for (const double r : cfg.r_grid) {
      const auto profile = initial_density_profile(r, mode);
      std::array<double, 4> s3{profile[0], profile[1], profile[2], profile[3]};
      const ode::Trajectory traj = ode::integrate_uc(s3, opts);

      const std::string name =
          fmt::format("trajectory_{}_r{}.csv", mode_d, num(r));
      const std::string csv = trajectory_csv(traj);
      write_file(dir / name, csv);

      ordered_json row;
      row["mode"] = mode_d;
      row["r"] = r;
      row["status"] = status_name(traj.status);
      row["max_lambda1"] = traj.max_lambda1;
      row["x_at_max_lambda1"] = traj.x_at_max_lambda1;
      row["file"] = name;
      row["fingerprint"] = fingerprint_hex(csv);
      summary_rows.push_back(row);
      records.push_back(std::move(row));
    }
    if (cfg.critical) {
      ordered_json row;
      row["mode"] = mode_d;
      row["critical_density"] = ode::critical_density(mode, 1e-5, opts);
      summary_rows.push_back(row);
      records.push_back(std::move(row));
    }
  }

  ordered_json config;
  config["modes"] = cfg.modes;
  config["r_grid"] = cfg.r_grid;
  config["h"] = cfg.h;
  config["stride"] = cfg.stride;
  config["critical"] = cfg.critical;

  ordered_json summary;
  summary["config"] = config;
  summary["rows"] = summary_rows;
  write_file(dir / "ode_summary.json", summary.dump(2) + "\n");

  ManifestIo manifest{dir / "ode_manifest.json", config, "ode"};
  manifest.save(records, utc_timestamp());
  fmt::print("wrote {} trajectory record(s) to {}\n", records.size(),
             dir.string());
  return 0;
}

int run_trace(const TraceConfig& cfg) {
  using namespace hiddensat;

  const HiddenMode mode = mode_from_digit(cfg.mode);
  if (cfg.n < 1 || cfg.r < 0.0 || cfg.points < 2)
    throw std::invalid_argument("trace: need n >= 1, r >= 0, points >= 2");

  const std::filesystem::path dir(cfg.out);
  ensure_dir(dir);

  GeneratorSpec spec;
  spec.n = cfg.n;
  spec.k = 3;
  spec.m = static_cast<int>(std::llround(cfg.r * cfg.n));
  spec.mode = mode;
  spec.seed = derive_seed(cfg.seed, 0);
  const HiddenInstance inst = sample_instance(spec);

  const std::optional<Assignment> ref =
      mode == HiddenMode::zero ? std::nullopt
                               : std::optional<Assignment>(inst.hidden.front());
  const std::int64_t every = std::max<std::int64_t>(1, cfg.n / cfg.points);
  const DensityTrace trace =
      empirical_density_trace(inst.formula, ref, derive_seed(cfg.seed, 1), every);

  std::string csv = "n,x,s30,s31,s32,s33,s20,s21,s22,lambda1\n";
  for (const auto& s : trace.samples) {
    ode::ClauseDensityState st;
    st.x = static_cast<double>(s.variables_set) / cfg.n;
    for (int j = 0; j < 4; ++j)
      st.s3[j] = static_cast<double>(s.s3[j]) / cfg.n;
    for (int j = 0; j < 3; ++j)
      st.s2[j] = static_cast<double>(s.s2[j]) / cfg.n;
    // The branching matrix is singular at x = 1; the final sample carries
    // no lambda1.
    const double lam =
        st.x < 1.0 ? ode::lambda1(st) : std::numeric_limits<double>::quiet_NaN();
    csv_row(csv, {fmt::format("{}", cfg.n), num(st.x), num(st.s3[0]),
                  num(st.s3[1]), num(st.s3[2]), num(st.s3[3]), num(st.s2[0]),
                  num(st.s2[1]), num(st.s2[2]), num(lam)});
  }

  const std::string name =
      fmt::format("trace_{}_n{}_r{}.csv", cfg.mode, cfg.n, num(cfg.r));
  write_file(dir / name, csv);
  fmt::print("wrote {} ({} samples)\n", (dir / name).string(),
             trace.samples.size());
  return 0;
}

}  // namespace hstool
