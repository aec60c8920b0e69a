#include "commands.hpp"
#include "hiddensat/moment.hpp"
#include "util.hpp"

namespace hstool {

int run_curves(const CurvesConfig& cfg) {
  using namespace hiddensat;

  if (cfg.grid < 2)
    throw std::invalid_argument("curves: need at least 2 grid points");
  if (cfg.r_grid.empty())
    throw std::invalid_argument("curves: --r-grid is required");

  const std::filesystem::path dir(cfg.out);
  ensure_dir(dir);

  ordered_json files = ordered_json::array();
  for (const double r : cfg.r_grid) {
    std::string csv = "alpha,log_f,log_g,log_zero_hidden\n";
    for (int i = 0; i < cfg.grid; ++i) {
      const double alpha = static_cast<double>(i) / (cfg.grid - 1);
      csv_row(csv, {num(alpha), num(moment::one_hidden_log_curve(cfg.k, r, alpha)),
                    num(moment::two_hidden_log_curve(cfg.k, r, alpha)),
                    num(moment::zero_hidden_log_curve(cfg.k, r, alpha))});
    }
    const std::string name = fmt::format("curves_k{}_r{}.csv", cfg.k, num(r));
    write_file(dir / name, csv);

    ordered_json entry;
    entry["file"] = name;
    entry["r"] = r;
    entry["fingerprint"] = fingerprint_hex(csv);
    files.push_back(std::move(entry));
  }

  ordered_json config;
  config["k"] = cfg.k;
  config["r_grid"] = cfg.r_grid;
  config["grid"] = cfg.grid;
  ManifestIo manifest{dir / "curves_manifest.json", config, "curves"};
  manifest.save(files, utc_timestamp());
  fmt::print("wrote {} curve file(s) to {}\n", cfg.r_grid.size(), dir.string());
  return 0;
}

int run_thresholds(const ThresholdsConfig& cfg) {
  using namespace hiddensat;

  const std::filesystem::path dir(cfg.out);
  ensure_dir(dir);

  std::string csv = "k,r_star,upper_bound,epsilon_k\n";
  for (const int k : cfg.k_list) {
    // Past k = 10 a fixed absolute tolerance is meaningless against a
    // threshold near 2^k ln 2; loosen it with the magnitude.
    const double tol = k <= 10 ? 1e-5 : 5e-2;
    const moment::ThresholdResult th = moment::dominance_threshold(k, tol);
    csv_row(csv, {fmt::format("{}", k), num(th.r_star),
                  num(moment::asymptotic_upper_bound(k)),
                  num(moment::epsilon_gap_from(k, th.r_star))});
  }
  write_file(dir / "thresholds.csv", csv);

  ordered_json config;
  config["k_list"] = cfg.k_list;
  ordered_json files = ordered_json::array();
  files.push_back({{"file", "thresholds.csv"}, {"fingerprint", fingerprint_hex(csv)}});
  ManifestIo manifest{dir / "thresholds_manifest.json", config, "thresholds"};
  manifest.save(files, utc_timestamp());
  fmt::print("wrote thresholds.csv ({} rows) to {}\n", cfg.k_list.size(),
             dir.string());
  return 0;
}

}  // namespace hstool
