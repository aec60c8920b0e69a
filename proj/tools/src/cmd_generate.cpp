#include <cmath>

#include "commands.hpp"
#include "hiddensat/formula.hpp"
#include "hiddensat/generator.hpp"
#include "hiddensat/rng.hpp"
#include "util.hpp"

namespace hstool {

namespace {
constexpr std::uint64_t kGenerateStream = 11;
}

int run_generate(const GenerateConfig& cfg) {
  using namespace hiddensat;

  const HiddenMode mode = mode_from_digit(cfg.mode);
  if (cfg.n < 1 || cfg.count < 1 || cfg.r < 0.0)
    throw std::invalid_argument("generate: need n >= 1, count >= 1, r >= 0");

  const std::filesystem::path dir(cfg.out);
  ensure_dir(dir);

  ordered_json files = ordered_json::array();
  for (int i = 0; i < cfg.count; ++i) {
    GeneratorSpec spec;
    spec.n = cfg.n;
    spec.k = cfg.k;
    spec.m = static_cast<int>(std::llround(cfg.r * cfg.n));
    spec.mode = mode;
    spec.seed = derive_seed(cfg.seed, kGenerateStream,
                            static_cast<std::uint64_t>(cfg.mode),
                            static_cast<std::uint64_t>(i));
    const HiddenInstance inst = sample_instance(spec);

    const std::string stem = fmt::format("{}_{}_{}_{}_{}", cfg.prefix,
                                         cfg.mode, cfg.n, num(cfg.r), i);
    const std::string cnf = write_dimacs(inst.formula, cfg.reveal_hidden);
    write_file(dir / (stem + ".cnf"), cnf);

    ordered_json entry;
    entry["file"] = stem + ".cnf";
    entry["seed"] = spec.seed;
    entry["m"] = spec.m;
    entry["fingerprint"] = fingerprint_hex(cnf);
    if (mode != HiddenMode::zero) {
      const std::string sol = write_solutions(inst.formula.meta->hidden);
      write_file(dir / (stem + ".sol"), sol);
      entry["solutions"] = stem + ".sol";
      entry["solutions_fingerprint"] = fingerprint_hex(sol);
    }
    files.push_back(std::move(entry));
  }

  ordered_json config;
  config["mode"] = cfg.mode;
  config["n"] = cfg.n;
  config["k"] = cfg.k;
  config["r"] = cfg.r;
  config["count"] = cfg.count;
  config["seed"] = cfg.seed;
  config["prefix"] = cfg.prefix;
  config["reveal_hidden"] = cfg.reveal_hidden;

  ManifestIo manifest{dir / fmt::format("{}_manifest.json", cfg.prefix),
                      config, "generate"};
  manifest.save(files, utc_timestamp());
  fmt::print("wrote {} instance file(s) to {}\n", cfg.count, dir.string());
  return 0;
}

}  // namespace hstool
