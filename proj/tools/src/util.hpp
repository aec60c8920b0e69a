#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "hiddensat/formula.hpp"

namespace hstool {

using ordered_json = nlohmann::ordered_json;

// FNV-1a, 64-bit: stable across platforms, cheap, good enough to detect any
// accidental divergence between two instance files.
inline std::uint64_t fingerprint(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string fingerprint_hex(std::string_view bytes) {
  return fmt::format("{:016x}", fingerprint(bytes));
}

// Shortest round-trip decimal form; used for CSV cells and file names so
// outputs are byte-stable.
inline std::string num(double v) { return fmt::format("{}", v); }

inline int mode_digit(hiddensat::HiddenMode mode) {
  return static_cast<int>(mode);
}

inline hiddensat::HiddenMode mode_from_digit(int d) {
  if (d < 0 || d > 2)
    throw std::invalid_argument("mode must be 0, 1, or 2");
  return static_cast<hiddensat::HiddenMode>(d);
}

inline void write_file(const std::filesystem::path& path,
                       std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out)
    throw std::runtime_error(fmt::format("cannot write {}", path.string()));
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error(fmt::format("cannot read {}", path.string()));
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  return bytes;
}

inline void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec)
    throw std::runtime_error(
        fmt::format("cannot create {}: {}", dir.string(), ec.message()));
}

std::string utc_timestamp();

// Joins cells with commas and terminates the row; no quoting is ever needed
// because no emitted field contains commas or newlines.
inline void csv_row(std::string& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out.push_back(',');
    out += cells[i];
  }
  out.push_back('\n');
}

// Runs fn(0..count-1) on `parallel` threads; any thrown exception is
// rethrown on the caller's thread after all workers finish.
void run_tasks(std::size_t count, int parallel,
               const std::function<void(std::size_t)>& fn);

// Restartable-sweep manifests: load returns the previous records when a
// manifest exists and its config matches; a config mismatch is an error so
// two different experiments can never be silently merged.
struct ManifestIo {
  std::filesystem::path path;
  ordered_json config;
  std::string command;

  // Returns the "records" object of the existing manifest, or null.
  ordered_json load_existing() const;
  void save(const ordered_json& records, const std::string& created) const;
};

}  // namespace hstool
