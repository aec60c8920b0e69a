#include "util.hpp"

#include <atomic>
#include <ctime>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

namespace hstool {

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void run_tasks(std::size_t count, int parallel,
               const std::function<void(std::size_t)>& fn) {
  if (parallel < 2 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };

  const std::size_t threads =
      std::min<std::size_t>(static_cast<std::size_t>(parallel), count);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

ordered_json ManifestIo::load_existing() const {
  if (!std::filesystem::exists(path)) return nullptr;
  ordered_json doc = ordered_json::parse(read_file(path));
  if (doc.value("command", "") != command)
    throw std::runtime_error(
        fmt::format("{}: manifest belongs to a different command", path.string()));
  if (doc.at("config") != config)
    throw std::runtime_error(fmt::format(
        "{}: manifest config differs from the requested run; "
        "delete it or use a fresh --out to start over",
        path.string()));
  return doc.at("records");
}

void ManifestIo::save(const ordered_json& records,
                      const std::string& created) const {
  ordered_json doc;
  doc["command"] = command;
  doc["version"] = 1;
  doc["config"] = config;
  doc["created"] = created;
  doc["updated"] = utc_timestamp();
  doc["records"] = records;
  write_file(path, doc.dump(2) + "\n");
}

}  // namespace hstool
