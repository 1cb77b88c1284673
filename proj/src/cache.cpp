#include "pptlab/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <system_error>

#include "pptlab/record.hpp"

namespace pptlab {

ResultCache::ResultCache(std::filesystem::path dir) : file_(dir / kFileName) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) disable("cannot create " + dir.string() + ": " + ec.message());
}

std::optional<std::filesystem::path> ResultCache::resolve_dir(
    const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  if (const char* env = std::getenv("PPTLAB_CACHE"); env && *env)
    return std::filesystem::path(env);
  return std::nullopt;
}

void ResultCache::disable(const std::string& why) {
  enabled_ = false;
  warnings_.push_back("cache disabled: " + why);
}

std::optional<nlohmann::json> ResultCache::get(const std::string& key) {
  if (!enabled_) return std::nullopt;
  std::error_code ec;
  if (!std::filesystem::exists(file_, ec)) return std::nullopt;
  std::ifstream in(file_);
  if (!in) {
    disable("cannot read " + file_.string());
    return std::nullopt;
  }
  std::optional<nlohmann::json> found;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto entry = nlohmann::json::parse(line, nullptr, false);
    if (entry.is_discarded() || !entry.is_object() || !entry.contains("key") ||
        !entry.contains("version") || !entry.contains("record") ||
        !entry["key"].is_string() || !entry["version"].is_string()) {
      warnings_.push_back("cache: skipping corrupt line " + std::to_string(lineno));
      continue;
    }
    if (entry["version"] != version()) continue;
    // the newest matching entry wins
    if (entry["key"] == key) found = std::move(entry["record"]);
  }
  return found;
}

void ResultCache::put(const std::string& key, const nlohmann::json& record) {
  if (!enabled_) return;
  const nlohmann::json entry = {{"key", key}, {"version", version()}, {"record", record}};
  std::lock_guard<std::mutex> lock(write_mu_);
  std::ofstream out(file_, std::ios::app);
  if (!out) {
    disable("cannot append to " + file_.string());
    return;
  }
  out << entry.dump() << '\n';
  out.flush();
  if (!out) disable("write to " + file_.string() + " failed");
}

}  // namespace pptlab
