#ifndef PPTLAB_CACHE_HPP
#define PPTLAB_CACHE_HPP

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace pptlab {

// Append-only JSON-lines result cache.  Each line is
//   {"key": <sha256 hex>, "version": <tool version>, "record": {...}}
// Lines from other tool versions are ignored; unreadable lines are skipped
// with a warning.  Any I/O failure switches the cache off (with a warning)
// instead of failing the computation.
class ResultCache {
 public:
  static constexpr const char* kFileName = "pptlab-cache.jsonl";

  explicit ResultCache(std::filesystem::path dir);

  // Directory from an explicit flag, else $PPTLAB_CACHE, else none.
  static std::optional<std::filesystem::path> resolve_dir(
      const std::optional<std::string>& flag);

  std::optional<nlohmann::json> get(const std::string& key);
  void put(const std::string& key, const nlohmann::json& record);

  bool enabled() const { return enabled_; }
  const std::filesystem::path& file() const { return file_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  void disable(const std::string& why);

  std::filesystem::path file_;
  bool enabled_ = true;
  std::mutex write_mu_;
  std::vector<std::string> warnings_;
};

}  // namespace pptlab

#endif
