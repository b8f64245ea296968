#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

namespace cayley::cli {

// Hex FNV-1a of the compact JSON dump; object keys are sorted by nlohmann, so field order is irrelevant.
std::string cache_key(const nlohmann::json& fields);

/// Append-only JSON-lines store: one {"key": ..., "value": ...} object per line.
/// On load the last line for a key wins. A disabled cache never hits and never writes.
class ResultCache {
 public:
  ResultCache() = default;
  explicit ResultCache(std::filesystem::path path);

  bool enabled() const noexcept { return path_.has_value(); }
  std::optional<nlohmann::json> get(const std::string& key) const;
  void put(const std::string& key, const nlohmann::json& value);
  std::size_t skipped_lines() const noexcept { return skipped_; }

 private:
  std::optional<std::filesystem::path> path_;
  std::map<std::string, nlohmann::json> entries_;
  std::size_t skipped_ = 0;
};

}  // namespace cayley::cli
