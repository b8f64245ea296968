#include "cache.hpp"

#include <cstdio>
#include <fstream>

namespace cayley::cli {

std::string cache_key(const nlohmann::json& fields) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : fields.dump()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(*path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    // A torn final line from an interrupted run is dropped, not fatal.
    auto entry = nlohmann::json::parse(line, nullptr, false);
    if (entry.is_discarded() || !entry.is_object() || !entry.contains("key") || !entry.contains("value") ||
        !entry["key"].is_string()) {
      ++skipped_;
      continue;
    }
    entries_[entry["key"].get<std::string>()] = std::move(entry["value"]);
  }
}

std::optional<nlohmann::json> ResultCache::get(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::put(const std::string& key, const nlohmann::json& value) {
  if (!path_) return;
  entries_[key] = value;
  std::ofstream out(*path_, std::ios::app);
  out << nlohmann::json{{"key", key}, {"value", value}}.dump() << "\n";
}

}  // namespace cayley::cli
