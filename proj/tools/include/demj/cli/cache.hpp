#pragma once

// Append-only JSONL cache, one file per scan family. Each line carries the
// entry key, SHA-256 of the key, the payload and SHA-256 of the payload's
// canonical dump; lines that fail to parse or whose hashes disagree are
// counted as corrupted and ignored. The file is held under an exclusive
// advisory lock for the lifetime of the object.

#include <json.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace demj::cli {

std::string sha256_hex(const std::string& data);

/// --cache-dir if given, else $DEMJANENKO_CACHE, else nullopt (no caching).
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

class ScanCache {
 public:
  struct Stats {
    long hits = 0;
    long misses = 0;
    long corrupted = 0;
  };

  /// Throws std::runtime_error if the file cannot be opened or is locked by
  /// another process.
  ScanCache(const std::filesystem::path& dir, const std::string& family);
  ~ScanCache();
  ScanCache(const ScanCache&) = delete;
  ScanCache& operator=(const ScanCache&) = delete;

  std::optional<nlohmann::json> lookup(const std::string& key);
  void store(const std::string& key, const nlohmann::json& payload);

  const Stats& stats() const { return stats_; }
  const std::filesystem::path& path() const { return path_; }

 private:
  void load();

  std::filesystem::path path_;
  int fd_ = -1;
  std::map<std::string, nlohmann::json> entries_;
  Stats stats_;
};

}  // namespace demj::cli
