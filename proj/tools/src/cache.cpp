#include "demj/cli/cache.hpp"

#include <openssl/evp.h>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace demj::cli {

using nlohmann::json;

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  if (const char* env = std::getenv("DEMJANENKO_CACHE"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

ScanCache::ScanCache(const std::filesystem::path& dir, const std::string& family) {
  std::filesystem::create_directories(dir);
  path_ = dir / (family + ".jsonl");
  fd_ = ::open(path_.c_str(), O_RDWR | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd_ < 0) throw std::runtime_error("cannot open cache " + path_.string() + ": " + std::strerror(errno));
  if (::flock(fd_, LOCK_EX | LOCK_NB) != 0) {
    ::close(fd_);
    fd_ = -1;
    throw std::runtime_error("cache " + path_.string() + " is locked by another process");
  }
  load();
}

ScanCache::~ScanCache() {
  if (fd_ >= 0) {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
}

void ScanCache::load() {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("key") || !j.contains("payload") ||
        !j.contains("input_hash") || !j.contains("payload_hash") || !j["key"].is_string()) {
      ++stats_.corrupted;
      continue;
    }
    const std::string key = j["key"].get<std::string>();
    if (j["input_hash"] != sha256_hex(key) || j["payload_hash"] != sha256_hex(j["payload"].dump())) {
      ++stats_.corrupted;
      continue;
    }
    entries_[key] = j["payload"];
  }
}

std::optional<json> ScanCache::lookup(const std::string& key) {
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    ++stats_.misses;
    return std::nullopt;
  }
  ++stats_.hits;
  return it->second;
}

void ScanCache::store(const std::string& key, const json& payload) {
  json line{{"key", key}, {"input_hash", sha256_hex(key)}, {"payload", payload}, {"payload_hash", sha256_hex(payload.dump())}};
  std::string text = line.dump() + "\n";
  // A torn previous line must not swallow this one.
  if (::lseek(fd_, 0, SEEK_END) > 0) {
    char last = '\n';
    if (::pread(fd_, &last, 1, ::lseek(fd_, 0, SEEK_END) - 1) == 1 && last != '\n') text.insert(text.begin(), '\n');
  }
  const char* p = text.data();
  std::size_t left = text.size();
  while (left > 0) {
    ssize_t n = ::write(fd_, p, left);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw std::runtime_error("cache write failed: " + std::string(std::strerror(errno)));
    }
    p += n;
    left -= static_cast<std::size_t>(n);
  }
  ::fsync(fd_);
  entries_[key] = payload;
}

}  // namespace demj::cli
