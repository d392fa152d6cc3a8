#include "gm_cli/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gm::cli {
namespace {

// RAII flock on a file descriptor.
class FileLock {
 public:
  FileLock(const std::filesystem::path& path, int open_flags, int lock_op) {
    fd_ = ::open(path.c_str(), open_flags, 0644);
    if (fd_ < 0) return;
    if (::flock(fd_, lock_op) != 0) {
      ::close(fd_);
      fd_ = -1;
    }
  }
  ~FileLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

  int fd() const { return fd_; }

 private:
  int fd_ = -1;
};

}  // namespace

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("GRAPHMOTIVE_CACHE"); env && *env) return env;
  return ".gm-cache";
}

ResultCache::ResultCache(std::filesystem::path dir) {
  std::filesystem::create_directories(dir);
  file_ = dir / "counts.jsonl";
  load();
}

void ResultCache::load() {
  FileLock lock(file_, O_RDONLY | O_CREAT, LOCK_SH);
  std::ifstream in(file_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    // Torn or foreign lines are skipped rather than failing the run.
    if (j.is_discarded() || !j.is_object()) continue;
    if (j.value("v", "") != kCacheVersion) continue;
    if (!j.contains("key") || !j.contains("value") || !j["key"].is_string() || !j["value"].is_string()) continue;
    entries_.emplace(j["key"].get<std::string>(), j["value"].get<std::string>());
  }
}

std::optional<std::string> ResultCache::lookup(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::store(const std::string& key, const std::string& value) {
  if (entries_.count(key)) return;
  entries_.emplace(key, value);
  const nlohmann::json rec{{"v", kCacheVersion}, {"key", key}, {"value", value}};
  const std::string line = rec.dump() + "\n";
  FileLock lock(file_, O_WRONLY | O_CREAT | O_APPEND, LOCK_EX);
  if (lock.fd() < 0) throw std::runtime_error("cannot open cache file " + file_.string());
  const char* p = line.data();
  std::size_t left = line.size();
  while (left > 0) {
    const ssize_t n = ::write(lock.fd(), p, left);
    if (n <= 0) throw std::runtime_error("cannot write cache file " + file_.string());
    p += n;
    left -= static_cast<std::size_t>(n);
  }
}

}  // namespace gm::cli
