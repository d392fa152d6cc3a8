#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace gm::cli {

// Bumped whenever the key layout or value encoding changes; records with
// another tag are ignored.
inline constexpr const char* kCacheVersion = "gm-cache-1";

// Append-only line-delimited JSON store of integer counts, one record per
// line: {"v": version, "key": ..., "value": ...}. Appends hold an exclusive
// flock on the file; loads hold a shared one. Keys are exact labeled inputs,
// so isomorphic graphs are cached separately.
class ResultCache {
 public:
  // Creates `dir` if needed. The store lives in dir/counts.jsonl.
  explicit ResultCache(std::filesystem::path dir);

  std::optional<std::string> lookup(const std::string& key) const;
  // No-op if the key is already present (values never change once written).
  void store(const std::string& key, const std::string& value);

  const std::filesystem::path& file() const { return file_; }

 private:
  void load();

  std::filesystem::path file_;
  std::map<std::string, std::string> entries_;
};

// $GRAPHMOTIVE_CACHE, else ./.gm-cache
std::filesystem::path default_cache_dir();

}  // namespace gm::cli
