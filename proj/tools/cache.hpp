#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "pfh/json_io.hpp"

namespace pfh::cli {

/// On-disk cache of command results. One file per key; the key text is stored
/// alongside the payload and compared on read, so hash collisions are harmless.
class Cache {
 public:
  static constexpr int kFormatVersion = 1;

  /// Empty dir disables the cache.
  explicit Cache(std::filesystem::path dir, double verifyRate = 0.01) : dir_(std::move(dir)), verifyRate_(verifyRate) {}

  bool enabled() const { return !dir_.empty(); }
  const std::filesystem::path& dir() const { return dir_; }

  /// Cached result for (command, params), computing and storing on a miss.
  /// A fraction of hits is recomputed; a stale entry is replaced.
  Json getOrCompute(const std::string& command, const Json& params, const std::function<Json()>& compute);

  std::string keyText(const std::string& command, const Json& params) const;
  std::filesystem::path pathFor(const std::string& key) const;

  std::optional<Json> load(const std::string& key) const;
  void store(const std::string& key, const Json& payload) const;

 private:
  std::filesystem::path dir_;
  double verifyRate_;
};

/// --cache-dir, then $PFH_CACHE_DIR, then $XDG_CACHE_HOME/pfh, then ~/.cache/pfh.
std::filesystem::path defaultCacheDir();

}  // namespace pfh::cli
