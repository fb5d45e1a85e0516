#include "cache.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <unistd.h>

namespace pfh::cli {

namespace {

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

std::string nowIso() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

}  // namespace

std::filesystem::path defaultCacheDir() {
  if (const char* d = std::getenv("PFH_CACHE_DIR"); d && *d) return d;
  if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d) return std::filesystem::path(d) / "pfh";
  if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "pfh";
  return {};
}

std::string Cache::keyText(const std::string& command, const Json& params) const {
  return "v" + std::to_string(kFormatVersion) + "|" + command + "|" + params.dump();
}

std::filesystem::path Cache::pathFor(const std::string& key) const { return dir_ / (fnv1a(key) + ".json"); }

std::optional<Json> Cache::load(const std::string& key) const {
  std::ifstream in(pathFor(key));
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    if (j.at("version").get<int>() != kFormatVersion || j.at("key").get<std::string>() != key) return std::nullopt;
    return j.at("payload");
  } catch (const std::exception&) {
    return std::nullopt;  // torn or foreign file: treat as a miss
  }
}

void Cache::store(const std::string& key, const Json& payload) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) {
    std::cerr << "warning: cannot create cache dir " << dir_ << ": " << ec.message() << "\n";
    return;
  }
  Json j;
  j["version"] = kFormatVersion;
  j["key"] = key;
  j["created"] = nowIso();
  j["payload"] = payload;
  auto final = pathFor(key);
  auto tmp = final;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(std::random_device{}());
  {
    std::ofstream out(tmp);
    out << j.dump() << "\n";
    if (!out) {
      std::cerr << "warning: cache write failed for " << tmp << "\n";
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, final, ec);  // atomic on POSIX
  if (ec) {
    std::cerr << "warning: cache rename failed: " << ec.message() << "\n";
    std::filesystem::remove(tmp, ec);
  }
}

Json Cache::getOrCompute(const std::string& command, const Json& params, const std::function<Json()>& compute) {
  if (!enabled()) return compute();
  const std::string key = keyText(command, params);
  if (auto hit = load(key)) {
    static std::mt19937_64 rng{std::random_device{}()};
    if (std::uniform_real_distribution<>(0, 1)(rng) >= verifyRate_) return *hit;
    Json fresh = compute();
    if (fresh != *hit) {
      std::cerr << "warning: stale cache entry for " << command << " replaced\n";
      store(key, fresh);
    }
    return fresh;
  }
  Json fresh = compute();
  store(key, fresh);
  return fresh;
}

}  // namespace pfh::cli
