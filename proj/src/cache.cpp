#include "finfish/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace finfish {

namespace {

std::optional<std::filesystem::path> cache_dir() {
  const char* dir = std::getenv("FINFISH_CACHE");
  if (!dir || !*dir) return std::nullopt;
  return std::filesystem::path(dir);
}

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

std::filesystem::path entry_path(const std::filesystem::path& dir, const std::string& key) {
  return dir / (fnv1a_hex(key) + ".json");
}

}  // namespace

bool cache_enabled() { return cache_dir().has_value(); }

std::string make_cache_key(const std::string& command, const std::string& params) {
  return command + "\x1f" + params + "\x1f" + kCacheVersion;
}

std::optional<std::string> cache_get(const std::string& key) {
  auto dir = cache_dir();
  if (!dir) return std::nullopt;
  std::ifstream in(entry_path(*dir, key));
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    nlohmann::json j = nlohmann::json::parse(buf.str());
    if (!j.is_object() || !j.contains("key") || !j.contains("payload") ||
        !j["key"].is_string() || !j["payload"].is_string() ||
        j["key"].get<std::string>() != key)
      return std::nullopt;
    return j["payload"].get<std::string>();
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // corrupt entry: caller recomputes
  }
}

void cache_put(const std::string& key, const std::string& payload) {
  auto dir = cache_dir();
  if (!dir) return;
  std::error_code ec;
  std::filesystem::create_directories(*dir, ec);
  if (ec) return;  // caching is best-effort
  nlohmann::json j;
  j["key"] = key;
  j["payload"] = payload;
  std::ofstream out(entry_path(*dir, key), std::ios::trunc);
  out << j.dump();
}

std::string cached(const std::string& key, const std::function<std::string()>& producer) {
  if (auto hit = cache_get(key)) return *hit;
  std::string value = producer();
  cache_put(key, value);
  return value;
}

}  // namespace finfish
