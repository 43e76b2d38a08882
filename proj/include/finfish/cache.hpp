#ifndef FINFISH_CACHE_HPP
#define FINFISH_CACHE_HPP

#include <functional>
#include <optional>
#include <string>

namespace finfish {

// Bumping this invalidates every existing cache entry.
inline constexpr const char* kCacheVersion = "1";

// Caching is active only when FINFISH_CACHE names a directory.
bool cache_enabled();

// Stable content key for a command invocation; includes kCacheVersion.
std::string make_cache_key(const std::string& command, const std::string& params);

std::optional<std::string> cache_get(const std::string& key);
void cache_put(const std::string& key, const std::string& payload);

// Cached lookup: serve a stored payload byte-identically, or run the producer
// and store its result. Corrupt entries are recomputed and overwritten.
std::string cached(const std::string& key, const std::function<std::string()>& producer);

}  // namespace finfish

#endif  // FINFISH_CACHE_HPP
