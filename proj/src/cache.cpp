#include "quizzy/cache.hpp"

#include <cstdlib>
#include <fstream>

#include <nlohmann/json.hpp>

#include "quizzy/errors.hpp"

namespace quizzy {

namespace {

// FNV-1a; only used to shard keys into file names, the full key is stored
// inside the file and checked on read.
std::string key_digest(const std::string& key) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

ResultCache ResultCache::from_environment(bool enabled) {
  const char* dir = std::getenv("QUIZZY_CACHE_DIR");
  return ResultCache(dir != nullptr ? std::filesystem::path(dir)
                                    : std::filesystem::path(".quizzy-cache"),
                     enabled);
}

ResultCache::ResultCache(std::filesystem::path dir, bool enabled)
    : dir_(std::move(dir)), enabled_(enabled) {}

std::string ResultCache::make_key(const std::string& computation, const std::string& parameters) {
  return computation + "|" + parameters + "|v" + kVersionTag;
}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
  return dir_ / (key_digest(key) + ".json");
}

std::optional<Rational> ResultCache::lookup(const std::string& key) const {
  if (!enabled_) return std::nullopt;
  const std::filesystem::path path = path_for(key);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception&) {
    throw CacheError("cache file is not valid JSON: " + path.string());
  }
  if (!doc.is_object() || !doc.contains("key") || !doc.contains("num") || !doc.contains("den"))
    throw CacheError("cache file is missing fields: " + path.string());
  if (doc["key"].get<std::string>() != key)
    throw CacheError("cache key mismatch in " + path.string());
  try {
    Int num(doc["num"].get<std::string>());
    Int den(doc["den"].get<std::string>());
    return make_rational(num, den);
  } catch (const std::exception&) {
    throw CacheError("cache file holds a malformed value: " + path.string());
  }
}

void ResultCache::store(const std::string& key, const Rational& value) const {
  if (!enabled_) return;
  std::filesystem::create_directories(dir_);
  nlohmann::json doc;
  doc["key"] = key;
  doc["num"] = value.get_num().get_str();
  doc["den"] = value.get_den().get_str();
  const std::filesystem::path path = path_for(key);
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw CacheError("cannot write cache file: " + tmp.string());
    out << doc.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace quizzy
