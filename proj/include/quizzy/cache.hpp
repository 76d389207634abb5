#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "quizzy/rational.hpp"

namespace quizzy {

inline constexpr const char* kVersionTag = "0.1.0";

// Content-addressed result cache: files keyed by (computation, parameters,
// version tag) under QUIZZY_CACHE_DIR (default ./.quizzy-cache). Stores exact
// values only; writes are temp-then-rename. A malformed file or a key
// mismatch raises CacheError.
class ResultCache {
 public:
  // Reads QUIZZY_CACHE_DIR; disabled caches never touch the filesystem.
  static ResultCache from_environment(bool enabled);
  explicit ResultCache(std::filesystem::path dir, bool enabled = true);

  bool enabled() const { return enabled_; }
  const std::filesystem::path& directory() const { return dir_; }

  std::optional<Rational> lookup(const std::string& key) const;
  void store(const std::string& key, const Rational& value) const;

  // Stable composite key for a named computation.
  static std::string make_key(const std::string& computation, const std::string& parameters);

 private:
  std::filesystem::path path_for(const std::string& key) const;
  std::filesystem::path dir_;
  bool enabled_ = true;
};

}  // namespace quizzy
