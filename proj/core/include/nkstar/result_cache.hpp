// Copyright 2026 The nkstar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NKSTAR_RESULT_CACHE_HPP
#define NKSTAR_RESULT_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace nkstar {

/// Identity of a completed computation. `extra` holds any further inputs that
/// change the result (e.g. whether an upper hint was used).
struct CacheKey {
  std::string operation;
  int n = 0;
  int k = 0;
  std::optional<int> h;
  nlohmann::json extra = nlohmann::json::object();

  nlohmann::json to_json() const;
  /// Hex SHA-256 of the canonical key document, schema version included.
  std::string digest() const;
};

struct CacheListing {
  std::string digest;
  nlohmann::json key;
  std::string created_at;
  std::uintmax_t bytes = 0;
};

/// Content-addressed store of report payloads, one JSON file per entry.
///
/// Writes go to a temporary file that is renamed into place. Entries that
/// fail to parse, carry a different key, or whose payload digest does not
/// match are deleted on read.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path directory);

  /// $NKSTAR_CACHE_DIR, else $XDG_CACHE_HOME/nkstar, else ~/.cache/nkstar,
  /// else ./.nkstar-cache.
  static std::filesystem::path default_directory();

  const std::filesystem::path& directory() const noexcept { return dir_; }

  std::optional<nlohmann::json> load(const CacheKey& key);
  void store(const CacheKey& key, const nlohmann::json& payload);

  std::vector<CacheListing> list() const;
  /// Removes every entry; returns how many were removed.
  std::size_t clear();

  std::size_t evicted() const noexcept { return evicted_; }

 private:
  std::filesystem::path entry_path(const std::string& digest) const;

  std::filesystem::path dir_;
  std::size_t evicted_ = 0;
};

/// Hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

}  // namespace nkstar

#endif  // NKSTAR_RESULT_CACHE_HPP
