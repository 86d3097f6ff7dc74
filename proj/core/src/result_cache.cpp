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

#include "nkstar/result_cache.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <random>
#include <algorithm>

#include "nkstar/errors.hpp"
#include "nkstar/report.hpp"

namespace nkstar {

namespace fs = std::filesystem;
using nlohmann::json;

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 0xF];
  }
  return out;
}

json CacheKey::to_json() const {
  json j = {{"operation", operation},
            {"n", n},
            {"k", k},
            {"h", h ? json(*h) : json(nullptr)},
            {"extra", extra},
            {"schema-version", kSchemaVersion}};
  return j;
}

std::string CacheKey::digest() const { return sha256_hex(to_json().dump()); }

ResultCache::ResultCache(fs::path directory) : dir_(std::move(directory)) {}

fs::path ResultCache::default_directory() {
  if (const char* env = std::getenv("NKSTAR_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return fs::path(xdg) / "nkstar";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return fs::path(home) / ".cache" / "nkstar";
  }
  return ".nkstar-cache";
}

fs::path ResultCache::entry_path(const std::string& digest) const {
  return dir_ / (digest + ".json");
}

std::optional<json> ResultCache::load(const CacheKey& key) {
  const std::string digest = key.digest();
  const fs::path path = entry_path(digest);
  std::error_code ec;
  if (!fs::exists(path, ec)) return std::nullopt;

  auto evict = [&]() -> std::optional<json> {
    fs::remove(path, ec);
    ++evicted_;
    return std::nullopt;
  };
  std::ifstream in(path);
  json entry = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (entry.is_discarded() || !entry.is_object() || !entry.contains("key") ||
      !entry.contains("payload") || !entry.contains("payload-sha256")) {
    return evict();
  }
  if (entry.at("key") != key.to_json()) return evict();
  if (!entry.at("payload-sha256").is_string() ||
      entry.at("payload-sha256").get<std::string>() !=
          sha256_hex(entry.at("payload").dump())) {
    return evict();
  }
  return entry.at("payload");
}

namespace {

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

void ResultCache::store(const CacheKey& key, const json& payload) {
  fs::create_directories(dir_);
  const json entry = {{"key", key.to_json()},
                      {"payload", payload},
                      {"payload-sha256", sha256_hex(payload.dump())},
                      {"created-at", utc_now()}};
  const std::string digest = key.digest();
  std::random_device rd;
  const fs::path tmp =
      dir_ / (digest + ".tmp." + std::to_string(rd()) + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << entry.dump(1) << '\n';
    if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
  }
  fs::rename(tmp, entry_path(digest));
}

std::vector<CacheListing> ResultCache::list() const {
  std::vector<CacheListing> out;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return out;
  for (const auto& de : fs::directory_iterator(dir_)) {
    if (de.path().extension() != ".json") continue;
    CacheListing item;
    item.digest = de.path().stem().string();
    item.bytes = de.file_size(ec);
    std::ifstream in(de.path());
    json entry = json::parse(in, nullptr, false);
    if (!entry.is_discarded() && entry.is_object()) {
      item.key = entry.value("key", json(nullptr));
      item.created_at = entry.value("created-at", std::string());
    }
    out.push_back(std::move(item));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.digest < b.digest; });
  return out;
}

std::size_t ResultCache::clear() {
  std::size_t removed = 0;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return 0;
  for (const auto& de : fs::directory_iterator(dir_)) {
    const auto name = de.path().filename().string();
    if (de.path().extension() == ".json" || name.find(".tmp.") != std::string::npos) {
      if (fs::remove(de.path(), ec)) ++removed;
    }
  }
  return removed;
}

}  // namespace nkstar
