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

#include <gtest/gtest.h>

#include <fstream>
#include <random>

#include "nkstar/report.hpp"
#include "nkstar/result_cache.hpp"

namespace nkstar {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("nkstar-test-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

TEST(Sha256Test, KnownVectors) {
  EXPECT_EQ(sha256_hex(""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(ReportJsonTest, SearchResultRoundTrip) {
  const auto g = StarGraph::build(4, 3);
  const auto name = star_namer(g);
  const auto parse = star_parser(g);
  SearchOptions starved;
  starved.budget.candidates = 3;
  std::vector<SearchResult> samples{kappa_super_exact(g, 0), kappa_super_exact(g, 1),
                                    kappa_super_exact(g, 2), kappa_super_exact(g, 3),
                                    kappa_super_exact(g, 1, starved)};
  for (const auto& r : samples) {
    const json j = to_json(r, name);
    const SearchResult back = search_result_from_json(j, parse);
    EXPECT_EQ(to_json(back, name), j) << j.dump();
    EXPECT_EQ(back.value, r.value);
    EXPECT_EQ(back.exhaustive_below, r.exhaustive_below);
    if (r.certificate) EXPECT_EQ(back.certificate->cut, r.certificate->cut);
  }
  EXPECT_EQ(to_json(samples[3], name).at("value"), "none-found");
  EXPECT_TRUE(to_json(samples[4], name).at("budget-hit").get<bool>());
}

TEST(ReportJsonTest, CertificateUsesPermutationNames) {
  const auto g = StarGraph::build(5, 3);
  const auto j = to_json(construct_cut(g, 1), star_namer(g));
  EXPECT_EQ(j.at("size"), 5);
  EXPECT_TRUE(j.at("valid").get<bool>());
  EXPECT_NE(std::find(j.at("S").begin(), j.at("S").end(), "5,1,2"), j.at("S").end());
  const auto back = cut_certificate_from_json(j, g.order(), star_parser(g));
  EXPECT_EQ(back.cut, construct_cut(g, 1).cut);
}

TEST(ReportJsonTest, VerificationReportRoundTrip) {
  const auto g = StarGraph::build(4, 3);
  for (const auto& r : verify_structure(g)) {
    const json j = to_json(r, star_namer(g));
    EXPECT_EQ(to_json(verification_report_from_json(j, star_parser(g)), star_namer(g)), j);
  }
  const auto cell = verify_theorem(g, 1);
  const json j = to_json(cell, star_namer(g));
  const auto back = verification_report_from_json(j, star_parser(g));
  EXPECT_EQ(back.status, ReportStatus::pass);
  EXPECT_EQ(back.parameters, cell.parameters);
  EXPECT_EQ(to_json(back, star_namer(g)), j);
}

TEST(ReportJsonTest, IdNamesForPlainGraphs) {
  const auto r = kappa_super_exact(Graph::complete(4), 0);
  const json j = to_json(r, id_namer());
  EXPECT_EQ(to_json(search_result_from_json(j, id_parser()), id_namer()), j);
}

TEST(ReportJsonTest, StripVolatileIsRecursive) {
  const auto g = StarGraph::build(4, 3);
  const auto a = make_document("verify", {{"n", 4}}, "pass",
                               {{"report", to_json(verify_theorem(g, 1), star_namer(g))}});
  const auto b = make_document("verify", {{"n", 4}}, "pass",
                               {{"report", to_json(verify_theorem(g, 1), star_namer(g))}});
  EXPECT_EQ(a.at("schema-version"), kSchemaVersion);
  EXPECT_EQ(a.at("command"), "verify");
  const auto sa = strip_volatile(a);
  EXPECT_EQ(sa, strip_volatile(b));
  EXPECT_EQ(sa.dump().find("elapsed-ms"), std::string::npos);
  EXPECT_NE(a.dump().find("elapsed-ms"), std::string::npos);
}

TEST(CacheKeyTest, DigestDependsOnEveryField) {
  CacheKey a{"skappa", 5, 3, 1};
  CacheKey b = a;
  EXPECT_EQ(a.digest(), b.digest());
  EXPECT_EQ(a.digest().size(), 64u);
  b.h = 2;
  EXPECT_NE(a.digest(), b.digest());
  b = a;
  b.extra["hint"] = false;
  EXPECT_NE(a.digest(), b.digest());
  b = a;
  b.operation = "verify";
  EXPECT_NE(a.digest(), b.digest());
}

TEST(ResultCacheTest, StoreLoadListClear) {
  TempDir tmp;
  ResultCache cache(tmp.path() / "nested");
  const CacheKey key{"skappa", 4, 3, 1};
  EXPECT_FALSE(cache.load(key).has_value());
  const json payload{{"value", 4}, {"list", {1, 2, 3}}};
  cache.store(key, payload);
  EXPECT_EQ(cache.load(key), payload);
  const auto listing = cache.list();
  ASSERT_EQ(listing.size(), 1u);
  EXPECT_EQ(listing[0].digest, key.digest());
  EXPECT_EQ(listing[0].key, key.to_json());
  EXPECT_FALSE(listing[0].created_at.empty());
  // No temporary files remain after the rename.
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(cache.directory())) {
    ++files;
    EXPECT_EQ(e.path().extension(), ".json");
  }
  EXPECT_EQ(files, 1u);
  EXPECT_EQ(cache.clear(), 1u);
  EXPECT_FALSE(cache.load(key).has_value());
  EXPECT_TRUE(cache.list().empty());
}

TEST(ResultCacheTest, CorruptEntriesAreEvicted) {
  TempDir tmp;
  ResultCache cache(tmp.path());
  const CacheKey key{"verify", 5, 3, 2};
  const fs::path file = tmp.path() / (key.digest() + ".json");

  cache.store(key, json{{"value", 6}});
  { std::ofstream(file, std::ios::trunc) << "{ not json"; }
  EXPECT_FALSE(cache.load(key).has_value());
  EXPECT_FALSE(fs::exists(file));
  EXPECT_EQ(cache.evicted(), 1u);

  cache.store(key, json{{"value", 6}});
  json entry;
  std::ifstream(file) >> entry;
  entry["payload"]["value"] = 7;  // tampered payload, stale digest
  { std::ofstream(file, std::ios::trunc) << entry.dump(); }
  EXPECT_FALSE(cache.load(key).has_value());
  EXPECT_EQ(cache.evicted(), 2u);

  cache.store(key, json{{"value", 6}});
  std::ifstream(file) >> entry;
  entry["key"]["n"] = 6;  // entry filed under the wrong key
  { std::ofstream(file, std::ios::trunc) << entry.dump(); }
  EXPECT_FALSE(cache.load(key).has_value());
  EXPECT_EQ(cache.evicted(), 3u);
}

TEST(ResultCacheTest, DefaultDirectoryHonoursEnvironment) {
  ::setenv("NKSTAR_CACHE_DIR", "/tmp/nkstar-env-cache", 1);
  EXPECT_EQ(ResultCache::default_directory(), fs::path("/tmp/nkstar-env-cache"));
  ::unsetenv("NKSTAR_CACHE_DIR");
  ::setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
  EXPECT_EQ(ResultCache::default_directory(), fs::path("/tmp/xdg/nkstar"));
  ::unsetenv("XDG_CACHE_HOME");
}

}  // namespace
}  // namespace nkstar
