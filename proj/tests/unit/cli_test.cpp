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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "nkstar/cli.hpp"
#include "nkstar/report.hpp"

namespace nkstar {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("nkstar-cli-" + std::to_string(rd()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  struct Run {
    int code;
    std::string out;
    std::string err;
    json doc() const { return json::parse(out); }
  };

  /// Runs against a private cache unless the arguments say otherwise.
  Run run(std::vector<std::string> args, bool cached = false) {
    if (cached) {
      args.insert(args.begin(), {"--cache-dir", (dir_ / "cache").string()});
    } else {
      args.insert(args.begin(), "--no-cache");
    }
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
  }

  fs::path write_file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  fs::path dir_;
};

TEST_F(CliTest, Info) {
  const auto r = run({"info", "4", "2"});
  ASSERT_EQ(r.code, kExitPass) << r.out;
  const auto d = r.doc();
  EXPECT_EQ(d.at("schema-version"), kSchemaVersion);
  EXPECT_EQ(d.at("command"), "info");
  EXPECT_EQ(d.at("order"), 12);
  EXPECT_EQ(d.at("edges"), 18);
  EXPECT_EQ(d.at("min-degree"), 3);
  EXPECT_TRUE(d.at("regular").get<bool>());
  EXPECT_EQ(d.at("cliques"), 4);
  EXPECT_EQ(d.at("swap-edges"), 6);
  EXPECT_EQ(d.at("unswap-edges"), 12);
}

TEST_F(CliTest, GenEdgeListAndDot) {
  const auto r = run({"gen", "4", "2"});
  ASSERT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "1,2\t2,1\tswap:2");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 18);

  const auto file = dir_ / "g.txt";
  ASSERT_EQ(run({"gen", "4", "2", "--out", file.string()}).code, kExitPass);
  std::stringstream written;
  written << std::ifstream(file).rdbuf();
  EXPECT_EQ(written.str(), r.out);

  const auto dot = run({"gen", "4", "2", "--format", "dot"});
  EXPECT_NE(dot.out.find("graph"), std::string::npos);
  EXPECT_NE(dot.out.find("kind="), std::string::npos);
  EXPECT_EQ(run({"gen", "4", "2", "--format", "gml"}).code, kExitError);
}

TEST_F(CliTest, Decompose) {
  const auto r = run({"decompose", "5", "3", "--t", "2"});
  ASSERT_EQ(r.code, kExitPass) << r.out;
  const auto d = r.doc();
  EXPECT_EQ(d.at("expected-cross-edges"), 3);
  EXPECT_EQ(d.at("subgraph-sizes"), json::array({12, 12, 12, 12, 12}));
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) EXPECT_EQ(d.at("cross-edges")[i][j], i == j ? 0 : 3);
  }
  EXPECT_EQ(run({"decompose", "5", "3", "--t", "4"}).code, kExitError);
}

TEST_F(CliTest, CutConstruct) {
  auto r = run({"cut", "construct", "5", "3", "1", "--alpha", "4,5"});
  ASSERT_EQ(r.code, kExitPass) << r.out;
  auto d = r.doc();
  EXPECT_EQ(d.at("command"), "cut construct");
  EXPECT_EQ(d.at("certificate").at("S"),
            json::array({"3,4,5", "4,1,5", "4,2,5", "5,4,1", "5,4,2"}));
  EXPECT_EQ(d.at("certificate").at("X"), json::array({"1,4,5", "2,4,5"}));
  EXPECT_EQ(d.at("expected-size"), 5);

  r = run({"cut", "construct", "5", "3", "1", "--x", "2,4,5", "--x", "3,4,5"});
  ASSERT_EQ(r.code, kExitPass) << r.out;
  EXPECT_EQ(r.doc().at("certificate").at("X"), json::array({"2,4,5", "3,4,5"}));

  r = run({"cut", "construct", "5", "3", "1", "--x", "1,4,5;1,2,3"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_EQ(r.doc().at("error").at("kind"), "domain-error");
  EXPECT_EQ(run({"cut", "construct", "4", "3", "2"}).code, kExitError);
}

TEST_F(CliTest, CutVerifyReadsVertexFiles) {
  const auto good = write_file("s.txt",
                               "# a 1-cut of S_{5,3}\n3,4,5\n\n4,1,5  # swap\n4,2,5\n"
                               "5,4,1\n5,4,2\n");
  auto r = run({"cut", "verify", "5", "3", "1", "--s", good.string()});
  ASSERT_EQ(r.code, kExitPass) << r.out;
  EXPECT_TRUE(r.doc().at("is-h-cut").get<bool>());
  EXPECT_EQ(r.doc().at("components"), 2);

  // As a 2-cut it fails: X keeps degree 1.
  r = run({"cut", "verify", "5", "3", "2", "--s", good.string()});
  EXPECT_EQ(r.code, kExitFail);
  EXPECT_EQ(r.doc().at("status"), "fail");
  EXPECT_TRUE(r.doc().contains("counterexample"));

  const auto bad = write_file("bad.txt", "1,2,3\n1,1,2\n");
  r = run({"cut", "verify", "5", "3", "1", "--s", bad.string()});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.doc().at("error").at("message").get<std::string>().find(":2:"),
            std::string::npos);
  EXPECT_EQ(run({"cut", "verify", "5", "3", "1", "--s", (dir_ / "missing").string()}).code,
            kExitError);
}

TEST_F(CliTest, KappaBothMethodsAgree) {
  auto r = run({"kappa", "5", "3"});
  ASSERT_EQ(r.code, kExitPass) << r.out;
  EXPECT_EQ(r.doc().at("flow"), 4);
  EXPECT_EQ(r.doc().at("subset-search").at("value"), 4);
  EXPECT_TRUE(r.doc().at("agree").get<bool>());

  r = run({"kappa", "4", "1"});  // K_4
  ASSERT_EQ(r.code, kExitPass) << r.out;
  EXPECT_EQ(r.doc().at("flow"), 3);
  EXPECT_EQ(r.doc().at("subset-search").at("value"), "none-found");

  r = run({"kappa", "5", "3", "--budget-candidates", "5"});
  EXPECT_EQ(r.code, kExitSkippedBudget);
}

TEST_F(CliTest, Skappa) {
  auto r = run({"skappa", "5", "3", "1"});
  ASSERT_EQ(r.code, kExitPass) << r.out;
  auto d = r.doc();
  EXPECT_EQ(d.at("result").at("value"), 5);
  EXPECT_EQ(d.at("result").at("exhaustive-below"), 5);
  EXPECT_EQ(d.at("theorem-value"), 5);
  EXPECT_TRUE(d.at("hint").get<bool>());

  r = run({"skappa", "5", "3", "1", "--no-hint", "--workers", "2"});
  ASSERT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.doc().at("result").at("value"), 5);
  EXPECT_FALSE(r.doc().at("hint").get<bool>());

  r = run({"skappa", "5", "3", "1", "--budget-candidates", "100"});
  EXPECT_EQ(r.code, kExitSkippedBudget);
  EXPECT_EQ(r.doc().at("status"), "skipped-budget");
  EXPECT_EQ(r.doc().at("result").at("value"), "none-found");

  r = run({"skappa", "4", "3", "2"});  // outside the closed form: oracle only
  ASSERT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.doc().at("result").at("value"), 6);
  EXPECT_FALSE(r.doc().contains("theorem-value"));
}

TEST_F(CliTest, VerifyAndGrid) {
  auto r = run({"verify", "4", "3"});
  ASSERT_EQ(r.code, kExitPass) << r.out;
  EXPECT_EQ(r.doc().at("rows").size(), 2u);
  EXPECT_EQ(r.doc().at("reports").size(), 7u);  // 4 suites, 2 cells, chain

  r = run({"verify", "4", "3", "2"});
  ASSERT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.doc().at("reports")[0].at("status"), "pass");

  r = run({"verify", "4", "2", "3"});
  ASSERT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.doc().at("reports")[0].at("status"), "oracle-only");

  r = run({"grid", "--n-max", "4", "--budget-seconds", "0", "--table"});
  EXPECT_EQ(r.code, kExitSkippedBudget);
  EXPECT_NE(r.err.find("skipped-budget"), std::string::npos);
  for (const auto& row : r.doc().at("rows")) EXPECT_EQ(row.at("status"), "skipped-budget");
  for (const auto& rep : r.doc().at("reports")) {
    if (rep.at("target") != "super-connectivity") EXPECT_EQ(rep.at("status"), "pass");
  }

  EXPECT_EQ(run({"verify", "4", "4"}).code, kExitError);
}

TEST_F(CliTest, ReportsAreReproducible) {
  const auto a = run({"verify", "4", "3"});
  const auto b = run({"verify", "4", "3"});
  EXPECT_EQ(strip_volatile(a.doc()), strip_volatile(b.doc()));
  EXPECT_NE(a.out.find("elapsed-ms"), std::string::npos);
}

TEST_F(CliTest, CacheHitsMatchRecomputation) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"skappa", "5", "3", "2"}, {"verify", "4", "3"}, {"verify", "4", "3", "2"}}) {
    const auto fresh = run(args);
    const auto first = run(args, true);
    const auto second = run(args, true);
    EXPECT_EQ(strip_volatile(first.doc()), strip_volatile(fresh.doc()));
    EXPECT_EQ(strip_volatile(second.doc()), strip_volatile(fresh.doc()));
  }
  auto ls = run({"cache", "ls"}, true);
  ASSERT_EQ(ls.code, kExitPass);
  // skappa(5,3,2) plus verify cells (4,3,0), (4,3,1), (4,3,2).
  EXPECT_EQ(ls.doc().at("entries").size(), 4u);
  auto clear = run({"cache", "clear"}, true);
  EXPECT_EQ(clear.doc().at("removed"), 4);
  EXPECT_TRUE(run({"cache", "ls"}, true).doc().at("entries").empty());
}

TEST_F(CliTest, BudgetedResultsAreNotCached) {
  run({"skappa", "5", "3", "1", "--budget-candidates", "10"}, true);
  EXPECT_TRUE(run({"cache", "ls"}, true).doc().at("entries").empty());
}

TEST_F(CliTest, UsageErrors) {
  auto r = run({"skappa", "5", "3"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_EQ(r.doc().at("error").at("kind"), "usage-error");
  EXPECT_EQ(run({"frobnicate"}).code, kExitError);
  EXPECT_EQ(run({"info", "five", "3"}).code, kExitError);

  r = run({"info", "4", "5"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_EQ(r.doc().at("status"), "error");
  EXPECT_EQ(r.doc().at("parameters").at("k"), 5);

  r = run({"--help"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.err.find("skappa"), std::string::npos);
}

}  // namespace
}  // namespace nkstar
