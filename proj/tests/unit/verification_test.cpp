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

#include "naive_oracles.hpp"
#include "nkstar/errors.hpp"
#include "nkstar/verification.hpp"

namespace nkstar {
namespace {

std::int64_t falling(int n, int k) {
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r *= n - i;
  return r;
}

TEST(StatusTest, RoundTrip) {
  for (auto s : {ReportStatus::pass, ReportStatus::fail, ReportStatus::skipped_budget,
                 ReportStatus::oracle_only, ReportStatus::aborted}) {
    EXPECT_EQ(parse_report_status(to_string(s)), s);
  }
  EXPECT_EQ(to_string(ReportStatus::skipped_budget), "skipped-budget");
  EXPECT_THROW(parse_report_status("passed"), DomainError);
}

TEST(StructureTest, AllSuitesPassOnSmallGraphs) {
  for (int n = 3; n <= 6; ++n) {
    for (int k = 2; k <= n - 1; ++k) {
      const auto reports = verify_structure(n, k);
      ASSERT_EQ(reports.size(), 4u);
      for (const auto& r : reports) {
        EXPECT_EQ(r.status, ReportStatus::pass) << r.target << " n=" << n << " k=" << k
                                                << " " << r.counterexample.value_or("");
        EXPECT_EQ(r.parameters.n, n);
        EXPECT_EQ(r.parameters.k, k);
      }
    }
  }
}

TEST(StructureTest, CountersMatchCounting) {
  const auto reports = verify_structure(5, 3);
  EXPECT_EQ(reports[0].target, kCliquePartition);
  EXPECT_EQ(reports[0].counters.at("cliques"), falling(5, 2));
  EXPECT_EQ(reports[0].counters.at("clique_order"), 3);
  // Each vertex has k-1 swap neighbours.
  EXPECT_EQ(reports[1].counters.at("inter_clique_edges"), falling(5, 3) * 2 / 2);
  EXPECT_EQ(reports[1].counters.at("joined_clique_pairs"), falling(5, 3));
  EXPECT_EQ(reports[3].counters.at("swap_edges_scanned"), falling(5, 3));
  const auto s42 = verify_structure(4, 2);
  EXPECT_EQ(s42[3].counters.at("swap_edges_scanned"), 6);
}

TEST(StructureTest, GirthCounterMatchesNaiveBfs) {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {4, 3}, {5, 3}}) {
    const auto labels = testing::naive_k_permutations(n, k);
    const auto adj = testing::naive_star_matrix(n, k, labels);
    int shortest = -1;
    for (int u = 0; u < static_cast<int>(labels.size()); ++u) {
      for (int i = 1; i < k; ++i) {
        auto q = labels[u];
        std::swap(q[0], q[i]);
        const int v = static_cast<int>(
            std::lower_bound(labels.begin(), labels.end(), q) - labels.begin());
        if (const auto c = testing::naive_cycle_through(adj, u, v)) {
          if (shortest < 0 || *c < shortest) shortest = *c;
        }
      }
    }
    const auto reports = verify_structure(n, k);
    EXPECT_EQ(reports[3].counters.at("shortest_cycle"), shortest) << n << "," << k;
    EXPECT_GE(shortest, 6);
  }
}

TEST(StructureTest, RejectsKOne) {
  EXPECT_THROW(verify_structure(4, 1), DomainError);
  EXPECT_THROW(verify_structure(4, 4), DomainError);
}

TEST(TheoremTest, InDomainCellsPass) {
  for (auto [n, k, h] : std::vector<std::tuple<int, int, int>>{
           {3, 2, 0}, {3, 2, 1}, {4, 2, 2}, {4, 3, 1}, {5, 2, 3}, {5, 3, 1}}) {
    const auto r = verify_theorem(n, k, h);
    EXPECT_EQ(r.status, ReportStatus::pass) << n << k << h;
    EXPECT_EQ(r.counters.at("value"), theorem_value(n, k, h));
    EXPECT_EQ(r.parameters.h, h);
    ASSERT_TRUE(r.search.has_value());
    EXPECT_TRUE(r.search->proven_minimum());
  }
  EXPECT_THROW(verify_theorem(4, 3, 2), DomainError);
}

TEST(TheoremTest, WithoutHintAgrees) {
  TheoremOptions opt;
  opt.use_hint = false;
  const auto r = verify_theorem(5, 3, 1, opt);
  EXPECT_EQ(r.status, ReportStatus::pass);
}

TEST(TheoremTest, ZeroBudgetIsSkipped) {
  TheoremOptions opt;
  opt.budget.candidates = 0;
  const auto r = verify_theorem(5, 3, 1, opt);
  EXPECT_EQ(r.status, ReportStatus::skipped_budget);
  EXPECT_FALSE(r.counterexample.has_value());
}

TEST(OracleCellTest, StarGraphReference) {
  const auto g = StarGraph::build(4, 3);
  const auto r = verify_oracle_cell(g, 2);
  EXPECT_EQ(r.status, ReportStatus::pass);
  EXPECT_EQ(r.counters.at("expected"), 6);
  EXPECT_EQ(r.counters.at("value"), 6);
}

TEST(OracleCellTest, NoReferenceMeansOracleOnly) {
  const auto g = StarGraph::build(4, 2);
  const auto r = verify_oracle_cell(g, 3);
  EXPECT_EQ(r.status, ReportStatus::oracle_only);
  EXPECT_FALSE(r.search->value.has_value());
  EXPECT_THROW(verify_oracle_cell(g, 1), DomainError);
}

TEST(GridTest, SmallGridPasses) {
  GridSpec spec;
  spec.n_min = 3;
  spec.n_max = 4;
  const auto res = grid_run(spec);
  EXPECT_FALSE(res.any_fail());
  EXPECT_FALSE(res.any_skipped());
  // (3,2): h 0..1; (4,2): h 0..2; (4,3): h 0..1.
  EXPECT_EQ(res.rows.size(), 7u);
  // 3 pairs x (4 structure suites + 1 chain) + 7 cells.
  EXPECT_EQ(res.reports.size(), 22u);
  for (const auto& row : res.rows) {
    EXPECT_EQ(row.value, static_cast<std::size_t>(*row.expected));
  }
  const std::string table = render_summary_table(res.rows);
  EXPECT_NE(table.find("expected"), std::string::npos);
  EXPECT_EQ(table.find('*'), std::string::npos);
}

TEST(GridTest, ExtraHIsOutOfDomain) {
  GridSpec spec;
  spec.n_min = spec.n_max = 4;
  spec.k_min = 3;
  spec.extra_h = 1;
  const auto res = grid_run(spec);
  ASSERT_EQ(res.rows.size(), 3u);
  EXPECT_FALSE(res.rows[2].in_domain);
  EXPECT_EQ(res.rows[2].status, ReportStatus::pass);  // 6(n-3) reference
  EXPECT_NE(render_summary_table(res.rows).find('*'), std::string::npos);
}

TEST(GridTest, EmptyRangeIsEmpty) {
  GridSpec spec;
  spec.n_min = 5;
  spec.n_max = 4;
  const auto res = grid_run(spec);
  EXPECT_TRUE(res.rows.empty());
  EXPECT_TRUE(res.reports.empty());
}

TEST(GridTest, ZeroBudgetSkipsEveryCell) {
  GridSpec spec;
  spec.n_max = 4;
  spec.theorem.budget.seconds = 0.0;
  const auto res = grid_run(spec);
  EXPECT_TRUE(res.any_skipped());
  EXPECT_FALSE(res.any_fail());
  for (const auto& row : res.rows) EXPECT_EQ(row.status, ReportStatus::skipped_budget);
}

TEST(GridTest, ChainDetectsDecrease) {
  GridSpec spec;
  spec.n_min = spec.n_max = 4;
  spec.k_min = 2;
  spec.k_max = 2;
  spec.cell_runner = [](const StarGraph& g, int h) {
    VerificationReport r;
    r.target = kTheorem;
    r.parameters = {g.n(), g.k(), h, std::nullopt};
    SearchResult s;
    s.h = h;
    s.value = static_cast<std::size_t>(10 - h);
    r.search = s;
    return r;
  };
  const auto res = grid_run(spec);
  EXPECT_TRUE(res.any_fail());
  const auto& chain = res.reports.back();
  EXPECT_EQ(chain.target, kMonotoneChain);
  EXPECT_EQ(chain.status, ReportStatus::fail);
  ASSERT_TRUE(chain.counterexample.has_value());
  EXPECT_NE(chain.counterexample->find("h=1"), std::string::npos);
}

}  // namespace
}  // namespace nkstar
