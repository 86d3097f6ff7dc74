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

#ifndef NKSTAR_VERIFICATION_HPP
#define NKSTAR_VERIFICATION_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nkstar/fault_tolerance.hpp"
#include "nkstar/star_graph.hpp"

namespace nkstar {

enum class ReportStatus {
  pass,
  fail,
  skipped_budget,
  /// Out of the closed form's domain with no reference value to compare.
  oracle_only,
  /// Not run because a structure suite failed for the same (n,k).
  aborted,
};

/// "pass", "fail", "skipped-budget", "oracle-only", "aborted".
std::string to_string(ReportStatus s);
ReportStatus parse_report_status(const std::string& s);

struct ReportParameters {
  int n = 0;
  int k = 0;
  std::optional<int> h;
  std::optional<int> t;

  friend bool operator==(const ReportParameters&, const ReportParameters&) = default;
};

/// Outcome of one suite. A fail always carries a counterexample.
struct VerificationReport {
  std::string target;
  ReportParameters parameters;
  ReportStatus status = ReportStatus::pass;
  std::map<std::string, std::int64_t> counters;
  std::optional<std::string> counterexample;
  std::vector<std::string> notes;
  /// Oracle output for theorem cells.
  std::optional<SearchResult> search;
  double elapsed_ms = 0.0;
};

struct StructureOptions {
  /// Stop each suite at its first violation; otherwise count all of them.
  bool stop_at_first = true;
};

// Suite targets.
inline constexpr const char* kCliquePartition = "clique-partition";
inline constexpr const char* kCliqueSwapEdges = "clique-swap-edges";
inline constexpr const char* kSubgraphDecomposition = "subgraph-decomposition";
inline constexpr const char* kSwapEdgeGirth = "swap-edge-girth";
inline constexpr const char* kTheorem = "super-connectivity";
inline constexpr const char* kMonotoneChain = "monotone-chain";

VerificationReport verify_clique_partition(const StarGraph& g,
                                           const StructureOptions& opt = {});
VerificationReport verify_clique_swap_edges(const StarGraph& g,
                                            const StructureOptions& opt = {});
VerificationReport verify_subgraph_decomposition(const StarGraph& g,
                                                 const StructureOptions& opt = {});
VerificationReport verify_swap_edge_girth(const StarGraph& g,
                                          const StructureOptions& opt = {});

/// The four structural suites on S_{n,k}, 2 <= k <= n-1, in the order above.
std::vector<VerificationReport> verify_structure(int n, int k,
                                                 const StructureOptions& opt = {});
std::vector<VerificationReport> verify_structure(const StarGraph& g,
                                                 const StructureOptions& opt = {});

struct TheoremOptions {
  SearchBudget budget;
  unsigned workers = 1;
  /// Seed the oracle with the clique construction as upper bound.
  bool use_hint = true;
};

/// Runs the exact oracle and compares with the closed form. Requires the
/// theorem domain.
VerificationReport verify_theorem(const StarGraph& g, int h,
                                  const TheoremOptions& opt = {});
VerificationReport verify_theorem(int n, int k, int h,
                                  const TheoremOptions& opt = {});

/// Oracle-only cell for h outside the theorem domain. For the star graph
/// S_{n,n-1} with h = 2 the known value 6(n-3) is used as reference.
VerificationReport verify_oracle_cell(const StarGraph& g, int h,
                                      const TheoremOptions& opt = {});

struct GridSpec {
  int n_min = 4;
  int n_max = 4;
  int k_min = 2;
  std::optional<int> k_max;
  /// Extra h values beyond n-k per (n,k); those cells are out of domain.
  int extra_h = 0;
  TheoremOptions theorem;
  StructureOptions structure;
  /// Overrides how a theorem/oracle cell is computed (e.g. through a cache).
  std::function<VerificationReport(const StarGraph&, int h)> cell_runner;
};

struct GridRow {
  int n = 0;
  int k = 0;
  int h = 0;
  bool in_domain = true;
  std::optional<int> expected;
  std::optional<std::size_t> value;
  std::size_t exhaustive_below = 0;
  ReportStatus status = ReportStatus::pass;
  double elapsed_ms = 0.0;
};

struct GridResult {
  std::vector<VerificationReport> reports;
  std::vector<GridRow> rows;

  bool any_fail() const;
  bool any_skipped() const;
};

/// Structure suites, then theorem cells ordered by (n,k,h), then one monotone
/// chain report per (n,k).
GridResult grid_run(const GridSpec& spec);

/// Aligned plain-text rendering of the grid rows.
std::string render_summary_table(const std::vector<GridRow>& rows);

}  // namespace nkstar

#endif  // NKSTAR_VERIFICATION_HPP
