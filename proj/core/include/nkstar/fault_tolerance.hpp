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

#ifndef NKSTAR_FAULT_TOLERANCE_HPP
#define NKSTAR_FAULT_TOLERANCE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nkstar/graph.hpp"
#include "nkstar/star_graph.hpp"

namespace nkstar {

/// A vertex set S claimed to be an h-cut, with a witness component X of G-S.
struct CutCertificate {
  VertexSet cut;
  VertexSet witness;
  int h = 0;
  std::size_t size = 0;
  bool valid = false;
  std::string diagnostic;
};

/// Validates `cut` with is_h_cut() and fills in the witness: the smallest
/// component of G-S, ties broken by smallest member. `witness` stays empty
/// when S is not a cut at all.
CutCertificate certify_cut(const GraphView& g, VertexSet cut, int h);

/// True iff 2 <= k <= n-1 and 0 <= h <= n-k.
bool in_theorem_domain(int n, int k, int h);

/// n + h(k-2) - 1 for (n,k,h) in the theorem domain; DomainError otherwise.
int theorem_value(int n, int k, int h);

/// The clique-based cut: X is h+1 vertices of the clique V_alpha, and S is
/// the rest of the clique plus every swap neighbor of X.
///
/// Throws DomainError when |X| != h+1, X leaves the clique, or (n,k,h) is
/// outside the theorem domain. Throws InternalInconsistency if the result
/// does not validate or |S| differs from theorem_value().
CutCertificate construct_cut(const StarGraph& g, const CliqueId& alpha,
                             std::span<const VertexId> x, int h);

/// Same, using the lexicographically first clique and its first h+1 members.
CutCertificate construct_cut(const StarGraph& g, int h);

/// Wall-clock and candidate-count limits for the exhaustive oracle. A limit
/// of zero is exhausted before any work is done.
struct SearchBudget {
  std::optional<double> seconds;
  std::optional<std::uint64_t> candidates;

  bool exhausted_at_start() const {
    return (seconds && *seconds <= 0.0) || (candidates && *candidates == 0);
  }
};

struct SearchOptions {
  /// Known upper bound. Once every smaller size is excluded the search stops
  /// and returns the hint, using `hint_certificate` when given.
  std::optional<std::size_t> upper_hint;
  std::optional<CutCertificate> hint_certificate;
  SearchBudget budget;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned workers = 1;
  /// Start enumeration at the flow-computed connectivity instead of size 0.
  bool start_from_connectivity = true;
};

struct LevelSummary {
  std::size_t size = 0;
  std::uint64_t candidates = 0;
  std::uint64_t total = 0;
  bool hit = false;
  bool complete = false;
};

/// Outcome of the exact h-super connectivity oracle.
///
/// `exhaustive_below` is the frontier: no h-cut of any size below it exists.
/// Sizes below `lower_bound_start` are excluded by the connectivity bound,
/// the rest by enumeration. When `value` is set it equals `exhaustive_below`.
struct SearchResult {
  int h = 0;
  std::size_t order = 0;
  std::optional<std::size_t> value;
  std::optional<CutCertificate> certificate;
  std::size_t exhaustive_below = 0;
  std::size_t lower_bound_start = 0;
  std::optional<std::size_t> upper_bound;
  std::uint64_t candidates_examined = 0;
  double elapsed_ms = 0.0;
  bool budget_hit = false;
  std::vector<LevelSummary> levels;

  bool proven_minimum() const {
    return value && certificate && exhaustive_below == *value;
  }
};

/// Minimum h-cut by exhaustive colex enumeration of candidate sets by size.
SearchResult kappa_super_exact(const GraphView& g, int h,
                               const SearchOptions& options = {});

/// Every h-cut of exactly `size` vertices, in colex order.
std::vector<VertexSet> enumerate_h_cuts(const GraphView& g, int h,
                                        std::size_t size, unsigned workers = 1);

/// Heuristic upper bound: the best N(X) over connected X with |X| <=
/// max_fragment and minimum internal degree >= h that validates as an h-cut.
struct FragmentBound {
  std::optional<std::size_t> value;
  std::optional<CutCertificate> certificate;
  std::uint64_t fragments_examined = 0;
};

FragmentBound kappa_super_upper(const GraphView& g, int h,
                                std::size_t max_fragment);

}  // namespace nkstar

#endif  // NKSTAR_FAULT_TOLERANCE_HPP
