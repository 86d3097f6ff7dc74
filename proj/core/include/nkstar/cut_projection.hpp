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

#ifndef NKSTAR_CUT_PROJECTION_HPP
#define NKSTAR_CUT_PROJECTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "nkstar/fault_tolerance.hpp"
#include "nkstar/star_graph.hpp"

namespace nkstar {

/// Intersections of X, Y = V - S - X and S with one subgraph S^{t:i}.
struct ProjectionSlice {
  Symbol i = 0;
  std::vector<VertexId> x;
  std::vector<VertexId> y;
  std::vector<VertexId> s;
  /// Only evaluated for i in J': whether S_i is an (h-1)-cut of S^{t:i}
  /// viewed as S_{n-1,k-1}.
  std::optional<bool> s_is_lower_cut;
  std::string diagnostic;
};

/// Decomposition of a minimum h-cut along the subgraphs S^{t:1..n}.
///
/// X is the smallest component of G - S (ties: smallest member), which also
/// satisfies the "some component" reading. J = {i : X_i nonempty},
/// J' = {i in J : Y_i nonempty}, T = {i : Y_i nonempty}.
struct ProjectionAnalysis {
  int n = 0;
  int k = 0;
  int h = 0;
  int t = 0;
  std::size_t cut_size = 0;
  std::vector<VertexId> x;
  std::vector<VertexId> y;
  std::vector<ProjectionSlice> slices;  // i = 1..n
  std::vector<Symbol> j;
  std::vector<Symbol> j_prime;
  std::vector<Symbol> t_set;

  /// Every S_i with i in J' is an (h-1)-cut of its subgraph.
  bool slices_are_lower_cuts = false;
  /// J union T covers {1..n}.
  bool covers_alphabet = false;
  /// |J'| * value(n-1,k-1,h-1) from the closed form.
  std::size_t product_bound = 0;
  bool product_bound_holds = false;
  std::string witness_note;

  bool all_hold() const {
    return slices_are_lower_cuts && covers_alphabet && product_bound_holds;
  }
};

/// Requires 3 <= k <= n-1, 1 <= h <= n-k, 2 <= t <= k, a valid `cert` for the
/// same h, and a `proof` establishing that cert.size is the minimum h-cut
/// size (proof.proven_minimum() with proof.value == cert.size).
ProjectionAnalysis cut_projection(const StarGraph& g, const CutCertificate& cert,
                                  const SearchResult& proof, int t);

/// Uses the proof's own certificate.
ProjectionAnalysis cut_projection(const StarGraph& g, const SearchResult& proof,
                                  int t);

}  // namespace nkstar

#endif  // NKSTAR_CUT_PROJECTION_HPP
