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

#ifndef NKSTAR_STAR_GRAPH_HPP
#define NKSTAR_STAR_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nkstar/graph.hpp"
#include "nkstar/permutation.hpp"

namespace nkstar {

/// Classification of an (n,k)-star edge. Swap edges exchange the leading
/// symbol with the one at `position` (2..k); unswap edges replace the leading
/// symbol with an unused one.
struct EdgeKind {
  enum class Type { swap, unswap };

  Type type = Type::unswap;
  int position = 0;  // 2..k for swap edges, 0 for unswap edges

  static EdgeKind swap(int position);
  static EdgeKind unswap() { return {}; }

  bool is_swap() const noexcept { return type == Type::swap; }
  /// "swap:i" or "unswap".
  std::string to_string() const;

  friend bool operator==(const EdgeKind&, const EdgeKind&) = default;
};

struct LabeledNeighbor {
  KPermutation vertex;
  EdgeKind kind;
};

/// Neighbors of `p` in S_{n,k} computed directly from the adjacency rules,
/// without materializing the graph. Swap neighbors first (by position), then
/// unswap neighbors by replacement symbol.
std::vector<LabeledNeighbor> star_neighbors(const KPermutation& p);

/// Identifies the clique V_alpha: all vertices whose symbols 2..k equal
/// `suffix`. For k = 1 the suffix is empty and the clique is the whole graph.
struct CliqueId {
  KPermutation suffix;
};

/// Identifies S^{t:i}: vertices whose t-th symbol equals i.
struct SubgraphId {
  int t;
  Symbol i;
};

/// The (n,k)-star graph S_{n,k}, with vertex IDs given by lexicographic rank.
class StarGraph {
 public:
  struct Neighbor {
    VertexId id;
    EdgeKind kind;
  };

  /// Requires 1 <= k <= n-1.
  static StarGraph build(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::size_t order() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return graph_.edge_count(); }

  const Graph& graph() const noexcept { return graph_; }
  operator GraphView() const { return GraphView(graph_); }  // NOLINT

  const KPermutation& label(VertexId v) const;
  VertexId id_of(const KPermutation& p) const;
  VertexId parse_vertex(std::string_view text) const;
  std::string vertex_name(VertexId v) const { return to_string(label(v)); }

  const std::vector<Neighbor>& neighbors(VertexId v) const;
  /// Throws DomainError when u and v are not adjacent.
  EdgeKind edge_kind(VertexId u, VertexId v) const;

  std::size_t swap_edge_count() const noexcept { return swap_edges_; }
  std::size_t unswap_edge_count() const noexcept {
    return edge_count() - swap_edges_;
  }

 private:
  StarGraph() = default;

  int n_ = 0;
  int k_ = 0;
  std::vector<KPermutation> labels_;
  std::vector<std::vector<Neighbor>> adjacency_;
  Graph graph_;
  std::size_t swap_edges_ = 0;
};

// Cliques V_alpha.

CliqueId clique_of(const StarGraph& g, VertexId v);
/// Exactly n-k+1 vertices, ascending.
std::vector<VertexId> clique_members(const StarGraph& g, const CliqueId& c);
/// Every clique of `g`, ordered by the lexicographic order of the suffixes.
std::vector<CliqueId> all_cliques(const StarGraph& g);

// Recursive decomposition S^{t:i}.

std::vector<VertexId> subgraph(const StarGraph& g, SubgraphId s);

/// Maps a vertex of S^{t:i} to S_{n-1,k-1}: drop position t and rename the
/// remaining symbols order-preservingly onto {1..n-1}.
KPermutation relabel_into_subgraph(const KPermutation& p, SubgraphId s);

/// Inverse of relabel_into_subgraph().
KPermutation relabel_from_subgraph(const KPermutation& q, int n, SubgraphId s);

/// All edges joining S^{t:i} and S^{t:j}, each as (endpoint in i, endpoint
/// in j), ordered by the first endpoint.
std::vector<Edge> cross_edges(const StarGraph& g, int t, Symbol i, Symbol j);

// Reference star graph S_n on full permutations.

struct ReferenceStar {
  int n;
  std::vector<KPermutation> labels;  // all n! permutations, lexicographic
  Graph graph;
};

/// S_n with adjacency "swap position 1 with position i" only. Requires n >= 2.
ReferenceStar reference_star(int n);

struct ReferenceIsomorphism {
  /// Vertex ID of S_{n,n-1} to vertex ID of the reference star.
  std::vector<VertexId> map;
  std::size_t edges_checked = 0;
};

/// Appends the missing symbol to every vertex of S_{n,n-1} and verifies the
/// result is an adjacency-preserving bijection onto reference_star(n).
/// Throws InternalInconsistency if verification fails.
ReferenceIsomorphism iso_to_reference(const StarGraph& g,
                                      const ReferenceStar& ref);

// Export.

/// One "u<TAB>v<TAB>kind" line per edge, sorted by (u, v) vertex ID, u < v.
void write_edge_list(const StarGraph& g, std::ostream& out);
void write_dot(const StarGraph& g, std::ostream& out);

}  // namespace nkstar

#endif  // NKSTAR_STAR_GRAPH_HPP
