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

#ifndef NKSTAR_GRAPH_HPP
#define NKSTAR_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nkstar/vertex_set.hpp"

namespace nkstar {

using Edge = std::pair<VertexId, VertexId>;

/// Simple undirected graph with both sorted adjacency lists and bit-parallel
/// adjacency rows. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  /// Throws DomainError on self-loops, duplicate edges or bad endpoints.
  Graph(std::size_t order, std::span<const Edge> edges);

  static Graph complete(std::size_t order);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t words_per_row() const noexcept { return words_per_row_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return adjacency_[v];
  }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  std::span<const std::uint64_t> row(VertexId v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * words_per_row_,
            words_per_row_};
  }
  bool adjacent(VertexId u, VertexId v) const {
    return (row(u)[v / kWordBits] >> (v % kWordBits)) & 1U;
  }

  /// Edges with u < v, sorted.
  std::vector<Edge> edges() const;
  std::size_t min_degree() const;
  std::size_t max_degree() const;

  void check_vertex(VertexId v) const;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::uint64_t> rows_;
  std::size_t words_per_row_ = 0;
  std::size_t edge_count_ = 0;
};

/// Subgraph induced by a vertex set, with the map back to parent IDs.
struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> to_parent;
};

InducedSubgraph induce(const Graph& g, const VertexSet& keep);

/// A graph with an optional overlay of deleted vertices. Cheap to copy when
/// nothing is removed.
struct GraphView {
  GraphView(const Graph& g) : graph(&g), removed(g.order()) {}  // NOLINT
  GraphView(const Graph& g, VertexSet removed_set);

  const Graph* graph;
  VertexSet removed;

  std::size_t order() const noexcept { return graph->order(); }
};

/// Connected components of G - removed (combined with the view's overlay).
/// Components are sorted by their smallest member, members ascending.
std::vector<std::vector<VertexId>> components(const GraphView& g,
                                              const VertexSet& removed);

enum class CutFailure { none, connected, low_degree };

struct HCutCheck {
  bool is_cut = false;
  CutFailure failure = CutFailure::connected;
  std::size_t component_count = 0;
  std::size_t surviving = 0;
  /// Set when failure == low_degree: the first vertex of degree < h in G-S.
  std::optional<VertexId> low_vertex;
  std::size_t low_vertex_degree = 0;

  explicit operator bool() const noexcept { return is_cut; }
  std::string diagnostic() const;
};

/// True iff G-S has at least two components and minimum degree >= h.
HCutCheck is_h_cut(const GraphView& g, const VertexSet& s, int h);

/// Classical vertex connectivity via unit-capacity flow on the split-vertex
/// network. Complete graphs report order-1. Disconnected graphs report 0.
std::size_t vertex_connectivity(const GraphView& g);

/// Maximum number of internally vertex-disjoint s-t paths, capped at `cap`.
/// `s` and `t` must be distinct and nonadjacent.
std::size_t local_vertex_connectivity(const Graph& g, VertexId s, VertexId t,
                                      std::size_t cap);

/// Length of a shortest cycle through edge {u,v}: 1 + dist(u,v) in G - e.
/// nullopt when no cycle passes through the edge.
std::optional<std::size_t> shortest_cycle_through_edge(const GraphView& g,
                                                       VertexId u, VertexId v);

}  // namespace nkstar

#endif  // NKSTAR_GRAPH_HPP
