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

#include "nkstar/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "nkstar/errors.hpp"

namespace nkstar {

Graph::Graph(std::size_t order, std::span<const Edge> edges)
    : adjacency_(order), words_per_row_(words_for(order)) {
  if (order > std::numeric_limits<VertexId>::max()) {
    throw DomainError("graph order too large");
  }
  rows_.assign(order * words_per_row_, 0);
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("self-loop at " + std::to_string(u));
    if (adjacent(u, v)) {
      throw DomainError("duplicate edge {" + std::to_string(u) + "," +
                        std::to_string(v) + "}");
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    rows_[u * words_per_row_ + v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
    rows_[v * words_per_row_ + u / kWordBits] |= std::uint64_t{1} << (u % kWordBits);
    ++edge_count_;
  }
  for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

Graph Graph::complete(std::size_t order) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < order; ++u) {
    for (VertexId v = u + 1; v < order; ++v) edges.emplace_back(u, v);
  }
  return Graph(order, edges);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < order(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::min_degree() const {
  std::size_t d = std::numeric_limits<std::size_t>::max();
  for (const auto& a : adjacency_) d = std::min(d, a.size());
  return adjacency_.empty() ? 0 : d;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& a : adjacency_) d = std::max(d, a.size());
  return d;
}

void Graph::check_vertex(VertexId v) const {
  if (v >= order()) {
    throw DomainError("vertex id " + std::to_string(v) +
                      " outside graph of order " + std::to_string(order()));
  }
}

InducedSubgraph induce(const Graph& g, const VertexSet& keep) {
  if (keep.universe() != g.order()) {
    throw DomainError("vertex set universe does not match graph order");
  }
  InducedSubgraph out;
  out.to_parent = keep.members();
  std::vector<VertexId> local(g.order(), std::numeric_limits<VertexId>::max());
  for (VertexId i = 0; i < out.to_parent.size(); ++i) local[out.to_parent[i]] = i;
  std::vector<Edge> edges;
  for (VertexId i = 0; i < out.to_parent.size(); ++i) {
    for (VertexId w : g.neighbors(out.to_parent[i])) {
      if (keep.test(w) && local[w] > i) edges.emplace_back(i, local[w]);
    }
  }
  out.graph = Graph(out.to_parent.size(), edges);
  return out;
}

GraphView::GraphView(const Graph& g, VertexSet removed_set)
    : graph(&g), removed(std::move(removed_set)) {
  if (removed.universe() != g.order()) {
    throw DomainError("removed-set universe does not match graph order");
  }
}

namespace {

VertexSet effective_removed(const GraphView& g, const VertexSet& extra) {
  if (extra.universe() != g.order()) {
    throw DomainError("vertex set universe does not match graph order");
  }
  VertexSet r = g.removed;
  r |= extra;
  return r;
}

}  // namespace

std::vector<std::vector<VertexId>> components(const GraphView& g,
                                              const VertexSet& removed) {
  const VertexSet gone = effective_removed(g, removed);
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.order(); ++s) {
    if (seen[s] || gone.test(s)) continue;
    std::vector<VertexId> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId w : g.graph->neighbors(v)) {
        if (!seen[w] && !gone.test(w)) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::string HCutCheck::diagnostic() const {
  switch (failure) {
    case CutFailure::none:
      return "h-cut: " + std::to_string(component_count) +
             " components remain";
    case CutFailure::connected:
      return surviving < 2 ? "not a cut: fewer than two vertices survive"
                           : "not a cut: remaining graph is connected";
    case CutFailure::low_degree:
      return "not an h-cut: vertex " + std::to_string(*low_vertex) +
             " keeps only " + std::to_string(low_vertex_degree) +
             " neighbors";
  }
  return {};
}

HCutCheck is_h_cut(const GraphView& g, const VertexSet& s, int h) {
  if (h < 0) throw DomainError("h must be non-negative");
  const VertexSet gone = effective_removed(g, s);
  HCutCheck result;
  result.surviving = g.order() - gone.count();

  // Degree first: cheaper than labeling components.
  for (VertexId v = 0; v < g.order(); ++v) {
    if (gone.test(v)) continue;
    std::size_t d = 0;
    for (VertexId w : g.graph->neighbors(v)) d += gone.test(w) ? 0 : 1;
    if (d < static_cast<std::size_t>(h)) {
      result.failure = CutFailure::low_degree;
      result.low_vertex = v;
      result.low_vertex_degree = d;
      result.component_count = components(g, s).size();
      return result;
    }
  }
  result.component_count = components(g, s).size();
  if (result.component_count < 2) {
    result.failure = CutFailure::connected;
    return result;
  }
  result.is_cut = true;
  result.failure = CutFailure::none;
  return result;
}

namespace {

// Residual network for the split-vertex transformation. Vertex v becomes
// in-node 2v and out-node 2v+1 joined by a unit arc.
class SplitFlow {
 public:
  explicit SplitFlow(const Graph& g) : nodes_(2 * g.order()), head_(nodes_, -1) {
    const int big = static_cast<int>(g.order());
    for (VertexId v = 0; v < g.order(); ++v) {
      add_arc(2 * v, 2 * v + 1, 1);
      for (VertexId w : g.neighbors(v)) add_arc(2 * v + 1, 2 * w, big);
    }
    initial_cap_ = cap_;
  }

  std::size_t max_flow(VertexId s, VertexId t, std::size_t cap) {
    cap_ = initial_cap_;
    const int source = static_cast<int>(2 * s + 1);
    const int sink = static_cast<int>(2 * t);
    std::size_t flow = 0;
    std::vector<int> parent_arc(nodes_);
    std::deque<int> queue;
    while (flow < cap) {
      std::fill(parent_arc.begin(), parent_arc.end(), -1);
      parent_arc[source] = -2;
      queue.assign(1, source);
      while (!queue.empty() && parent_arc[sink] == -1) {
        const int x = queue.front();
        queue.pop_front();
        for (int a = head_[x]; a != -1; a = next_[a]) {
          const int y = to_[a];
          if (cap_[a] > 0 && parent_arc[y] == -1) {
            parent_arc[y] = a;
            queue.push_back(y);
          }
        }
      }
      if (parent_arc[sink] == -1) break;
      for (int y = sink; y != source;) {
        const int a = parent_arc[y];
        cap_[a] -= 1;
        cap_[a ^ 1] += 1;
        y = to_[a ^ 1];
      }
      ++flow;
    }
    return flow;
  }

 private:
  void add_arc(std::size_t from, std::size_t to, int capacity) {
    auto push = [&](std::size_t a, std::size_t b, int c) {
      to_.push_back(static_cast<int>(b));
      cap_.push_back(c);
      next_.push_back(head_[a]);
      head_[a] = static_cast<int>(to_.size()) - 1;
    };
    push(from, to, capacity);
    push(to, from, 0);
  }

  std::size_t nodes_;
  std::vector<int> head_;
  std::vector<int> to_;
  std::vector<int> next_;
  std::vector<int> cap_;
  std::vector<int> initial_cap_;
};

std::size_t connectivity_of(const Graph& g) {
  const std::size_t order = g.order();
  if (order < 2) throw DomainError("vertex connectivity needs >= 2 vertices");
  if (g.edge_count() == order * (order - 1) / 2) return order - 1;

  VertexId v = 0;
  for (VertexId u = 1; u < order; ++u) {
    if (g.degree(u) < g.degree(v)) v = u;
  }
  std::size_t best = g.degree(v);
  if (best == 0) return 0;

  SplitFlow flow(g);
  // Some minimum cut misses v: then v and some non-neighbor are separated.
  for (VertexId u = 0; u < order && best > 0; ++u) {
    if (u == v || g.adjacent(u, v)) continue;
    best = std::min(best, flow.max_flow(v, u, best));
  }
  // Every minimum cut contains v: then two neighbors of v are separated.
  const auto nv = g.neighbors(v);
  for (std::size_t i = 0; i < nv.size() && best > 0; ++i) {
    for (std::size_t j = i + 1; j < nv.size() && best > 0; ++j) {
      if (g.adjacent(nv[i], nv[j])) continue;
      best = std::min(best, flow.max_flow(nv[i], nv[j], best));
    }
  }
  return best;
}

}  // namespace

std::size_t local_vertex_connectivity(const Graph& g, VertexId s, VertexId t,
                                      std::size_t cap) {
  g.check_vertex(s);
  g.check_vertex(t);
  if (s == t || g.adjacent(s, t)) {
    throw DomainError("local connectivity needs distinct nonadjacent ends");
  }
  SplitFlow flow(g);
  return flow.max_flow(s, t, cap);
}

std::size_t vertex_connectivity(const GraphView& g) {
  if (g.order() == 0) throw DomainError("vertex connectivity of empty graph");
  if (g.removed.empty()) return connectivity_of(*g.graph);
  const InducedSubgraph sub = induce(*g.graph, g.removed.complement());
  if (sub.graph.order() == 0) {
    throw DomainError("vertex connectivity of empty graph");
  }
  return connectivity_of(sub.graph);
}

std::optional<std::size_t> shortest_cycle_through_edge(const GraphView& g,
                                                       VertexId u, VertexId v) {
  g.graph->check_vertex(u);
  g.graph->check_vertex(v);
  if (!g.graph->adjacent(u, v) || g.removed.test(u) || g.removed.test(v)) {
    throw DomainError("{" + std::to_string(u) + "," + std::to_string(v) +
                      "} is not an edge");
  }
  std::vector<std::size_t> dist(g.order(), std::numeric_limits<std::size_t>::max());
  std::deque<VertexId> queue{u};
  dist[u] = 0;
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : g.graph->neighbors(x)) {
      if (g.removed.test(y) || dist[y] != std::numeric_limits<std::size_t>::max()) {
        continue;
      }
      if (x == u && y == v) continue;  // the edge itself is deleted
      dist[y] = dist[x] + 1;
      if (y == v) return dist[y] + 1;
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

}  // namespace nkstar
