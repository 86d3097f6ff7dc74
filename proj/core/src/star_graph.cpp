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

#include "nkstar/star_graph.hpp"

#include <algorithm>
#include <ostream>

#include "nkstar/errors.hpp"

namespace nkstar {

EdgeKind EdgeKind::swap(int position) {
  if (position < 2) {
    throw DomainError("swap position must be >= 2, got " +
                      std::to_string(position));
  }
  return {Type::swap, position};
}

std::string EdgeKind::to_string() const {
  return is_swap() ? "swap:" + std::to_string(position) : "unswap";
}

std::vector<LabeledNeighbor> star_neighbors(const KPermutation& p) {
  const auto sym = p.symbols();
  std::vector<LabeledNeighbor> out;
  out.reserve(static_cast<std::size_t>(p.n() - 1));
  for (int i = 2; i <= p.k(); ++i) {
    std::vector<Symbol> q(sym.begin(), sym.end());
    std::swap(q[0], q[static_cast<std::size_t>(i - 1)]);
    out.push_back({KPermutation(p.n(), std::move(q)), EdgeKind::swap(i)});
  }
  for (Symbol a = 1; a <= p.n(); ++a) {
    if (p.contains(a)) continue;
    std::vector<Symbol> q(sym.begin(), sym.end());
    q[0] = a;
    out.push_back({KPermutation(p.n(), std::move(q)), EdgeKind::unswap()});
  }
  return out;
}

StarGraph StarGraph::build(int n, int k) {
  if (k < 1 || k >= n) {
    throw DomainError("S_{n,k} needs 1 <= k <= n-1, got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k));
  }
  StarGraph g;
  g.n_ = n;
  g.k_ = k;
  g.labels_ = enumerate_k_permutations(n, k);
  g.adjacency_.resize(g.labels_.size());

  std::vector<Edge> edges;
  edges.reserve(g.labels_.size() * static_cast<std::size_t>(n - 1) / 2);
  for (VertexId v = 0; v < g.labels_.size(); ++v) {
    for (auto& nb : star_neighbors(g.labels_[v])) {
      const auto w = static_cast<VertexId>(rank(nb.vertex));
      g.adjacency_[v].push_back({w, nb.kind});
      if (v < w) {
        edges.emplace_back(v, w);
        if (nb.kind.is_swap()) ++g.swap_edges_;
      }
    }
    std::sort(g.adjacency_[v].begin(), g.adjacency_[v].end(),
              [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
  }
  g.graph_ = Graph(g.labels_.size(), edges);
  return g;
}

const KPermutation& StarGraph::label(VertexId v) const {
  graph_.check_vertex(v);
  return labels_[v];
}

VertexId StarGraph::id_of(const KPermutation& p) const {
  if (p.n() != n_ || p.k() != k_) {
    throw DomainError("'" + to_string(p) + "' is not a vertex of S_{" +
                      std::to_string(n_) + "," + std::to_string(k_) + "}");
  }
  return static_cast<VertexId>(rank(p));
}

VertexId StarGraph::parse_vertex(std::string_view text) const {
  return id_of(parse_k_permutation(text, n_, k_));
}

const std::vector<StarGraph::Neighbor>& StarGraph::neighbors(VertexId v) const {
  graph_.check_vertex(v);
  return adjacency_[v];
}

EdgeKind StarGraph::edge_kind(VertexId u, VertexId v) const {
  for (const auto& nb : neighbors(u)) {
    if (nb.id == v) return nb.kind;
  }
  throw DomainError(vertex_name(u) + " and " + vertex_name(v) +
                    " are not adjacent");
}

CliqueId clique_of(const StarGraph& g, VertexId v) {
  const auto sym = g.label(v).symbols();
  return {KPermutation(g.n(), std::vector<Symbol>(sym.begin() + 1, sym.end()))};
}

std::vector<VertexId> clique_members(const StarGraph& g, const CliqueId& c) {
  if (c.suffix.n() != g.n() || c.suffix.k() != g.k() - 1) {
    throw DomainError("clique suffix '" + to_string(c.suffix) +
                      "' must be a " + std::to_string(g.k() - 1) +
                      "-permutation of {1.." + std::to_string(g.n()) + "}");
  }
  std::vector<VertexId> out;
  for (Symbol a = 1; a <= g.n(); ++a) {
    if (c.suffix.contains(a)) continue;
    std::vector<Symbol> q{a};
    q.insert(q.end(), c.suffix.symbols().begin(), c.suffix.symbols().end());
    out.push_back(g.id_of(KPermutation(g.n(), std::move(q))));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CliqueId> all_cliques(const StarGraph& g) {
  if (g.k() == 1) return {CliqueId{KPermutation(g.n(), {})}};
  std::vector<CliqueId> out;
  for (auto& s : enumerate_k_permutations(g.n(), g.k() - 1)) {
    out.push_back({std::move(s)});
  }
  return out;
}

namespace {

void check_subgraph_id(int n, int k, SubgraphId s) {
  if (k < 2 || s.t < 2 || s.t > k || s.i < 1 || s.i > n) {
    throw DomainError("S^{t:i} needs 2 <= t <= k and 1 <= i <= n, got t=" +
                      std::to_string(s.t) + ", i=" + std::to_string(s.i) +
                      " with n=" + std::to_string(n) + ", k=" + std::to_string(k));
  }
}

}  // namespace

std::vector<VertexId> subgraph(const StarGraph& g, SubgraphId s) {
  check_subgraph_id(g.n(), g.k(), s);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.label(v).bit(s.t) == s.i) out.push_back(v);
  }
  return out;
}

KPermutation relabel_into_subgraph(const KPermutation& p, SubgraphId s) {
  check_subgraph_id(p.n(), p.k(), s);
  if (p.bit(s.t) != s.i) {
    throw DomainError("'" + to_string(p) + "' has no symbol " +
                      std::to_string(s.i) + " at position " + std::to_string(s.t));
  }
  std::vector<Symbol> q;
  for (int pos = 1; pos <= p.k(); ++pos) {
    if (pos == s.t) continue;
    const Symbol x = p.bit(pos);
    q.push_back(x > s.i ? x - 1 : x);
  }
  return KPermutation(p.n() - 1, std::move(q));
}

KPermutation relabel_from_subgraph(const KPermutation& q, int n, SubgraphId s) {
  if (q.n() != n - 1) throw DomainError("relabel: alphabet size mismatch");
  check_subgraph_id(n, q.k() + 1, s);
  std::vector<Symbol> p;
  for (int pos = 1; pos <= q.k() + 1; ++pos) {
    if (pos == s.t) {
      p.push_back(s.i);
      continue;
    }
    const Symbol x = q.bit(pos < s.t ? pos : pos - 1);
    p.push_back(x >= s.i ? x + 1 : x);
  }
  return KPermutation(n, std::move(p));
}

std::vector<Edge> cross_edges(const StarGraph& g, int t, Symbol i, Symbol j) {
  check_subgraph_id(g.n(), g.k(), {t, i});
  check_subgraph_id(g.n(), g.k(), {t, j});
  if (i == j) throw DomainError("cross_edges needs i != j");
  std::vector<Edge> out;
  for (VertexId u : subgraph(g, {t, i})) {
    for (const auto& nb : g.neighbors(u)) {
      if (g.label(nb.id).bit(t) == j) out.emplace_back(u, nb.id);
    }
  }
  return out;
}

ReferenceStar reference_star(int n) {
  if (n < 2) throw DomainError("reference star graph needs n >= 2");
  ReferenceStar ref{n, enumerate_k_permutations(n, n), {}};
  std::vector<Edge> edges;
  for (VertexId v = 0; v < ref.labels.size(); ++v) {
    const auto sym = ref.labels[v].symbols();
    for (int i = 2; i <= n; ++i) {
      std::vector<Symbol> q(sym.begin(), sym.end());
      std::swap(q[0], q[static_cast<std::size_t>(i - 1)]);
      const auto w = static_cast<VertexId>(rank(KPermutation(n, std::move(q))));
      if (v < w) edges.emplace_back(v, w);
    }
  }
  ref.graph = Graph(ref.labels.size(), edges);
  return ref;
}

ReferenceIsomorphism iso_to_reference(const StarGraph& g,
                                      const ReferenceStar& ref) {
  if (g.k() != g.n() - 1 || ref.n != g.n()) {
    throw DomainError("iso_to_reference needs S_{n,n-1} and S_n with equal n");
  }
  ReferenceIsomorphism iso;
  iso.map.reserve(g.order());
  std::vector<char> hit(ref.graph.order(), 0);
  for (VertexId v = 0; v < g.order(); ++v) {
    const auto& p = g.label(v);
    std::vector<Symbol> full(p.symbols().begin(), p.symbols().end());
    for (Symbol a = 1; a <= g.n(); ++a) {
      if (!p.contains(a)) full.push_back(a);
    }
    const auto w = static_cast<VertexId>(rank(KPermutation(g.n(), std::move(full))));
    if (hit[w]) throw InternalInconsistency("iso_to_reference: not injective");
    hit[w] = 1;
    iso.map.push_back(w);
  }
  if (g.order() != ref.graph.order() || g.edge_count() != ref.graph.edge_count()) {
    throw InternalInconsistency("iso_to_reference: order or size mismatch");
  }
  for (auto [u, v] : g.graph().edges()) {
    if (!ref.graph.adjacent(iso.map[u], iso.map[v])) {
      throw InternalInconsistency("iso_to_reference: edge " + g.vertex_name(u) +
                                  " -- " + g.vertex_name(v) + " not preserved");
    }
    ++iso.edges_checked;
  }
  return iso;
}

void write_edge_list(const StarGraph& g, std::ostream& out) {
  for (auto [u, v] : g.graph().edges()) {
    out << g.vertex_name(u) << '\t' << g.vertex_name(v) << '\t'
        << g.edge_kind(u, v).to_string() << '\n';
  }
}

void write_dot(const StarGraph& g, std::ostream& out) {
  out << "graph \"S_" << g.n() << "_" << g.k() << "\" {\n";
  for (VertexId v = 0; v < g.order(); ++v) {
    out << "  \"" << g.vertex_name(v) << "\";\n";
  }
  for (auto [u, v] : g.graph().edges()) {
    out << "  \"" << g.vertex_name(u) << "\" -- \"" << g.vertex_name(v)
        << "\" [kind=\"" << g.edge_kind(u, v).to_string() << "\"];\n";
  }
  out << "}\n";
}

}  // namespace nkstar
