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

// Independent reference implementations used only by tests. Nothing here
// calls into the optimized paths it is used to check.

#ifndef NKSTAR_TESTS_NAIVE_ORACLES_HPP
#define NKSTAR_TESTS_NAIVE_ORACLES_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

namespace nkstar::testing {

using Labels = std::vector<std::vector<int>>;
using Matrix = std::vector<std::vector<bool>>;

/// All k-permutations of {1..n} via std::next_permutation over the full
/// alphabet, deduplicated on the k-prefix and sorted.
inline Labels naive_k_permutations(int n, int k) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  std::set<std::vector<int>> seen;
  do {
    seen.insert(std::vector<int>(all.begin(), all.begin() + k));
  } while (std::next_permutation(all.begin(), all.end()));
  return Labels(seen.begin(), seen.end());
}

/// Adjacency of S_{n,k} straight from the two rules, by label lookup.
inline Matrix naive_star_matrix(int n, int k, const Labels& labels) {
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) index[labels[i]] = i;
  Matrix adj(labels.size(), std::vector<bool>(labels.size(), false));
  for (int v = 0; v < static_cast<int>(labels.size()); ++v) {
    const auto& p = labels[v];
    for (int i = 1; i < k; ++i) {
      auto q = p;
      std::swap(q[0], q[i]);
      adj[v][index.at(q)] = true;
    }
    for (int a = 1; a <= n; ++a) {
      if (std::find(p.begin(), p.end(), a) != p.end()) continue;
      auto q = p;
      q[0] = a;
      adj[v][index.at(q)] = true;
    }
  }
  return adj;
}

inline int naive_components(const Matrix& adj, const std::vector<bool>& removed) {
  const int order = static_cast<int>(adj.size());
  std::vector<bool> seen(order, false);
  int comps = 0;
  for (int s = 0; s < order; ++s) {
    if (removed[s] || seen[s]) continue;
    ++comps;
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w = 0; w < order; ++w) {
        if (adj[v][w] && !removed[w] && !seen[w]) {
          seen[w] = true;
          q.push(w);
        }
      }
    }
  }
  return comps;
}

inline bool naive_is_h_cut(const Matrix& adj, const std::vector<bool>& removed, int h) {
  const int order = static_cast<int>(adj.size());
  for (int v = 0; v < order; ++v) {
    if (removed[v]) continue;
    int d = 0;
    for (int w = 0; w < order; ++w) d += (adj[v][w] && !removed[w]) ? 1 : 0;
    if (d < h) return false;
  }
  return naive_components(adj, removed) >= 2;
}

/// Smallest h-cut size by trying every subset of each size, smallest first,
/// up to `max_size`. nullopt when none exists within that range.
inline std::optional<int> naive_min_h_cut(const Matrix& adj, int h, int max_size) {
  const int order = static_cast<int>(adj.size());
  for (int m = 0; m <= std::min(max_size, order); ++m) {
    std::vector<bool> mask(order, false);
    std::fill(mask.begin(), mask.begin() + m, true);
    do {
      if (naive_is_h_cut(adj, mask, h)) return m;
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return std::nullopt;
}

/// Number of h-cuts of exactly `m` vertices.
inline long naive_count_h_cuts(const Matrix& adj, int h, int m) {
  const int order = static_cast<int>(adj.size());
  std::vector<bool> mask(order, false);
  std::fill(mask.begin(), mask.begin() + m, true);
  long count = 0;
  do {
    if (naive_is_h_cut(adj, mask, h)) ++count;
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return count;
}

/// Distance-based shortest cycle through edge (u,v): BFS from u avoiding the
/// direct edge.
inline std::optional<int> naive_cycle_through(const Matrix& adj, int u, int v) {
  const int order = static_cast<int>(adj.size());
  std::vector<int> dist(order, -1);
  std::queue<int> q;
  dist[u] = 0;
  q.push(u);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y = 0; y < order; ++y) {
      if (!adj[x][y] || dist[y] >= 0 || (x == u && y == v)) continue;
      dist[y] = dist[x] + 1;
      q.push(y);
    }
  }
  return dist[v] < 0 ? std::nullopt : std::optional<int>(dist[v] + 1);
}

}  // namespace nkstar::testing

#endif  // NKSTAR_TESTS_NAIVE_ORACLES_HPP
