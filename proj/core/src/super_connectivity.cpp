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

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <thread>
#include <type_traits>

#include "nkstar/combinations.hpp"
#include "nkstar/errors.hpp"
#include "nkstar/fault_tolerance.hpp"

namespace nkstar {

CutCertificate certify_cut(const GraphView& g, VertexSet cut, int h) {
  CutCertificate cert;
  cert.h = h;
  cert.size = cut.count();
  const HCutCheck check = is_h_cut(g, cut, h);
  cert.valid = check.is_cut;
  cert.diagnostic = check.diagnostic();
  cert.witness = VertexSet(g.order());
  const auto comps = components(g, cut);
  if (comps.size() >= 2) {
    // components() is ordered by smallest member, so a stable pick of the
    // first minimum-size entry breaks ties by smallest member.
    const auto smallest = std::min_element(
        comps.begin(), comps.end(),
        [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (VertexId v : *smallest) cert.witness.set(v);
  }
  cert.cut = std::move(cut);
  return cert;
}

bool in_theorem_domain(int n, int k, int h) {
  return k >= 2 && k <= n - 1 && h >= 0 && h <= n - k;
}

int theorem_value(int n, int k, int h) {
  if (!in_theorem_domain(n, k, h)) {
    throw DomainError("(n,k,h)=(" + std::to_string(n) + "," + std::to_string(k) +
                      "," + std::to_string(h) +
                      ") is outside 2 <= k <= n-1, 0 <= h <= n-k");
  }
  return n + h * (k - 2) - 1;
}

CutCertificate construct_cut(const StarGraph& g, const CliqueId& alpha,
                             std::span<const VertexId> x, int h) {
  theorem_value(g.n(), g.k(), h);
  const auto members = clique_members(g, alpha);
  if (x.size() != static_cast<std::size_t>(h) + 1) {
    throw DomainError("fragment must have h+1 = " + std::to_string(h + 1) +
                      " vertices, got " + std::to_string(x.size()));
  }
  VertexSet fragment(g.order());
  for (VertexId v : x) {
    g.graph().check_vertex(v);
    if (!std::binary_search(members.begin(), members.end(), v)) {
      throw DomainError(g.vertex_name(v) + " is not in clique V_" +
                        to_string(alpha.suffix));
    }
    if (fragment.test(v)) throw DomainError("repeated fragment vertex");
    fragment.set(v);
  }

  VertexSet cut(g.order());
  for (VertexId v : members) {
    if (!fragment.test(v)) cut.set(v);
  }
  for (VertexId v : x) {
    for (const auto& nb : g.neighbors(v)) {
      if (!nb.kind.is_swap()) continue;
      if (cut.test(nb.id)) {
        throw InternalInconsistency("swap neighbors of the fragment overlap at " +
                                    g.vertex_name(nb.id));
      }
      cut.set(nb.id);
    }
  }

  CutCertificate cert = certify_cut(g, std::move(cut), h);
  if (!cert.valid) {
    throw InternalInconsistency("constructed set is not an h-cut: " +
                                cert.diagnostic);
  }
  if (cert.size != static_cast<std::size_t>(theorem_value(g.n(), g.k(), h))) {
    throw InternalInconsistency("constructed cut has size " +
                                std::to_string(cert.size));
  }
  const auto comps = components(g, cert.cut);
  const auto xs = fragment.members();
  if (std::find(comps.begin(), comps.end(), xs) == comps.end()) {
    throw InternalInconsistency("fragment is not a component of G-S");
  }
  cert.witness = std::move(fragment);
  return cert;
}

CutCertificate construct_cut(const StarGraph& g, int h) {
  theorem_value(g.n(), g.k(), h);
  const CliqueId alpha = all_cliques(g).front();
  const auto members = clique_members(g, alpha);
  return construct_cut(
      g, alpha, std::span(members).first(static_cast<std::size_t>(h) + 1), h);
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kChunk = 4096;

// Candidate tester specialized on the number of 64-bit words per row.
template <std::size_t W>
class Tester {
 public:
  using Row = std::array<std::uint64_t, W>;

  Tester(const Graph& g, int h) : g_(g), h_(h), rows_(g.order()) {
    for (VertexId v = 0; v < g.order(); ++v) {
      rows_[v].fill(0);
      const auto r = g.row(v);
      std::copy(r.begin(), r.end(), rows_[v].begin());
      if (g.degree(v) < static_cast<std::size_t>(h)) {
        must_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
        has_must_ = true;
      }
    }
    for (VertexId v = 0; v < g.order(); ++v) {
      all_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
    }
  }

  bool test(std::span<const VertexId> combo) const {
    Row s{};
    for (VertexId v : combo) s[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);

    if (has_must_) {
      for (std::size_t w = 0; w < W; ++w) {
        if (must_[w] & ~s[w]) return false;
      }
    }
    // Only neighbors of S lose degree.
    if (h_ > 0) {
      for (VertexId v : combo) {
        for (VertexId u : g_.neighbors(v)) {
          if ((s[u / kWordBits] >> (u % kWordBits)) & 1U) continue;
          std::size_t lost = 0;
          for (std::size_t w = 0; w < W; ++w) {
            lost += static_cast<std::size_t>(std::popcount(rows_[u][w] & s[w]));
          }
          if (g_.degree(u) - lost < static_cast<std::size_t>(h_)) return false;
        }
      }
    }

    Row surv{};
    std::size_t alive = 0;
    std::size_t first_word = W;
    for (std::size_t w = 0; w < W; ++w) {
      surv[w] = all_[w] & ~s[w];
      alive += static_cast<std::size_t>(std::popcount(surv[w]));
      if (surv[w] && first_word == W) first_word = w;
    }
    if (alive < 2) return false;

    Row reach{};
    Row frontier{};
    const auto first_bit = std::countr_zero(surv[first_word]);
    reach[first_word] = frontier[first_word] = std::uint64_t{1} << first_bit;
    std::size_t reached = 1;
    for (;;) {
      Row next{};
      for (std::size_t w = 0; w < W; ++w) {
        std::uint64_t word = frontier[w];
        while (word) {
          const auto v = w * kWordBits + static_cast<std::size_t>(std::countr_zero(word));
          const Row& r = rows_[v];
          for (std::size_t x = 0; x < W; ++x) next[x] |= r[x];
          word &= word - 1;
        }
      }
      bool grew = false;
      for (std::size_t w = 0; w < W; ++w) {
        next[w] &= surv[w] & ~reach[w];
        reach[w] |= next[w];
        reached += static_cast<std::size_t>(std::popcount(next[w]));
        grew = grew || next[w] != 0;
      }
      if (reached == alive) return false;  // connected
      if (!grew) return true;
      frontier = next;
    }
  }

 private:
  const Graph& g_;
  int h_;
  std::vector<Row> rows_;
  Row all_{};
  Row must_{};
  bool has_must_ = false;
};

struct LevelScan {
  std::uint64_t total = 0;
  std::uint64_t examined = 0;
  std::optional<std::uint64_t> first_hit;
  std::vector<std::uint64_t> hits;
  bool complete = false;
};

void atomic_min(std::atomic<std::uint64_t>& a, std::uint64_t v) {
  std::uint64_t cur = a.load();
  while (v < cur && !a.compare_exchange_weak(cur, v)) {
  }
}

unsigned resolve_workers(unsigned workers) {
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  return workers;
}

// Scans colex indices [0, min(total, limit)) of the size-m level. Chunks are
// handed out in increasing order and every chunk that starts below the best
// hit is finished, so the reported first hit is the colex-smallest one.
template <std::size_t W>
LevelScan scan_level(const Tester<W>& tester, std::size_t order, std::size_t m,
                     std::uint64_t limit, const BinomialTable& binom,
                     unsigned workers, bool collect_all,
                     std::optional<Clock::time_point> deadline) {
  LevelScan scan;
  scan.total = binom(order, m);
  const std::uint64_t span_end = std::min(scan.total, limit);

  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> best{kSaturated};
  std::atomic<std::uint64_t> examined{0};
  std::atomic<bool> timed_out{false};
  std::mutex hits_mutex;

  auto work = [&] {
    std::vector<VertexId> combo(m);
    std::vector<std::uint64_t> local_hits;
    std::uint64_t local_examined = 0;
    for (;;) {
      const std::uint64_t c = next_chunk.fetch_add(1);
      if (c > span_end / kChunk) break;
      const std::uint64_t start = c * kChunk;
      if (start >= span_end) break;
      if (!collect_all && start > best.load()) break;
      if (deadline && best.load() == kSaturated && Clock::now() > *deadline) {
        timed_out = true;
        break;
      }
      const std::uint64_t end = std::min(span_end, start + kChunk);
      colex_unrank(start, combo, binom);
      for (std::uint64_t idx = start; idx < end; ++idx) {
        ++local_examined;
        if (tester.test(combo)) {
          if (collect_all) {
            local_hits.push_back(idx);
          } else {
            atomic_min(best, idx);
            break;
          }
        }
        if (idx + 1 < end) colex_next(combo, order);
      }
    }
    examined += local_examined;
    if (!local_hits.empty()) {
      std::lock_guard lock(hits_mutex);
      scan.hits.insert(scan.hits.end(), local_hits.begin(), local_hits.end());
    }
  };

  workers = resolve_workers(workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  }

  std::sort(scan.hits.begin(), scan.hits.end());
  if (best.load() != kSaturated) {
    scan.first_hit = best.load();
    scan.examined = *scan.first_hit + 1;
    scan.complete = true;
  } else {
    scan.examined = examined.load();
    scan.complete = !timed_out && span_end == scan.total;
  }
  return scan;
}

VertexSet combo_set(std::size_t order, std::uint64_t index, std::size_t m,
                    const BinomialTable& binom) {
  std::vector<VertexId> combo(m);
  colex_unrank(index, combo, binom);
  return VertexSet(order, std::span<const VertexId>(combo));
}

template <typename Fn>
decltype(auto) dispatch_width(std::size_t words, Fn&& fn) {
  if (words <= 1) return fn(std::integral_constant<std::size_t, 1>{});
  if (words <= 2) return fn(std::integral_constant<std::size_t, 2>{});
  if (words <= 4) return fn(std::integral_constant<std::size_t, 4>{});
  if (words <= 8) return fn(std::integral_constant<std::size_t, 8>{});
  if (words <= 16) return fn(std::integral_constant<std::size_t, 16>{});
  if (words <= 32) return fn(std::integral_constant<std::size_t, 32>{});
  if (words <= 64) return fn(std::integral_constant<std::size_t, 64>{});
  if (words <= 128) return fn(std::integral_constant<std::size_t, 128>{});
  throw DomainError("graph too large for the exhaustive oracle (order > 8192)");
}

SearchResult search_graph(const Graph& g, int h, const SearchOptions& options,
                          std::optional<CutCertificate> hint_cert,
                          Clock::time_point t0) {
  SearchResult res;
  res.h = h;
  res.order = g.order();

  std::optional<std::size_t> hint = options.upper_hint;
  if (hint_cert) {
    if (hint && *hint != hint_cert->size) {
      throw DomainError("upper hint disagrees with the hint certificate size");
    }
    hint = hint_cert->size;
  }
  res.upper_bound = hint;

  if (options.budget.exhausted_at_start()) {
    res.budget_hit = true;
    return res;
  }
  if (hint_cert) {
    hint_cert = certify_cut(GraphView(g), hint_cert->cut, h);
    if (!hint_cert->valid) {
      throw DomainError("hint certificate is not an h-cut: " + hint_cert->diagnostic);
    }
  }

  std::optional<Clock::time_point> deadline;
  if (options.budget.seconds) {
    deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                        std::chrono::duration<double>(*options.budget.seconds));
  }

  const std::size_t order = g.order();
  std::size_t lower = 0;
  if (options.start_from_connectivity && order >= 2) {
    lower = vertex_connectivity(GraphView(g));
  }
  res.lower_bound_start = lower;
  res.exhaustive_below = lower;
  if (hint_cert && *hint < lower) {
    throw InternalInconsistency("hint certificate smaller than the connectivity");
  }

  const std::size_t max_m = order >= 2 ? order - 2 : 0;
  const BinomialTable binom(order, std::max<std::size_t>(max_m, 1));
  std::optional<std::uint64_t> remaining = options.budget.candidates;

  const bool exhausted = dispatch_width(g.words_per_row(), [&](auto width) {
    constexpr std::size_t W = decltype(width)::value;
    const Tester<W> tester(g, h);
    for (std::size_t m = lower; order >= 2 && m <= max_m; ++m) {
      if (hint_cert && m == *hint) {
        res.value = m;
        res.certificate = hint_cert;
        res.exhaustive_below = m;
        return false;
      }
      const LevelScan scan =
          scan_level(tester, order, m, remaining.value_or(kSaturated), binom,
                     options.workers, false, deadline);
      res.levels.push_back({m, scan.examined, scan.total, scan.first_hit.has_value(),
                            scan.complete});
      res.candidates_examined += scan.examined;
      if (remaining) *remaining -= std::min(*remaining, scan.examined);
      if (scan.first_hit) {
        res.value = m;
        res.certificate =
            certify_cut(GraphView(g), combo_set(order, *scan.first_hit, m, binom), h);
        if (!res.certificate->valid) {
          throw InternalInconsistency("oracle hit failed re-validation: " +
                                      res.certificate->diagnostic);
        }
        res.exhaustive_below = m;
        return false;
      }
      if (!scan.complete) {
        res.budget_hit = true;
        res.exhaustive_below = m;
        return false;
      }
      res.exhaustive_below = m + 1;
    }
    return true;
  });
  if (exhausted) res.exhaustive_below = order;
  return res;
}

VertexSet lift(const VertexSet& local, const InducedSubgraph& sub, std::size_t order) {
  VertexSet out(order);
  local.for_each([&](VertexId v) { out.set(sub.to_parent[v]); });
  return out;
}

}  // namespace

SearchResult kappa_super_exact(const GraphView& g, int h,
                               const SearchOptions& options) {
  if (h < 0) throw DomainError("h must be non-negative");
  const auto t0 = Clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  };

  if (g.removed.empty()) {
    SearchResult res = search_graph(*g.graph, h, options, options.hint_certificate, t0);
    res.elapsed_ms = elapsed();
    return res;
  }

  const InducedSubgraph sub = induce(*g.graph, g.removed.complement());
  std::optional<CutCertificate> local_hint;
  if (options.hint_certificate) {
    if (options.hint_certificate->cut.intersects(g.removed)) {
      throw DomainError("hint certificate uses removed vertices");
    }
    std::vector<VertexId> local(g.order(), 0);
    for (VertexId i = 0; i < sub.to_parent.size(); ++i) local[sub.to_parent[i]] = i;
    VertexSet cut(sub.graph.order());
    options.hint_certificate->cut.for_each([&](VertexId v) { cut.set(local[v]); });
    local_hint = certify_cut(GraphView(sub.graph), std::move(cut), h);
  }
  SearchResult res = search_graph(sub.graph, h, options, local_hint, t0);
  if (res.certificate) {
    res.certificate = certify_cut(g, lift(res.certificate->cut, sub, g.order()), h);
  }
  res.elapsed_ms = elapsed();
  return res;
}

std::vector<VertexSet> enumerate_h_cuts(const GraphView& g, int h,
                                        std::size_t size, unsigned workers) {
  if (h < 0) throw DomainError("h must be non-negative");
  const InducedSubgraph sub = induce(*g.graph, g.removed.complement());
  const std::size_t order = sub.graph.order();
  std::vector<VertexSet> out;
  if (order < 2 || size > order - 2) return out;
  const BinomialTable binom(order, std::max<std::size_t>(size, 1));
  const auto hits = dispatch_width(sub.graph.words_per_row(), [&](auto width) {
    constexpr std::size_t W = decltype(width)::value;
    const Tester<W> tester(sub.graph, h);
    return scan_level(tester, order, size, kSaturated, binom, workers, true,
                      std::nullopt)
        .hits;
  });
  for (std::uint64_t idx : hits) {
    out.push_back(lift(combo_set(order, idx, size, binom), sub, g.order()));
  }
  return out;
}

FragmentBound kappa_super_upper(const GraphView& g, int h,
                                std::size_t max_fragment) {
  if (h < 0) throw DomainError("h must be non-negative");
  if (max_fragment < static_cast<std::size_t>(h) + 1) {
    throw DomainError("max_fragment must be at least h+1");
  }
  const Graph& graph = *g.graph;
  const std::size_t order = g.order();
  FragmentBound bound;

  VertexSet fragment(order);
  std::vector<VertexId> members;

  auto evaluate = [&] {
    ++bound.fragments_examined;
    for (VertexId v : members) {
      std::size_t inside = 0;
      for (VertexId w : graph.neighbors(v)) inside += fragment.test(w) ? 1 : 0;
      if (inside < static_cast<std::size_t>(h)) return;
    }
    VertexSet boundary(order);
    for (VertexId v : members) {
      for (VertexId w : graph.neighbors(v)) {
        if (!fragment.test(w) && !g.removed.test(w)) boundary.set(w);
      }
    }
    const std::size_t size = boundary.count();
    if (bound.value && size >= *bound.value) return;
    CutCertificate cert = certify_cut(g, std::move(boundary), h);
    if (!cert.valid) return;
    bound.value = size;
    bound.certificate = std::move(cert);
  };

  // Connected-set enumeration rooted at the smallest member; each connected
  // set is produced exactly once.
  auto extend = [&](auto&& self, std::vector<VertexId> extension, VertexId root,
                    const VertexSet& closed) -> void {
    evaluate();
    if (members.size() == max_fragment) return;
    while (!extension.empty()) {
      const VertexId w = extension.back();
      extension.pop_back();
      std::vector<VertexId> next = extension;
      VertexSet next_closed = closed;
      for (VertexId u : graph.neighbors(w)) {
        if (u > root && !closed.test(u) && !g.removed.test(u)) {
          next.push_back(u);
          next_closed.set(u);
        }
      }
      fragment.set(w);
      members.push_back(w);
      self(self, std::move(next), root, next_closed);
      members.pop_back();
      fragment.reset(w);
    }
  };

  for (VertexId v = 0; v < order; ++v) {
    if (g.removed.test(v)) continue;
    VertexSet closed(order);
    closed.set(v);
    std::vector<VertexId> extension;
    for (VertexId u : graph.neighbors(v)) {
      if (u > v && !g.removed.test(u)) {
        extension.push_back(u);
        closed.set(u);
      }
    }
    fragment.set(v);
    members.push_back(v);
    extend(extend, std::move(extension), v, closed);
    members.pop_back();
    fragment.reset(v);
  }
  return bound;
}

}  // namespace nkstar
