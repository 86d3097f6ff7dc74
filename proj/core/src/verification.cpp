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

#include "nkstar/verification.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <set>
#include <sstream>

#include "nkstar/errors.hpp"

namespace nkstar {

std::string to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::pass: return "pass";
    case ReportStatus::fail: return "fail";
    case ReportStatus::skipped_budget: return "skipped-budget";
    case ReportStatus::oracle_only: return "oracle-only";
    case ReportStatus::aborted: return "aborted";
  }
  return "fail";
}

ReportStatus parse_report_status(const std::string& s) {
  for (auto st : {ReportStatus::pass, ReportStatus::fail, ReportStatus::skipped_budget,
                  ReportStatus::oracle_only, ReportStatus::aborted}) {
    if (to_string(st) == s) return st;
  }
  throw DomainError("unknown report status '" + s + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

double since_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Accumulates violations for one suite, keeping the first as counterexample.
class Violations {
 public:
  explicit Violations(const StructureOptions& opt) : opt_(opt) {}

  void add(std::string what) {
    if (count_++ == 0) first_ = std::move(what);
  }
  bool stop() const { return opt_.stop_at_first && count_ > 0; }

  void finish(VerificationReport& r) const {
    r.counters["violations"] = static_cast<std::int64_t>(count_);
    r.status = count_ == 0 ? ReportStatus::pass : ReportStatus::fail;
    if (count_) r.counterexample = first_;
  }

 private:
  const StructureOptions& opt_;
  std::size_t count_ = 0;
  std::string first_;
};

VerificationReport start_report(const char* target, const StarGraph& g) {
  VerificationReport r;
  r.target = target;
  r.parameters.n = g.n();
  r.parameters.k = g.k();
  return r;
}

std::size_t clique_index(const StarGraph& g, VertexId v) {
  return static_cast<std::size_t>(rank(clique_of(g, v).suffix));
}

std::uint64_t factorial_ratio(int top, int bottom) {
  std::uint64_t r = 1;
  for (int x = bottom + 1; x <= top; ++x) r *= static_cast<std::uint64_t>(x);
  return r;
}

}  // namespace

VerificationReport verify_clique_partition(const StarGraph& g,
                                           const StructureOptions& opt) {
  const auto t0 = Clock::now();
  VerificationReport r = start_report(kCliquePartition, g);
  Violations bad(opt);
  if (g.k() < 2) throw DomainError("clique suites need k >= 2");

  const auto cliques = all_cliques(g);
  const std::uint64_t expected = count_k_permutations(g.n(), g.k() - 1);
  if (cliques.size() != expected) {
    bad.add("clique count " + std::to_string(cliques.size()) + " != " +
            std::to_string(expected));
  }
  std::vector<int> owner(g.order(), -1);
  std::int64_t pairs = 0;
  for (std::size_t c = 0; c < cliques.size() && !bad.stop(); ++c) {
    const auto members = clique_members(g, cliques[c]);
    if (members.size() != static_cast<std::size_t>(g.n() - g.k() + 1)) {
      bad.add("clique " + to_string(cliques[c].suffix) + " has " +
              std::to_string(members.size()) + " members");
    }
    for (std::size_t a = 0; a < members.size(); ++a) {
      if (owner[members[a]] != -1) {
        bad.add(g.vertex_name(members[a]) + " lies in two cliques");
      }
      owner[members[a]] = static_cast<int>(c);
      if (clique_index(g, members[a]) != c) {
        bad.add("clique_of(" + g.vertex_name(members[a]) + ") disagrees");
      }
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        ++pairs;
        if (!g.graph().adjacent(members[a], members[b])) {
          bad.add(g.vertex_name(members[a]) + " and " + g.vertex_name(members[b]) +
                  " share clique " + to_string(cliques[c].suffix) +
                  " but are not adjacent");
        } else if (g.edge_kind(members[a], members[b]).is_swap()) {
          bad.add("clique edge " + g.vertex_name(members[a]) + " -- " +
                  g.vertex_name(members[b]) + " is a swap edge");
        }
      }
    }
  }
  for (VertexId v = 0; v < g.order() && !bad.stop(); ++v) {
    if (owner[v] == -1) bad.add(g.vertex_name(v) + " is in no clique");
  }
  r.counters["cliques"] = static_cast<std::int64_t>(cliques.size());
  r.counters["clique_order"] = g.n() - g.k() + 1;
  r.counters["pairs_checked"] = pairs;
  bad.finish(r);
  r.elapsed_ms = since_ms(t0);
  return r;
}

VerificationReport verify_clique_swap_edges(const StarGraph& g,
                                            const StructureOptions& opt) {
  const auto t0 = Clock::now();
  VerificationReport r = start_report(kCliqueSwapEdges, g);
  Violations bad(opt);
  if (g.k() < 2) throw DomainError("clique suites need k >= 2");

  std::map<std::pair<std::size_t, std::size_t>, Edge> seen;
  std::int64_t inter = 0;
  for (auto [u, v] : g.graph().edges()) {
    if (bad.stop()) break;
    const std::size_t cu = clique_index(g, u);
    const std::size_t cv = clique_index(g, v);
    const EdgeKind kind = g.edge_kind(u, v);
    if (cu == cv) {
      if (kind.is_swap()) {
        bad.add("swap edge " + g.vertex_name(u) + " -- " + g.vertex_name(v) +
                " inside one clique");
      }
      continue;
    }
    ++inter;
    if (!kind.is_swap()) {
      bad.add("unswap edge " + g.vertex_name(u) + " -- " + g.vertex_name(v) +
              " joins two cliques");
    }
    const auto key = std::minmax(cu, cv);
    auto [it, fresh] = seen.emplace(key, Edge{u, v});
    if (!fresh) {
      bad.add("cliques of " + g.vertex_name(u) + " and " + g.vertex_name(v) +
              " are joined by two edges (also " + g.vertex_name(it->second.first) +
              " -- " + g.vertex_name(it->second.second) + ")");
    }
  }
  r.counters["inter_clique_edges"] = inter;
  r.counters["joined_clique_pairs"] = static_cast<std::int64_t>(seen.size());
  bad.finish(r);
  r.elapsed_ms = since_ms(t0);
  return r;
}

VerificationReport verify_subgraph_decomposition(const StarGraph& g,
                                                 const StructureOptions& opt) {
  const auto t0 = Clock::now();
  VerificationReport r = start_report(kSubgraphDecomposition, g);
  Violations bad(opt);
  const int n = g.n();
  const int k = g.k();
  if (k < 2) throw DomainError("decomposition suite needs k >= 2");

  const StarGraph smaller = StarGraph::build(n - 1, k - 1);
  const std::uint64_t expected_cross = factorial_ratio(n - 2, n - k);
  std::int64_t cross_pairs = 0;
  std::int64_t edges_mapped = 0;

  for (int t = 2; t <= k && !bad.stop(); ++t) {
    std::vector<int> part(g.order(), 0);
    for (Symbol i = 1; i <= n && !bad.stop(); ++i) {
      const auto members = subgraph(g, {t, i});
      if (members.size() != smaller.order()) {
        bad.add("S^{" + std::to_string(t) + ":" + std::to_string(i) + "} has " +
                std::to_string(members.size()) + " vertices");
        continue;
      }
      VertexSet inside(g.order(), std::span<const VertexId>(members));
      std::vector<char> image_hit(smaller.order(), 0);
      std::size_t internal_edges = 0;
      for (VertexId v : members) {
        ++part[v];
        const VertexId img = smaller.id_of(relabel_into_subgraph(g.label(v), {t, i}));
        if (image_hit[img]) bad.add("relabeling collides at " + g.vertex_name(v));
        image_hit[img] = 1;
        std::size_t outside = 0;
        for (const auto& nb : g.neighbors(v)) {
          if (!inside.test(nb.id)) {
            ++outside;
            continue;
          }
          if (v < nb.id) {
            ++internal_edges;
            ++edges_mapped;
            const VertexId img_w =
                smaller.id_of(relabel_into_subgraph(g.label(nb.id), {t, i}));
            if (!smaller.graph().adjacent(img, img_w)) {
              bad.add("edge " + g.vertex_name(v) + " -- " + g.vertex_name(nb.id) +
                      " has no image in S_{" + std::to_string(n - 1) + "," +
                      std::to_string(k - 1) + "}");
            }
          }
        }
        if (outside != 1) {
          bad.add(g.vertex_name(v) + " has " + std::to_string(outside) +
                  " neighbors outside S^{" + std::to_string(t) + ":" +
                  std::to_string(i) + "}");
        }
      }
      if (internal_edges != smaller.edge_count()) {
        bad.add("S^{" + std::to_string(t) + ":" + std::to_string(i) + "} has " +
                std::to_string(internal_edges) + " edges, expected " +
                std::to_string(smaller.edge_count()));
      }
    }
    for (VertexId v = 0; v < g.order() && !bad.stop(); ++v) {
      if (part[v] != 1) bad.add(g.vertex_name(v) + " not covered exactly once");
    }
    for (Symbol i = 1; i <= n && !bad.stop(); ++i) {
      for (Symbol j = i + 1; j <= n && !bad.stop(); ++j) {
        ++cross_pairs;
        const auto cross = cross_edges(g, t, i, j);
        if (cross.size() != expected_cross) {
          bad.add("t=" + std::to_string(t) + ": " + std::to_string(cross.size()) +
                  " edges between S^{" + std::to_string(i) + "} and S^{" +
                  std::to_string(j) + "}, expected " + std::to_string(expected_cross));
        }
        std::set<VertexId> ends;
        for (auto [u, w] : cross) {
          if (g.edge_kind(u, w) != EdgeKind::swap(t)) {
            bad.add("cross edge " + g.vertex_name(u) + " -- " + g.vertex_name(w) +
                    " is not a " + std::to_string(t) + "-edge");
          }
          if (!ends.insert(u).second || !ends.insert(w).second) {
            bad.add("cross edges between S^{" + std::to_string(i) + "} and S^{" +
                    std::to_string(j) + "} share an endpoint near " +
                    g.vertex_name(u));
          }
        }
      }
    }
  }
  r.counters["expected_cross_edges"] = static_cast<std::int64_t>(expected_cross);
  r.counters["subgraph_pairs_checked"] = cross_pairs;
  r.counters["internal_edges_mapped"] = edges_mapped;
  bad.finish(r);
  r.elapsed_ms = since_ms(t0);
  return r;
}

VerificationReport verify_swap_edge_girth(const StarGraph& g,
                                          const StructureOptions& opt) {
  const auto t0 = Clock::now();
  VerificationReport r = start_report(kSwapEdgeGirth, g);
  Violations bad(opt);
  std::int64_t scanned = 0;
  std::int64_t shortest = -1;
  for (auto [u, v] : g.graph().edges()) {
    if (bad.stop()) break;
    if (!g.edge_kind(u, v).is_swap()) continue;
    ++scanned;
    const auto len = shortest_cycle_through_edge(g, u, v);
    if (!len) continue;
    const auto l = static_cast<std::int64_t>(*len);
    if (shortest < 0 || l < shortest) shortest = l;
    if (l < 6) {
      bad.add("swap edge " + g.vertex_name(u) + " -- " + g.vertex_name(v) +
              " lies on a cycle of length " + std::to_string(l));
    }
  }
  r.counters["swap_edges_scanned"] = scanned;
  r.counters["shortest_cycle"] = shortest;
  bad.finish(r);
  r.elapsed_ms = since_ms(t0);
  return r;
}

std::vector<VerificationReport> verify_structure(const StarGraph& g,
                                                 const StructureOptions& opt) {
  if (g.k() < 2) throw DomainError("structure suites need 2 <= k <= n-1");
  return {verify_clique_partition(g, opt), verify_clique_swap_edges(g, opt),
          verify_subgraph_decomposition(g, opt), verify_swap_edge_girth(g, opt)};
}

std::vector<VerificationReport> verify_structure(int n, int k,
                                                 const StructureOptions& opt) {
  if (k < 2 || k > n - 1) throw DomainError("structure suites need 2 <= k <= n-1");
  return verify_structure(StarGraph::build(n, k), opt);
}

namespace {

SearchOptions search_options(const TheoremOptions& opt) {
  SearchOptions s;
  s.budget = opt.budget;
  s.workers = opt.workers;
  return s;
}

void attach_search(VerificationReport& r, SearchResult res) {
  r.counters["exhaustive_below"] = static_cast<std::int64_t>(res.exhaustive_below);
  r.counters["candidates_examined"] = static_cast<std::int64_t>(res.candidates_examined);
  if (res.value) r.counters["value"] = static_cast<std::int64_t>(*res.value);
  r.search = std::move(res);
}

}  // namespace

VerificationReport verify_theorem(const StarGraph& g, int h, const TheoremOptions& opt) {
  const auto t0 = Clock::now();
  const int expected = theorem_value(g.n(), g.k(), h);
  VerificationReport r = start_report(kTheorem, g);
  r.parameters.h = h;
  r.counters["expected"] = expected;

  SearchOptions so = search_options(opt);
  if (opt.use_hint) {
    so.hint_certificate = construct_cut(g, h);
    so.upper_hint = so.hint_certificate->size;
  }
  SearchResult res = kappa_super_exact(g, h, so);
  if (res.budget_hit) {
    r.status = ReportStatus::skipped_budget;
    r.notes.push_back("budget exhausted; no h-cut below " +
                      std::to_string(res.exhaustive_below) + " vertices");
  } else if (res.value && *res.value == static_cast<std::size_t>(expected)) {
    r.status = ReportStatus::pass;
  } else {
    r.status = ReportStatus::fail;
    if (res.value) {
      std::string set;
      res.certificate->cut.for_each([&](VertexId v) {
        set += (set.empty() ? "" : " ") + g.vertex_name(v);
      });
      r.counterexample = "minimum h-cut of size " + std::to_string(*res.value) +
                         ": {" + set + "}";
    } else {
      r.counterexample = "no h-cut exists (searched all " +
                         std::to_string(res.exhaustive_below) + " sizes)";
    }
  }
  attach_search(r, std::move(res));
  r.elapsed_ms = since_ms(t0);
  return r;
}

VerificationReport verify_theorem(int n, int k, int h, const TheoremOptions& opt) {
  theorem_value(n, k, h);
  return verify_theorem(StarGraph::build(n, k), h, opt);
}

VerificationReport verify_oracle_cell(const StarGraph& g, int h,
                                      const TheoremOptions& opt) {
  const auto t0 = Clock::now();
  if (in_theorem_domain(g.n(), g.k(), h)) {
    throw DomainError("cell is inside the theorem domain; use verify_theorem");
  }
  VerificationReport r = start_report(kTheorem, g);
  r.parameters.h = h;
  r.notes.push_back("out-of-theorem-domain");

  std::optional<std::int64_t> reference;
  if (g.k() == g.n() - 1 && h == 2 && g.n() >= 4) {
    reference = 6 * (g.n() - 3);
    r.counters["expected"] = *reference;
    r.notes.push_back("reference value 6(n-3) for the star graph");
  }
  SearchResult res = kappa_super_exact(g, h, search_options(opt));
  if (res.budget_hit) {
    r.status = ReportStatus::skipped_budget;
  } else if (!reference) {
    r.status = ReportStatus::oracle_only;
  } else if (res.value && static_cast<std::int64_t>(*res.value) == *reference) {
    r.status = ReportStatus::pass;
  } else {
    r.status = ReportStatus::fail;
    r.counterexample = res.value ? "oracle value " + std::to_string(*res.value)
                                 : std::string("oracle found no h-cut");
  }
  attach_search(r, std::move(res));
  r.elapsed_ms = since_ms(t0);
  return r;
}

bool GridResult::any_fail() const {
  return std::any_of(reports.begin(), reports.end(), [](const auto& r) {
    return r.status == ReportStatus::fail || r.status == ReportStatus::aborted;
  });
}

bool GridResult::any_skipped() const {
  return std::any_of(reports.begin(), reports.end(), [](const auto& r) {
    return r.status == ReportStatus::skipped_budget;
  });
}

GridResult grid_run(const GridSpec& spec) {
  GridResult out;
  for (int n = spec.n_min; n <= spec.n_max; ++n) {
    const int k_hi = std::min(n - 1, spec.k_max.value_or(n - 1));
    for (int k = std::max(2, spec.k_min); k <= k_hi; ++k) {
      const StarGraph g = StarGraph::build(n, k);
      const auto structure = verify_structure(g, spec.structure);
      const bool structure_ok =
          std::all_of(structure.begin(), structure.end(),
                      [](const auto& r) { return r.status == ReportStatus::pass; });
      out.reports.insert(out.reports.end(), structure.begin(), structure.end());

      std::vector<std::pair<int, std::size_t>> chain;
      for (int h = 0; h <= n - k + spec.extra_h; ++h) {
        const bool in_domain = in_theorem_domain(n, k, h);
        VerificationReport cell;
        if (!structure_ok) {
          cell = start_report(kTheorem, g);
          cell.parameters.h = h;
          cell.status = ReportStatus::aborted;
          cell.counterexample = "structure suite failed for this (n,k)";
        } else if (spec.cell_runner) {
          cell = spec.cell_runner(g, h);
        } else {
          cell = in_domain ? verify_theorem(g, h, spec.theorem)
                           : verify_oracle_cell(g, h, spec.theorem);
        }
        GridRow row;
        row.n = n;
        row.k = k;
        row.h = h;
        row.in_domain = in_domain;
        if (in_domain) row.expected = theorem_value(n, k, h);
        if (cell.search) {
          row.value = cell.search->value;
          row.exhaustive_below = cell.search->exhaustive_below;
          if (row.value) chain.emplace_back(h, *row.value);
        }
        row.status = cell.status;
        row.elapsed_ms = cell.elapsed_ms;
        out.rows.push_back(row);
        out.reports.push_back(std::move(cell));
      }

      VerificationReport mono = start_report(kMonotoneChain, g);
      mono.counters["cells"] = static_cast<std::int64_t>(chain.size());
      for (std::size_t i = 1; i < chain.size(); ++i) {
        if (chain[i].second < chain[i - 1].second) {
          mono.status = ReportStatus::fail;
          mono.counterexample = "value drops from " + std::to_string(chain[i - 1].second) +
                                " at h=" + std::to_string(chain[i - 1].first) +
                                " to " + std::to_string(chain[i].second) +
                                " at h=" + std::to_string(chain[i].first);
          break;
        }
      }
      out.reports.push_back(std::move(mono));
    }
  }
  return out;
}

std::string render_summary_table(const std::vector<GridRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(4) << "n" << std::setw(4) << "k" << std::setw(4)
     << "h" << std::setw(10) << "expected" << std::setw(8) << "value"
     << std::setw(10) << "frontier" << std::setw(16) << "status"
     << "elapsed-ms\n";
  for (const auto& r : rows) {
    os << std::setw(4) << r.n << std::setw(4) << r.k << std::setw(4) << r.h
       << std::setw(10) << (r.expected ? std::to_string(*r.expected) : "-")
       << std::setw(8) << (r.value ? std::to_string(*r.value) : "none")
       << std::setw(10) << r.exhaustive_below << std::setw(16)
       << (r.in_domain ? to_string(r.status) : to_string(r.status) + "*")
       << static_cast<long long>(r.elapsed_ms) << '\n';
  }
  if (std::any_of(rows.begin(), rows.end(), [](const auto& r) { return !r.in_domain; })) {
    os << "* out of the closed form's domain\n";
  }
  return os.str();
}

}  // namespace nkstar
