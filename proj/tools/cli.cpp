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

#include "nkstar/cli.hpp"

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "nkstar/cut_projection.hpp"
#include "nkstar/errors.hpp"
#include "nkstar/fault_tolerance.hpp"
#include "nkstar/report.hpp"
#include "nkstar/result_cache.hpp"
#include "nkstar/star_graph.hpp"
#include "nkstar/verification.hpp"

namespace nkstar {
namespace {

using nlohmann::json;

struct Common {
  std::string cache_dir;
  bool no_cache = false;
  unsigned workers = 1;
};

struct BudgetFlags {
  std::optional<double> seconds;
  std::optional<std::uint64_t> candidates;

  SearchBudget budget() const { return {seconds, candidates}; }
  void attach(CLI::App* cmd) {
    cmd->add_option("--budget-seconds", seconds, "Wall-clock limit for the exact search")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--budget-candidates", candidates, "Candidate-set limit for the exact search");
  }
};

/// A command's result: the document status plus its body.
struct Outcome {
  ReportStatus status = ReportStatus::pass;
  json body = json::object();
};

int exit_code_for(ReportStatus s) {
  switch (s) {
    case ReportStatus::pass:
    case ReportStatus::oracle_only:
      return kExitPass;
    case ReportStatus::fail:
    case ReportStatus::aborted:
      return kExitFail;
    case ReportStatus::skipped_budget:
      return kExitSkippedBudget;
  }
  return kExitInternal;
}

/// Worst status across a set of reports: fail beats skipped beats pass.
ReportStatus combine(const std::vector<VerificationReport>& reports) {
  ReportStatus s = ReportStatus::pass;
  for (const auto& r : reports) {
    if (r.status == ReportStatus::fail || r.status == ReportStatus::aborted) {
      return ReportStatus::fail;
    }
    if (r.status == ReportStatus::skipped_budget) s = ReportStatus::skipped_budget;
  }
  return s;
}

json params_json(int n, int k, std::optional<int> h = std::nullopt,
                 std::optional<int> t = std::nullopt) {
  json p = {{"n", n}, {"k", k}};
  if (h) p["h"] = *h;
  if (t) p["t"] = *t;
  return p;
}

std::unique_ptr<ResultCache> open_cache(const Common& c) {
  if (c.no_cache) return nullptr;
  return std::make_unique<ResultCache>(c.cache_dir.empty() ? ResultCache::default_directory()
                                                           : std::filesystem::path(c.cache_dir));
}

/// Loads the set in `path`: one permutation per line; blank lines and text
/// after '#' are ignored.
VertexSet read_vertex_file(const StarGraph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open vertex file " + path);
  VertexSet s(g.order());
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = line.substr(0, line.find('#'));
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    try {
      s.set(g.parse_vertex(line.substr(first, last - first + 1)));
    } catch (const DomainError& e) {
      throw DomainError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return s;
}

/// Vertices given as repeated values or joined with ';'.
std::vector<VertexId> parse_vertex_list(const StarGraph& g,
                                        const std::vector<std::string>& items) {
  std::vector<VertexId> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ';')) {
      if (!part.empty()) out.push_back(g.parse_vertex(part));
    }
  }
  return out;
}

// --- gen / info / decompose -------------------------------------------------

int cmd_gen(int n, int k, const std::string& format, const std::string& path,
            std::ostream& out) {
  if (format != "edgelist" && format != "dot") {
    throw DomainError("unknown format '" + format + "' (edgelist|dot)");
  }
  const auto g = StarGraph::build(n, k);
  std::ofstream file;
  if (!path.empty()) {
    file.open(path);
    if (!file) throw DomainError("cannot write " + path);
  }
  std::ostream& sink = path.empty() ? out : file;
  if (format == "dot") {
    write_dot(g, sink);
  } else {
    write_edge_list(g, sink);
  }
  return kExitPass;
}

Outcome cmd_info(int n, int k) {
  const auto g = StarGraph::build(n, k);
  const auto& gr = g.graph();
  Outcome o;
  o.body = {{"order", g.order()},
            {"edges", g.edge_count()},
            {"min-degree", gr.min_degree()},
            {"max-degree", gr.max_degree()},
            {"regular", gr.min_degree() == gr.max_degree()},
            {"cliques", all_cliques(g).size()},
            {"clique-order", n - k + 1},
            {"swap-edges", g.swap_edge_count()},
            {"unswap-edges", g.unswap_edge_count()}};
  return o;
}

Outcome cmd_decompose(int n, int k, int t) {
  const auto g = StarGraph::build(n, k);
  if (k < 2 || t < 2 || t > k) throw DomainError("decompose needs 2 <= t <= k");
  std::uint64_t expected = 1;
  for (int m = n - k + 1; m <= n - 2; ++m) expected *= static_cast<std::uint64_t>(m);

  Outcome o;
  json sizes = json::array();
  json matrix = json::array();
  std::optional<std::string> counterexample;
  for (Symbol i = 1; i <= n; ++i) {
    sizes.push_back(subgraph(g, {t, i}).size());
    json row = json::array();
    for (Symbol j = 1; j <= n; ++j) {
      if (i == j) {
        row.push_back(0);
        continue;
      }
      const auto edges = cross_edges(g, t, i, j);
      row.push_back(edges.size());
      VertexSet ends(g.order());
      bool matching = true;
      for (auto [u, v] : edges) {
        if (ends.test(u) || ends.test(v)) matching = false;
        ends.set(u);
        ends.set(v);
      }
      if (!counterexample && (edges.size() != expected || !matching)) {
        counterexample = "subgraphs " + std::to_string(i) + " and " + std::to_string(j) +
                         ": " + std::to_string(edges.size()) + " cross edges" +
                         (matching ? "" : ", not a matching");
      }
    }
    matrix.push_back(std::move(row));
  }
  o.status = counterexample ? ReportStatus::fail : ReportStatus::pass;
  o.body = {{"subgraph-sizes", sizes},
            {"cross-edges", matrix},
            {"expected-cross-edges", expected},
            {"counterexample", counterexample ? json(*counterexample) : json(nullptr)}};
  return o;
}

// --- cut ----------------------------------------------------------------------

Outcome cmd_cut_construct(int n, int k, int h, const std::string& alpha_text,
                          const std::vector<std::string>& x_items) {
  if (!in_theorem_domain(n, k, h)) theorem_value(n, k, h);  // throws with the domain
  const auto g = StarGraph::build(n, k);
  const auto x = parse_vertex_list(g, x_items);
  CutCertificate cert;
  if (alpha_text.empty() && x.empty()) {
    cert = construct_cut(g, h);
  } else {
    const CliqueId alpha = alpha_text.empty()
                               ? clique_of(g, x.front())
                               : CliqueId{parse_k_permutation(alpha_text, n, k - 1)};
    std::vector<VertexId> fragment = x;
    if (fragment.empty()) {
      const auto members = clique_members(g, alpha);
      fragment.assign(members.begin(),
                      members.begin() + std::min<std::size_t>(members.size(), h + 1));
    }
    cert = construct_cut(g, alpha, fragment, h);
  }
  Outcome o;
  o.body = {{"certificate", to_json(cert, star_namer(g))},
            {"expected-size", theorem_value(n, k, h)}};
  return o;
}

Outcome cmd_cut_verify(int n, int k, int h, const std::string& path) {
  if (h < 0) throw DomainError("h must be >= 0");
  const auto g = StarGraph::build(n, k);
  const VertexSet s = read_vertex_file(g, path);
  const auto check = is_h_cut(g, s, h);
  const auto cert = certify_cut(g, s, h);
  Outcome o;
  o.status = check ? ReportStatus::pass : ReportStatus::fail;
  o.body = {{"is-h-cut", static_cast<bool>(check)},
            {"diagnostic", check.diagnostic()},
            {"components", components(g, s).size()},
            {"certificate", to_json(cert, star_namer(g))}};
  if (!check) o.body["counterexample"] = check.diagnostic();
  return o;
}

// --- connectivity ---------------------------------------------------------------

Outcome cmd_kappa(int n, int k, const BudgetFlags& b, unsigned workers) {
  const auto g = StarGraph::build(n, k);
  const std::size_t flow = vertex_connectivity(g);
  SearchOptions opt;
  opt.start_from_connectivity = false;
  opt.budget = b.budget();
  opt.workers = workers;
  const auto subset = kappa_super_exact(g, 0, opt);

  Outcome o;
  bool agree = false;
  if (subset.budget_hit) {
    o.status = ReportStatus::skipped_budget;
  } else {
    // No vertex cut at all only happens for complete graphs, where the
    // convention assigns order - 1.
    agree = subset.value ? *subset.value == flow : flow + 1 == g.order();
    o.status = agree ? ReportStatus::pass : ReportStatus::fail;
  }
  o.body = {{"flow", flow},
            {"subset-search", to_json(subset, star_namer(g))},
            {"agree", agree}};
  if (o.status == ReportStatus::fail) {
    o.body["counterexample"] = "flow gives " + std::to_string(flow) +
                               ", subset search gives " +
                               (subset.value ? std::to_string(*subset.value) : "none-found");
  }
  return o;
}

Outcome cmd_skappa(int n, int k, int h, const BudgetFlags& b, bool no_hint,
                   const Common& common) {
  if (h < 0) throw DomainError("h must be >= 0");
  const auto g = StarGraph::build(n, k);
  const bool hint = !no_hint && in_theorem_domain(n, k, h);
  const CacheKey key{"skappa", n, k, h, {{"hint", hint}}};
  auto cache = open_cache(common);

  json result;
  if (cache) {
    if (auto hit = cache->load(key)) result = std::move(*hit);
  }
  if (result.is_null()) {
    SearchOptions opt;
    opt.budget = b.budget();
    opt.workers = common.workers;
    if (hint) {
      opt.hint_certificate = construct_cut(g, h);
      opt.upper_hint = opt.hint_certificate->size;
    }
    const auto r = kappa_super_exact(g, h, opt);
    result = to_json(r, star_namer(g));
    if (cache && !r.budget_hit) cache->store(key, result);
  }
  Outcome o;
  o.status = result.at("budget-hit").get<bool>() ? ReportStatus::skipped_budget
                                                 : ReportStatus::pass;
  o.body = {{"result", result}, {"hint", hint}};
  if (in_theorem_domain(n, k, h)) o.body["theorem-value"] = theorem_value(n, k, h);
  return o;
}

// --- harness ------------------------------------------------------------------

/// Theorem or oracle cell, going through the cache when it is enabled.
std::function<VerificationReport(const StarGraph&, int)> cell_runner(
    ResultCache* cache, const TheoremOptions& opt) {
  return [cache, opt](const StarGraph& g, int h) {
    const bool in_domain = in_theorem_domain(g.n(), g.k(), h);
    const CacheKey key{"verify-cell", g.n(), g.k(), h, {{"hint", in_domain && opt.use_hint}}};
    if (cache) {
      if (auto hit = cache->load(key)) {
        return verification_report_from_json(*hit, star_parser(g));
      }
    }
    auto r = in_domain ? verify_theorem(g, h, opt) : verify_oracle_cell(g, h, opt);
    if (cache && r.status != ReportStatus::skipped_budget) {
      cache->store(key, to_json(r, star_namer(g)));
    }
    return r;
  };
}

json reports_json(const std::vector<VerificationReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) {
    // Every report in a run refers to one (n,k), so names come from it.
    const auto g = StarGraph::build(r.parameters.n, r.parameters.k);
    arr.push_back(to_json(r, star_namer(g)));
  }
  return arr;
}

json rows_json(const std::vector<GridRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"n", r.n},
                   {"k", r.k},
                   {"h", r.h},
                   {"in-domain", r.in_domain},
                   {"expected", r.expected ? json(*r.expected) : json(nullptr)},
                   {"value", r.value ? json(*r.value) : json("none-found")},
                   {"exhaustive-below", r.exhaustive_below},
                   {"status", to_string(r.status)},
                   {"elapsed-ms", r.elapsed_ms}});
  }
  return arr;
}

Outcome grid_outcome(const GridResult& res, bool table, std::ostream& err) {
  if (table) err << render_summary_table(res.rows);
  Outcome o;
  o.status = combine(res.reports);
  o.body = {{"rows", rows_json(res.rows)}, {"reports", reports_json(res.reports)}};
  return o;
}

Outcome cmd_verify(int n, int k, std::optional<int> h, int extra_h, const TheoremOptions& opt,
                   const Common& common, bool table, std::ostream& err) {
  if (k < 2 || k > n - 1) throw DomainError("verify needs 2 <= k <= n-1");
  auto cache = open_cache(common);
  if (h) {
    if (*h < 0) throw DomainError("h must be >= 0");
    const auto g = StarGraph::build(n, k);
    const auto r = cell_runner(cache.get(), opt)(g, *h);
    Outcome o;
    o.status = combine({r});
    o.body = {{"reports", reports_json({r})}};
    return o;
  }
  GridSpec spec;
  spec.n_min = spec.n_max = n;
  spec.k_min = k;
  spec.k_max = k;
  spec.extra_h = extra_h;
  spec.theorem = opt;
  spec.cell_runner = cell_runner(cache.get(), opt);
  return grid_outcome(grid_run(spec), table, err);
}

Outcome cmd_grid(const GridSpec& base, const Common& common, bool table, std::ostream& err) {
  if (base.n_min < 3) throw DomainError("grid needs n-min >= 3");
  auto cache = open_cache(common);
  GridSpec spec = base;
  spec.cell_runner = cell_runner(cache.get(), spec.theorem);
  return grid_outcome(grid_run(spec), table, err);
}

Outcome cmd_cache(const std::string& action, const Common& common) {
  if (common.no_cache) throw DomainError("cache commands need the cache enabled");
  auto cache = open_cache(common);
  Outcome o;
  o.body["directory"] = cache->directory().string();
  if (action == "ls") {
    json entries = json::array();
    for (const auto& e : cache->list()) {
      entries.push_back({{"digest", e.digest},
                         {"key", e.key},
                         {"created-at", e.created_at},
                         {"bytes", e.bytes}});
    }
    o.body["entries"] = entries;
  } else {
    o.body["removed"] = cache->clear();
  }
  return o;
}

json error_document(const std::string& command, json params, const std::string& kind,
                    const std::string& message) {
  return make_document(command, std::move(params), "error",
                       {{"error", {{"kind", kind}, {"message", message}}}});
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build (n,k)-star graphs and verify their h-super connectivity", "nkstar"};
  // "h" is a positional name here, so help is only reachable as --help.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Common common;
  app.add_option("--cache-dir", common.cache_dir,
                 "Result cache directory (default: $NKSTAR_CACHE_DIR or the user cache)");
  app.add_flag("--no-cache", common.no_cache, "Neither read nor write the result cache");
  app.add_option("--workers", common.workers, "Worker threads for exhaustive searches")
      ->check(CLI::Range(1u, 256u));

  int n = 0, k = 0, h = 0, t = 0;
  std::optional<int> opt_h;
  std::string format = "edgelist", path, alpha;
  std::vector<std::string> x_items;
  BudgetFlags budget;
  bool no_hint = false, table = false;
  int extra_h = 0;
  GridSpec grid;
  std::string cache_action;

  auto nk = [&](CLI::App* c) {
    c->add_option("n", n, "Alphabet size")->required();
    c->add_option("k", k, "Permutation length")->required();
  };

  auto* gen = app.add_subcommand("gen", "Export S_{n,k} as an edge list or DOT");
  nk(gen);
  gen->add_option("--format", format, "edgelist|dot")->check(CLI::IsMember({"edgelist", "dot"}));
  gen->add_option("--out", path, "Write to this file instead of stdout");

  auto* info = app.add_subcommand("info", "Order, size, degrees, cliques and edge kinds");
  nk(info);

  auto* decompose = app.add_subcommand("decompose", "Subgraph sizes and cross-edge matrix");
  nk(decompose);
  decompose->add_option("--t", t, "Position defining the subgraphs (2..k)")->required();

  auto* cut = app.add_subcommand("cut", "Construct or check h-cuts");
  cut->require_subcommand(1);
  auto* construct = cut->add_subcommand("construct", "Clique-fragment h-cut");
  nk(construct);
  construct->add_option("h", h, "Minimum surviving degree")->required();
  construct->add_option("--alpha", alpha, "Clique suffix, e.g. 4,5");
  construct->add_option("--x", x_items, "Fragment vertices (repeat or separate with ';')");
  auto* verify_cut = cut->add_subcommand("verify", "Check a vertex set from a file");
  nk(verify_cut);
  verify_cut->add_option("h", h, "Minimum surviving degree")->required();
  verify_cut->add_option("--s", path, "File with one permutation per line")->required();

  auto* kappa = app.add_subcommand("kappa", "Vertex connectivity by flow and by subset search");
  nk(kappa);
  budget.attach(kappa);

  auto* skappa = app.add_subcommand("skappa", "Exact h-super connectivity");
  nk(skappa);
  skappa->add_option("h", h, "Minimum surviving degree")->required();
  budget.attach(skappa);
  skappa->add_flag("--no-hint", no_hint, "Do not seed the search with the constructed cut");

  auto* verify = app.add_subcommand("verify", "Structure suites and theorem cells for one (n,k)");
  nk(verify);
  verify->add_option("h", opt_h, "Single theorem cell");
  verify->add_option("--extra-h", extra_h, "Also run this many cells beyond h = n-k")
      ->check(CLI::NonNegativeNumber);
  budget.attach(verify);
  verify->add_flag("--no-hint", no_hint, "Do not seed the searches with constructed cuts");
  verify->add_flag("--table", table, "Print the summary table to stderr");

  auto* grid_cmd = app.add_subcommand("grid", "Harness over a range of (n,k,h)");
  grid_cmd->add_option("--n-min", grid.n_min, "Smallest n")->capture_default_str();
  grid_cmd->add_option("--n-max", grid.n_max, "Largest n")->required();
  grid_cmd->add_option("--k-min", grid.k_min, "Smallest k")->capture_default_str();
  grid_cmd->add_option("--k-max", grid.k_max, "Largest k (default n-1)");
  grid_cmd->add_option("--extra-h", grid.extra_h, "Cells beyond h = n-k per (n,k)")
      ->check(CLI::NonNegativeNumber);
  budget.attach(grid_cmd);
  grid_cmd->add_flag("--no-hint", no_hint, "Do not seed the searches with constructed cuts");
  grid_cmd->add_flag("--table", table, "Print the summary table to stderr");

  auto* cache_cmd = app.add_subcommand("cache", "Inspect or clear the result cache");
  cache_cmd->add_option("action", cache_action, "ls|clear")
      ->required()
      ->check(CLI::IsMember({"ls", "clear"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, err, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, err, err);
  } catch (const CLI::ParseError& e) {
    out << error_document(args.empty() ? "" : args.front(), json::object(), "usage-error", e.what()).dump(2)
        << '\n';
    return kExitError;
  }

  std::string command = app.get_subcommands().front()->get_name();
  if (command == "cut") command += " " + cut->get_subcommands().front()->get_name();
  TheoremOptions theorem;
  theorem.budget = budget.budget();
  theorem.workers = common.workers;
  theorem.use_hint = !no_hint;

  json params = json::object();
  try {
    Outcome o;
    if (gen->parsed()) {
      return cmd_gen(n, k, format, path, out);
    } else if (info->parsed()) {
      params = params_json(n, k);
      o = cmd_info(n, k);
    } else if (decompose->parsed()) {
      params = params_json(n, k, std::nullopt, t);
      o = cmd_decompose(n, k, t);
    } else if (construct->parsed()) {
      params = params_json(n, k, h);
      o = cmd_cut_construct(n, k, h, alpha, x_items);
    } else if (verify_cut->parsed()) {
      params = params_json(n, k, h);
      o = cmd_cut_verify(n, k, h, path);
    } else if (kappa->parsed()) {
      params = params_json(n, k);
      o = cmd_kappa(n, k, budget, common.workers);
    } else if (skappa->parsed()) {
      params = params_json(n, k, h);
      o = cmd_skappa(n, k, h, budget, no_hint, common);
    } else if (verify->parsed()) {
      params = params_json(n, k, opt_h);
      o = cmd_verify(n, k, opt_h, extra_h, theorem, common, table, err);
    } else if (grid_cmd->parsed()) {
      grid.theorem = theorem;
      params = {{"n-min", grid.n_min}, {"n-max", grid.n_max}, {"k-min", grid.k_min},
                {"extra-h", grid.extra_h}};
      if (grid.k_max) params["k-max"] = *grid.k_max;
      o = cmd_grid(grid, common, table, err);
    } else {
      o = cmd_cache(cache_action, common);
    }
    out << make_document(command, params, to_string(o.status), o.body).dump(2) << '\n';
    return exit_code_for(o.status);
  } catch (const DomainError& e) {
    out << error_document(command, params, "domain-error", e.what()).dump(2) << '\n';
    return kExitError;
  } catch (const InternalInconsistency& e) {
    out << error_document(command, params, "internal-inconsistency", e.what()).dump(2) << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    out << error_document(command, params, "error", e.what()).dump(2) << '\n';
    return kExitError;
  }
}

}  // namespace nkstar
