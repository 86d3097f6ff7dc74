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

#include "nkstar/cut_projection.hpp"

#include <algorithm>

#include "nkstar/errors.hpp"

namespace nkstar {

ProjectionAnalysis cut_projection(const StarGraph& g, const CutCertificate& cert,
                                  const SearchResult& proof, int t) {
  const int n = g.n();
  const int k = g.k();
  const int h = cert.h;
  if (k < 3 || k > n - 1 || h < 1 || h > n - k) {
    throw DomainError("projection analysis needs 3 <= k <= n-1 and 1 <= h <= n-k");
  }
  if (t < 2 || t > k) throw DomainError("t must lie in {2..k}");
  if (!cert.valid || cert.cut.universe() != g.order()) {
    throw DomainError("certificate is not a valid cut of this graph");
  }
  if (!proof.proven_minimum() || proof.h != h || *proof.value != cert.size ||
      proof.order != g.order()) {
    throw DomainError("certificate is not a proven minimum h-cut");
  }
  // The certificate must really be an h-cut here, not just claim it.
  const CutCertificate checked = certify_cut(g, cert.cut, h);
  if (!checked.valid) {
    throw DomainError("certificate fails validation: " + checked.diagnostic);
  }

  ProjectionAnalysis a;
  a.n = n;
  a.k = k;
  a.h = h;
  a.t = t;
  a.cut_size = cert.size;
  a.x = checked.witness.members();
  VertexSet y_set = checked.cut.complement();
  y_set -= checked.witness;
  a.y = y_set.members();
  a.witness_note = "X is the smallest component of G-S (" +
                   std::to_string(a.x.size()) + " of " +
                   std::to_string(a.x.size() + a.y.size()) + " surviving vertices)";

  const StarGraph smaller = StarGraph::build(n - 1, k - 1);
  a.slices_are_lower_cuts = true;
  for (Symbol i = 1; i <= n; ++i) {
    ProjectionSlice slice;
    slice.i = i;
    for (VertexId v : subgraph(g, {t, i})) {
      if (checked.cut.test(v)) {
        slice.s.push_back(v);
      } else if (checked.witness.test(v)) {
        slice.x.push_back(v);
      } else {
        slice.y.push_back(v);
      }
    }
    if (!slice.x.empty()) a.j.push_back(i);
    if (!slice.y.empty()) a.t_set.push_back(i);
    if (!slice.x.empty() && !slice.y.empty()) {
      a.j_prime.push_back(i);
      VertexSet lowered(smaller.order());
      for (VertexId v : slice.s) {
        lowered.set(smaller.id_of(relabel_into_subgraph(g.label(v), {t, i})));
      }
      const HCutCheck check = is_h_cut(smaller, lowered, h - 1);
      slice.s_is_lower_cut = check.is_cut;
      slice.diagnostic = check.diagnostic();
      a.slices_are_lower_cuts = a.slices_are_lower_cuts && check.is_cut;
    }
    a.slices.push_back(std::move(slice));
  }

  std::vector<Symbol> covered = a.j;
  covered.insert(covered.end(), a.t_set.begin(), a.t_set.end());
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  a.covers_alphabet = static_cast<int>(covered.size()) == n;

  a.product_bound = a.j_prime.size() *
                    static_cast<std::size_t>(theorem_value(n - 1, k - 1, h - 1));
  a.product_bound_holds = a.cut_size >= a.product_bound;
  return a;
}

ProjectionAnalysis cut_projection(const StarGraph& g, const SearchResult& proof,
                                  int t) {
  if (!proof.certificate) throw DomainError("search result has no certificate");
  return cut_projection(g, *proof.certificate, proof, t);
}

}  // namespace nkstar
