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

#include "nkstar/combinations.hpp"

#include "nkstar/errors.hpp"

namespace nkstar {

BinomialTable::BinomialTable(std::size_t max_n, std::size_t max_k)
    : max_k_(max_k), table_((max_n + 1) * (max_k + 1), 0) {
  auto at = [&](std::size_t a, std::size_t b) -> std::uint64_t& {
    return table_[a * (max_k_ + 1) + b];
  };
  for (std::size_t a = 0; a <= max_n; ++a) {
    at(a, 0) = 1;
    for (std::size_t b = 1; b <= max_k && b <= a; ++b) {
      const std::uint64_t x = at(a - 1, b - 1);
      const std::uint64_t y = b <= a - 1 ? at(a - 1, b) : 0;
      at(a, b) = (x == kSaturated || y == kSaturated || x > kSaturated - y)
                     ? kSaturated
                     : x + y;
    }
  }
}

std::uint64_t BinomialTable::operator()(std::size_t a, std::size_t b) const {
  if (b > max_k_ || a * (max_k_ + 1) + b >= table_.size()) {
    throw DomainError("binomial table lookup out of range");
  }
  return b > a ? 0 : table_[a * (max_k_ + 1) + b];
}

std::uint64_t colex_rank(std::span<const VertexId> combo, const BinomialTable& binom) {
  std::uint64_t r = 0;
  for (std::size_t j = 0; j < combo.size(); ++j) r += binom(combo[j], j + 1);
  return r;
}

void colex_unrank(std::uint64_t index, std::span<VertexId> out,
                  const BinomialTable& binom) {
  // Greedy from the top element: the largest c with C(c, j) <= index.
  for (std::size_t j = out.size(); j >= 1; --j) {
    std::size_t c = j - 1;
    while (binom(c + 1, j) <= index) ++c;
    if (j < out.size() && c >= out[j]) {
      throw DomainError("colex index out of range");
    }
    out[j - 1] = static_cast<VertexId>(c);
    index -= binom(c, j);
  }
  if (index != 0) throw DomainError("colex index out of range");
}

bool colex_next(std::span<VertexId> combo, std::size_t universe) {
  const std::size_t m = combo.size();
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t limit = (j + 1 < m) ? combo[j + 1] : universe;
    if (combo[j] + 1 < limit) {
      ++combo[j];
      for (std::size_t i = 0; i < j; ++i) combo[i] = static_cast<VertexId>(i);
      return true;
    }
  }
  return false;
}

}  // namespace nkstar
