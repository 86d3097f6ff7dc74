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

#ifndef NKSTAR_COMBINATIONS_HPP
#define NKSTAR_COMBINATIONS_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "nkstar/vertex_set.hpp"

namespace nkstar {

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

/// Binomial coefficients C(a, b) for a <= max_n, b <= max_k. Values that do
/// not fit in 64 bits saturate to kSaturated.
class BinomialTable {
 public:
  BinomialTable(std::size_t max_n, std::size_t max_k);
  std::uint64_t operator()(std::size_t a, std::size_t b) const;

 private:
  std::size_t max_k_;
  std::vector<std::uint64_t> table_;
};

/// Colexicographic index of a strictly increasing combination:
/// sum over j of C(c_j, j+1).
std::uint64_t colex_rank(std::span<const VertexId> combo, const BinomialTable& binom);

/// Writes the combination with colex index `index` into `out` (size m).
void colex_unrank(std::uint64_t index, std::span<VertexId> out,
                  const BinomialTable& binom);

/// Advances to the next combination of {0..universe-1} in colex order.
/// Returns false (leaving `combo` unspecified) when `combo` was the last one.
bool colex_next(std::span<VertexId> combo, std::size_t universe);

}  // namespace nkstar

#endif  // NKSTAR_COMBINATIONS_HPP
