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

#ifndef NKSTAR_PERMUTATION_HPP
#define NKSTAR_PERMUTATION_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nkstar {

/// A symbol of the alphabet {1..n}. Always 1-based at every interface.
using Symbol = int;

/// A k-permutation of {1..n}: k pairwise distinct symbols, each in {1..n}.
///
/// Positions are 1-based as well, so `bit(1)` is the leading symbol. The
/// value is immutable once constructed; the constructor rejects anything that
/// violates the invariants with DomainError.
class KPermutation {
 public:
  KPermutation(int n, std::vector<Symbol> symbols);

  int n() const noexcept { return n_; }
  int k() const noexcept { return static_cast<int>(symbols_.size()); }

  /// Symbol at 1-based `position`.
  Symbol bit(int position) const;
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  bool contains(Symbol s) const noexcept;

  friend bool operator==(const KPermutation&, const KPermutation&) = default;
  friend auto operator<=>(const KPermutation& a, const KPermutation& b) {
    // Lexicographic on symbols; n participates only as a tie-breaker.
    if (auto c = a.symbols_ <=> b.symbols_; c != 0) return c;
    return a.n_ <=> b.n_;
  }

 private:
  int n_;
  std::vector<Symbol> symbols_;
};

/// |P(n,k)| = n!/(n-k)!. Throws DomainError unless 1 <= k <= n and the
/// count fits in 64 bits.
std::uint64_t count_k_permutations(int n, int k);

/// All k-permutations of {1..n} in strictly increasing lexicographic order.
std::vector<KPermutation> enumerate_k_permutations(int n, int k);

/// Position of `p` in the lexicographic order of P(n,k).
std::uint64_t rank(const KPermutation& p);

/// Inverse of rank(): the permutation at position `r` of P(n,k).
KPermutation unrank(int n, int k, std::uint64_t r);

/// Comma-separated textual form, e.g. "3,1,2".
std::string to_string(const KPermutation& p);

/// Parses the comma-separated form. Whitespace around symbols is ignored.
/// When `expected_k` is non-negative the length must match it.
KPermutation parse_k_permutation(std::string_view text, int n,
                                 int expected_k = -1);

}  // namespace nkstar

#endif  // NKSTAR_PERMUTATION_HPP
