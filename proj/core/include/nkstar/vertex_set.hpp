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

#ifndef NKSTAR_VERTEX_SET_HPP
#define NKSTAR_VERTEX_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace nkstar {

/// Dense vertex identifier; for star graphs it is the lexicographic rank.
using VertexId = std::uint32_t;

inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t order) {
  return (order + kWordBits - 1) / kWordBits;
}

/// Fixed-universe bitset over {0..order-1}.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t order);
  VertexSet(std::size_t order, std::initializer_list<VertexId> members);
  VertexSet(std::size_t order, std::span<const VertexId> members);

  static VertexSet full(std::size_t order);

  std::size_t universe() const noexcept { return order_; }
  std::size_t count() const noexcept;
  bool empty() const noexcept;

  bool test(VertexId v) const noexcept {
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void set(VertexId v) noexcept { words_[v / kWordBits] |= bit(v); }
  void reset(VertexId v) noexcept { words_[v / kWordBits] &= ~bit(v); }
  void clear() noexcept;

  /// Throws DomainError when `v` is not in the universe.
  void check(VertexId v) const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o);
  VertexSet complement() const;

  bool is_subset_of(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;

  /// Members in increasing order.
  std::vector<VertexId> members() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        const auto b = static_cast<std::size_t>(std::countr_zero(word));
        fn(static_cast<VertexId>(w * kWordBits + b));
        word &= word - 1;
      }
    }
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  static std::uint64_t bit(VertexId v) noexcept {
    return std::uint64_t{1} << (v % kWordBits);
  }
  void trim() noexcept;

  std::size_t order_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace nkstar

#endif  // NKSTAR_VERTEX_SET_HPP
