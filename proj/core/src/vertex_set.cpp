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

#include "nkstar/vertex_set.hpp"

#include <string>

#include "nkstar/errors.hpp"

namespace nkstar {

VertexSet::VertexSet(std::size_t order)
    : order_(order), words_(words_for(order), 0) {}

VertexSet::VertexSet(std::size_t order, std::initializer_list<VertexId> members)
    : VertexSet(order) {
  for (VertexId v : members) {
    check(v);
    set(v);
  }
}

VertexSet::VertexSet(std::size_t order, std::span<const VertexId> members)
    : VertexSet(order) {
  for (VertexId v : members) {
    check(v);
    set(v);
  }
}

VertexSet VertexSet::full(std::size_t order) {
  VertexSet s(order);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.trim();
  return s;
}

std::size_t VertexSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const noexcept {
  for (auto w : words_) {
    if (w) return false;
  }
  return true;
}

void VertexSet::clear() noexcept {
  for (auto& w : words_) w = 0;
}

void VertexSet::check(VertexId v) const {
  if (v >= order_) {
    throw DomainError("vertex id " + std::to_string(v) +
                      " outside graph of order " + std::to_string(order_));
  }
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  if (o.order_ != order_) throw DomainError("vertex set universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  if (o.order_ != order_) throw DomainError("vertex set universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  if (o.order_ != order_) throw DomainError("vertex set universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet c(order_);
  for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
  c.trim();
  return c;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  if (o.order_ != order_) throw DomainError("vertex set universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~o.words_[i]) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  if (o.order_ != order_) throw DomainError("vertex set universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & o.words_[i]) return true;
  }
  return false;
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  out.reserve(count());
  for_each([&](VertexId v) { out.push_back(v); });
  return out;
}

void VertexSet::trim() noexcept {
  const std::size_t tail = order_ % kWordBits;
  if (tail != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << tail) - 1;
  }
}

}  // namespace nkstar
