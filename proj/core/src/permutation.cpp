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

#include "nkstar/permutation.hpp"

#include <charconv>
#include <limits>

#include "nkstar/errors.hpp"

namespace nkstar {

namespace {

std::string describe(int n, int k) {
  return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
}

void check_nk(int n, int k) {
  if (n < 1 || k < 1 || k > n) {
    throw DomainError("k-permutations need 1 <= k <= n, got " + describe(n, k));
  }
}

// Number of ways to complete a prefix of length `used` out of `n` symbols to
// a k-permutation. Saturates to max on overflow; callers only use it after
// count_k_permutations() has confirmed the total fits.
std::uint64_t completions(int n, int k, int used) {
  std::uint64_t c = 1;
  for (int j = used; j < k; ++j) c *= static_cast<std::uint64_t>(n - j);
  return c;
}

}  // namespace

KPermutation::KPermutation(int n, std::vector<Symbol> symbols)
    : n_(n), symbols_(std::move(symbols)) {
  const int k = static_cast<int>(symbols_.size());
  if (n < 1 || k > n) {
    throw DomainError("invalid k-permutation shape " + describe(n, k));
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (Symbol s : symbols_) {
    if (s < 1 || s > n) {
      throw DomainError("symbol " + std::to_string(s) + " outside {1.." +
                        std::to_string(n) + "}");
    }
    if (seen[static_cast<std::size_t>(s)]) {
      throw DomainError("repeated symbol " + std::to_string(s));
    }
    seen[static_cast<std::size_t>(s)] = true;
  }
}

Symbol KPermutation::bit(int position) const {
  if (position < 1 || position > k()) {
    throw DomainError("position " + std::to_string(position) +
                      " outside {1.." + std::to_string(k()) + "}");
  }
  return symbols_[static_cast<std::size_t>(position - 1)];
}

bool KPermutation::contains(Symbol s) const noexcept {
  for (Symbol x : symbols_) {
    if (x == s) return true;
  }
  return false;
}

std::uint64_t count_k_permutations(int n, int k) {
  check_nk(n, k);
  std::uint64_t c = 1;
  for (int j = 0; j < k; ++j) {
    const auto f = static_cast<std::uint64_t>(n - j);
    if (c > std::numeric_limits<std::uint64_t>::max() / f) {
      throw DomainError("|P" + describe(n, k) + "| does not fit in 64 bits");
    }
    c *= f;
  }
  return c;
}

std::vector<KPermutation> enumerate_k_permutations(int n, int k) {
  const std::uint64_t total = count_k_permutations(n, k);
  std::vector<KPermutation> out;
  out.reserve(total);

  std::vector<Symbol> cur;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  cur.reserve(static_cast<std::size_t>(k));

  // Depth-first in increasing symbol order yields lexicographic order.
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.emplace_back(n, cur);
      return;
    }
    for (Symbol s = 1; s <= n; ++s) {
      if (used[static_cast<std::size_t>(s)]) continue;
      used[static_cast<std::size_t>(s)] = true;
      cur.push_back(s);
      self(self);
      cur.pop_back();
      used[static_cast<std::size_t>(s)] = false;
    }
  };
  rec(rec);
  return out;
}

std::uint64_t rank(const KPermutation& p) {
  const int n = p.n();
  const int k = p.k();
  count_k_permutations(n, k);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::uint64_t r = 0;
  for (int pos = 0; pos < k; ++pos) {
    const Symbol s = p.symbols()[static_cast<std::size_t>(pos)];
    std::uint64_t smaller_unused = 0;
    for (Symbol q = 1; q < s; ++q) {
      if (!used[static_cast<std::size_t>(q)]) ++smaller_unused;
    }
    r += smaller_unused * completions(n, k, pos + 1);
    used[static_cast<std::size_t>(s)] = true;
  }
  return r;
}

KPermutation unrank(int n, int k, std::uint64_t r) {
  const std::uint64_t total = count_k_permutations(n, k);
  if (r >= total) {
    throw DomainError("rank " + std::to_string(r) + " outside [0, " +
                      std::to_string(total) + ")");
  }
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::vector<Symbol> symbols;
  symbols.reserve(static_cast<std::size_t>(k));
  for (int pos = 0; pos < k; ++pos) {
    const std::uint64_t block = completions(n, k, pos + 1);
    std::uint64_t skip = r / block;
    r %= block;
    for (Symbol q = 1; q <= n; ++q) {
      if (used[static_cast<std::size_t>(q)]) continue;
      if (skip == 0) {
        symbols.push_back(q);
        used[static_cast<std::size_t>(q)] = true;
        break;
      }
      --skip;
    }
  }
  return KPermutation(n, std::move(symbols));
}

std::string to_string(const KPermutation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.symbols().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.symbols()[i]);
  }
  return out;
}

KPermutation parse_k_permutation(std::string_view text, int n, int expected_k) {
  std::vector<Symbol> symbols;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view field = text.substr(start, end - start);
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) {
      field.remove_prefix(1);
    }
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t' ||
                              field.back() == '\r')) {
      field.remove_suffix(1);
    }
    Symbol s = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), s);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw DomainError("malformed permutation '" + std::string(text) + "'");
    }
    symbols.push_back(s);
    start = end + 1;
  }
  if (expected_k >= 0 && static_cast<int>(symbols.size()) != expected_k) {
    throw DomainError("permutation '" + std::string(text) + "' has length " +
                      std::to_string(symbols.size()) + ", expected " +
                      std::to_string(expected_k));
  }
  return KPermutation(n, std::move(symbols));
}

}  // namespace nkstar
