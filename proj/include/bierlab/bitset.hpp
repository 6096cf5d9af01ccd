//  Copyright 2026 The bierlab Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef BIERLAB_BITSET_HPP_
#define BIERLAB_BITSET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace bierlab {

// Fixed-universe dynamic bitset. Everything downstream (poset order
// relations, complex faces, sweep masks) is a subset of a small indexed
// universe, so subset/intersection tests on packed words dominate.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t universe)
      : n_(universe), w_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return n_; }
  std::size_t words() const { return w_.size(); }

  void set(std::size_t i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const {
    return (w_[i >> 6] >> (i & 63)) & 1;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const {
    for (std::uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  void clear() {
    for (auto& w : w_) w = 0;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& subtract(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  // First set bit at position >= from, or universe() if none.
  std::size_t next_set(std::size_t from) const {
    if (from >= n_) return n_;
    std::size_t wi = from >> 6;
    std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi >= w_.size()) return n_;
      w = w_[wi];
    }
  }

  template <typename Fn>
  void for_each_set(Fn fn) const {
    for (std::size_t i = next_set(0); i < n_; i = next_set(i + 1)) fn(i);
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    for_each_set([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
    return out;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t w : w_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

  // Deterministic total order: by count, then lowest set indices first.
  // Gives the canonical face enumeration order used across the project.
  static bool canonical_less(const Bitset& a, const Bitset& b) {
    std::size_t ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (std::size_t i = 0; i < a.w_.size() && i < b.w_.size(); ++i) {
      if (a.w_[i] != b.w_[i]) {
        // smaller lowest differing bit wins
        std::uint64_t diff = a.w_[i] ^ b.w_[i];
        std::uint64_t low = diff & (~diff + 1);
        return a.w_[i] & low;
      }
    }
    return false;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace bierlab

#endif  // BIERLAB_BITSET_HPP_
