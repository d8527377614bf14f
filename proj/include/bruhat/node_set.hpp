// Copyright 2026 The Bruhat Authors.
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

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "bruhat/errors.hpp"

namespace bruhat {

/// A set of simple-reflection indices (Dynkin diagram nodes), numbered from 1.
class NodeSet {
 public:
  static constexpr int kMaxNode = 63;

  constexpr NodeSet() = default;
  NodeSet(std::initializer_list<int> nodes) {
    for (int s : nodes) insert(s);
  }

  static constexpr NodeSet from_bits(std::uint64_t bits) {
    NodeSet r;
    r.bits_ = bits;
    return r;
  }

  /// {first, first+1, ..., last}; empty when last < first.
  static NodeSet range(int first, int last) {
    NodeSet r;
    for (int s = first; s <= last; ++s) r.insert(s);
    return r;
  }

  static NodeSet from_vector(const std::vector<int>& nodes) {
    NodeSet r;
    for (int s : nodes) r.insert(s);
    return r;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr bool contains(int s) const {
    return s >= 1 && s <= kMaxNode && ((bits_ >> s) & 1U) != 0;
  }

  void insert(int s) {
    if (s < 1 || s > kMaxNode) {
      throw ValidationError("node index " + std::to_string(s) + " out of range");
    }
    bits_ |= std::uint64_t{1} << s;
  }

  void erase(int s) {
    if (s >= 1 && s <= kMaxNode) bits_ &= ~(std::uint64_t{1} << s);
  }

  int min() const { return empty() ? 0 : std::countr_zero(bits_); }
  int max() const { return empty() ? 0 : 63 - std::countl_zero(bits_); }

  constexpr bool is_subset_of(NodeSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(NodeSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  /// Translates every node by `offset` (nodes must stay positive).
  NodeSet shifted(int offset) const {
    NodeSet r;
    for (int s : to_vector()) r.insert(s + offset);
    return r;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  /// "{1,2,3}"
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int s : to_vector()) {
      if (!first) out += ',';
      out += std::to_string(s);
      first = false;
    }
    return out + "}";
  }

  friend constexpr NodeSet operator|(NodeSet a, NodeSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr NodeSet operator&(NodeSet a, NodeSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr NodeSet operator-(NodeSet a, NodeSet b) { return from_bits(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(const NodeSet&, const NodeSet&) = default;
  friend constexpr auto operator<=>(NodeSet a, NodeSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace bruhat
