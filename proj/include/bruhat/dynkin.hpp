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

#include <string>
#include <vector>

#include "bruhat/errors.hpp"
#include "bruhat/node_set.hpp"

namespace bruhat {

/// Coxeter graph on nodes 1..rank. An absent edge means m(s,t) = 2.
class DynkinDiagram {
 public:
  DynkinDiagram() = default;

  explicit DynkinDiagram(int rank) : rank_(rank) {
    if (rank < 0 || rank > NodeSet::kMaxNode) throw CapacityError("diagram rank out of range");
    labels_.assign(static_cast<std::size_t>(rank + 1) * static_cast<std::size_t>(rank + 1), 2);
    for (int s = 1; s <= rank; ++s) at(s, s) = 1;
  }

  /// Path 1 - 2 - ... - rank with every label 3.
  static DynkinDiagram type_a(int rank) {
    DynkinDiagram d(rank);
    for (int s = 1; s < rank; ++s) d.add_edge(s, s + 1, 3);
    return d;
  }

  /// Path with labels 3 except m(rank-1, rank) = 4, so that s_rank is the
  /// sign-change generator.
  static DynkinDiagram type_b(int rank) {
    DynkinDiagram d(rank);
    for (int s = 1; s < rank; ++s) d.add_edge(s, s + 1, s + 1 == rank ? 4 : 3);
    return d;
  }

  void add_edge(int s, int t, int label) {
    check_node(s);
    check_node(t);
    if (s == t || label < 3) throw ValidationError("diagram edges join distinct nodes with label >= 3");
    at(s, t) = label;
    at(t, s) = label;
  }

  int rank() const { return rank_; }
  NodeSet nodes() const { return NodeSet::range(1, rank_); }

  /// m(s, t): 1 on the diagonal, 2 for non-adjacent nodes.
  int label(int s, int t) const {
    check_node(s);
    check_node(t);
    return labels_[index(s, t)];
  }

  bool adjacent(int s, int t) const { return s != t && label(s, t) >= 3; }

  NodeSet neighbors(int s) const {
    NodeSet out;
    for (int t = 1; t <= rank_; ++t) {
      if (adjacent(s, t)) out.insert(t);
    }
    return out;
  }

  /// Nonempty and connected as an induced subgraph.
  bool is_connected(NodeSet subset) const {
    if (subset.empty()) return false;
    NodeSet reached;
    reached.insert(subset.min());
    NodeSet frontier = reached;
    while (!frontier.empty()) {
      NodeSet next;
      for (int s : frontier.to_vector()) next = next | (neighbors(s) & subset);
      frontier = next - reached;
      reached = reached | next;
    }
    return reached == subset;
  }

  /// No diagram edge has both ends in `subset`.
  bool is_totally_disconnected(NodeSet subset) const {
    const auto v = subset.to_vector();
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        if (adjacent(v[i], v[j])) return false;
      }
    }
    return true;
  }

  /// No edge between the two subsets, so their parabolic subgroups commute.
  bool commute(NodeSet a, NodeSet b) const {
    for (int s : a.to_vector()) {
      if ((neighbors(s) & b).size() > 0 || b.contains(s)) return false;
    }
    return true;
  }

  friend bool operator==(const DynkinDiagram&, const DynkinDiagram&) = default;

 private:
  void check_node(int s) const {
    if (s < 1 || s > rank_) {
      throw ValidationError("node " + std::to_string(s) + " outside diagram of rank " + std::to_string(rank_));
    }
  }
  std::size_t index(int s, int t) const {
    return static_cast<std::size_t>(s) * static_cast<std::size_t>(rank_ + 1) + static_cast<std::size_t>(t);
  }
  int& at(int s, int t) { return labels_[index(s, t)]; }

  int rank_ = 0;
  std::vector<int> labels_;
};

}  // namespace bruhat
