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

/// \file
/// Lower Bruhat intervals [e, w] with explicit cover structure, plus
/// parabolic and Billey-Postnikov decompositions.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bruhat/errors.hpp"
#include "bruhat/groups.hpp"
#include "bruhat/node_set.hpp"

namespace bruhat {

/// u <= w in Bruhat order. Dominance criterion for S_n, down-closure for B_n.
template <CoxeterGroup G>
bool bruhat_leq(const G& g, const typename G::element_type& u, const typename G::element_type& w) {
  return g.leq(u, w);
}

inline bool bruhat_leq(const Permutation& u, const Permutation& w) { return dominance_leq(u, w); }

/// The poset [e, w]. Elements carry dense ids assigned in breadth-first
/// order from the top, so id 0 is w, ids are sorted by decreasing rank, and
/// the last id is e.
template <CoxeterGroup G>
class BruhatInterval {
 public:
  using element_type = typename G::element_type;

  BruhatInterval() = default;

  /// Assembles an interval from explicit parts; `covers` holds pairs
  /// (lower id, upper id). Used by deserialization. Ids must already be in
  /// non-increasing rank order with a unique top at id 0.
  static BruhatInterval from_parts(std::vector<element_type> elements, std::vector<int> ranks,
                                   const std::vector<std::pair<int, int>>& covers) {
    BruhatInterval I;
    if (elements.empty() || elements.size() != ranks.size()) {
      throw ValidationError("interval needs one rank per element and at least one element");
    }
    I.elements_ = std::move(elements);
    I.rank_ = std::move(ranks);
    I.down_.assign(I.elements_.size(), {});
    I.up_.assign(I.elements_.size(), {});
    for (std::size_t i = 0; i < I.elements_.size(); ++i) {
      if (!I.index_.emplace(I.elements_[i], static_cast<int>(i)).second) {
        throw ValidationError("duplicate element in interval");
      }
      if (i > 0 && I.rank_[i] > I.rank_[i - 1]) throw ValidationError("interval ids must be in non-increasing rank order");
    }
    for (auto [lo, hi] : covers) {
      if (lo < 0 || hi < 0 || static_cast<std::size_t>(lo) >= I.size() || static_cast<std::size_t>(hi) >= I.size() ||
          I.rank_[static_cast<std::size_t>(hi)] != I.rank_[static_cast<std::size_t>(lo)] + 1) {
        throw ValidationError("cover (" + std::to_string(lo) + "," + std::to_string(hi) + ") does not join adjacent ranks");
      }
      I.down_[static_cast<std::size_t>(hi)].push_back(lo);
      I.up_[static_cast<std::size_t>(lo)].push_back(hi);
    }
    I.finish();
    return I;
  }

  const element_type& top() const { return elements_.front(); }
  std::size_t size() const { return elements_.size(); }
  int length() const { return rank_.front(); }

  const element_type& element(int id) const { return elements_[static_cast<std::size_t>(id)]; }
  const std::vector<element_type>& elements() const { return elements_; }

  std::optional<int> id_of(const element_type& u) const {
    auto it = index_.find(u);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const element_type& u) const { return index_.contains(u); }

  int rank_of(int id) const { return rank_[static_cast<std::size_t>(id)]; }
  const std::vector<int>& ranks() const { return rank_; }

  /// Ids covered by `id`, ascending.
  std::span<const int> down_covers(int id) const { return down_[static_cast<std::size_t>(id)]; }
  /// Ids covering `id`, ascending.
  std::span<const int> up_covers(int id) const { return up_[static_cast<std::size_t>(id)]; }

  /// Ids of P_k, ascending. Empty outside 0..length().
  std::vector<int> rank_level(int k) const {
    std::vector<int> out;
    if (k < 0 || k > length()) return out;
    for (int id = level_begin_[static_cast<std::size_t>(k)]; id < level_end_[static_cast<std::size_t>(k)]; ++id) {
      out.push_back(id);
    }
    return out;
  }

  std::size_t rank_size(int k) const {
    if (k < 0 || k > length()) return 0;
    return static_cast<std::size_t>(level_end_[static_cast<std::size_t>(k)] - level_begin_[static_cast<std::size_t>(k)]);
  }

  std::size_t cover_count() const {
    std::size_t c = 0;
    for (const auto& d : down_) c += d.size();
    return c;
  }

  /// All covers as (lower id, upper id), sorted.
  std::vector<std::pair<int, int>> covers() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t hi = 0; hi < down_.size(); ++hi) {
      for (int lo : down_[hi]) out.emplace_back(lo, static_cast<int>(hi));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool covered_by(int lower, int upper) const {
    const auto& d = down_[static_cast<std::size_t>(upper)];
    return std::binary_search(d.begin(), d.end(), lower);
  }

  friend bool operator==(const BruhatInterval& a, const BruhatInterval& b) {
    return a.elements_ == b.elements_ && a.rank_ == b.rank_ && a.down_ == b.down_;
  }

 private:
  template <CoxeterGroup H>
  friend BruhatInterval<H> build_interval(const H& g, const typename H::element_type& w);

  void finish() {
    for (auto& d : down_) std::sort(d.begin(), d.end());
    for (auto& u : up_) std::sort(u.begin(), u.end());
    // Ids are sorted by decreasing rank, so ranks >= k form a prefix
    // [0, prefix_end(k)) and P_k = [prefix_end(k+1), prefix_end(k)).
    const int top_rank = rank_.front();
    auto prefix_end = [&](int k) {
      return static_cast<int>(std::find_if(rank_.begin(), rank_.end(), [&](int r) { return r < k; }) - rank_.begin());
    };
    level_begin_.assign(static_cast<std::size_t>(top_rank) + 1, 0);
    level_end_.assign(static_cast<std::size_t>(top_rank) + 1, 0);
    for (int k = 0; k <= top_rank; ++k) {
      level_begin_[static_cast<std::size_t>(k)] = prefix_end(k + 1);
      level_end_[static_cast<std::size_t>(k)] = prefix_end(k);
    }
  }

  std::vector<element_type> elements_;
  std::vector<int> rank_;
  std::vector<std::vector<int>> down_;
  std::vector<std::vector<int>> up_;
  std::unordered_map<element_type, int> index_;
  std::vector<int> level_begin_;
  std::vector<int> level_end_;
};

/// Downward closure from w by cover moves, breadth first, with hashing to
/// deduplicate. Every cover lowers length by exactly one, so BFS layers are
/// the ranks of [e, w] from the top.
template <CoxeterGroup G>
BruhatInterval<G> build_interval(const G& g, const typename G::element_type& w) {
  BruhatInterval<G> I;
  I.elements_.push_back(w);
  I.rank_.push_back(g.length(w));
  I.index_.emplace(w, 0);
  I.down_.emplace_back();
  for (std::size_t k = 0; k < I.elements_.size(); ++k) {
    const int r = I.rank_[k];
    for (auto& u : g.down_covers(I.elements_[k])) {
      auto [it, fresh] = I.index_.emplace(u, static_cast<int>(I.elements_.size()));
      if (fresh) {
        I.elements_.push_back(std::move(u));
        I.rank_.push_back(r - 1);
        I.down_.emplace_back();
      }
      I.down_[k].push_back(it->second);
    }
  }
  I.up_.assign(I.elements_.size(), {});
  for (std::size_t hi = 0; hi < I.down_.size(); ++hi) {
    for (int lo : I.down_[hi]) I.up_[static_cast<std::size_t>(lo)].push_back(static_cast<int>(hi));
  }
  I.finish();
  return I;
}

inline BruhatInterval<SymmetricGroup> build_interval(const Permutation& w) {
  return build_interval(SymmetricGroup(w.degree()), w);
}

/// (|P_0|, |P_1|, ..., |P_l(w)|).
template <CoxeterGroup G>
std::vector<std::size_t> rank_profile(const BruhatInterval<G>& I) {
  std::vector<std::size_t> out;
  for (int k = 0; k <= I.length(); ++k) out.push_back(I.rank_size(k));
  return out;
}

struct DegreeExtremes {
  std::size_t max_atom_up_degree = 0;
  std::size_t max_coatom_down_degree = 0;
  friend bool operator==(const DegreeExtremes&, const DegreeExtremes&) = default;
};

/// Largest number of elements covering an atom, and largest number of
/// elements covered by a coatom, both counted inside [e, w].
template <CoxeterGroup G>
DegreeExtremes degree_extremes(const BruhatInterval<G>& I) {
  if (I.length() < 2) throw ValidationError("degree extremes need length >= 2");
  DegreeExtremes d;
  for (int id : I.rank_level(1)) d.max_atom_up_degree = std::max(d.max_atom_up_degree, I.up_covers(id).size());
  for (int id : I.rank_level(I.length() - 1)) {
    d.max_coatom_down_degree = std::max(d.max_coatom_down_degree, I.down_covers(id).size());
  }
  return d;
}

// --- parabolic decompositions ---------------------------------------------

/// Right side: w = quotient_part * parabolic_part with quotient_part in W^J.
/// Left side:  w = parabolic_part * quotient_part with quotient_part in ^JW.
/// Either way the parabolic part lies in W_J and lengths add.
template <class E>
struct ParabolicDecomposition {
  NodeSet J;
  E quotient_part;
  E parabolic_part;
  Side side = Side::right;
};

template <CoxeterGroup G>
ParabolicDecomposition<typename G::element_type> parabolic_decompose(const G& g, const typename G::element_type& w,
                                                                    NodeSet J, Side side = Side::right) {
  check_subset(g, J);
  if (side == Side::left) {
    // Mirror of the right-sided decomposition of the inverse.
    auto r = parabolic_decompose(g, g.inverse(w), J, Side::right);
    return {J, g.inverse(r.quotient_part), g.inverse(r.parabolic_part), Side::left};
  }
  auto quotient = w;
  auto parabolic = g.identity();
  for (NodeSet d = g.right_descents(quotient) & J; !d.empty(); d = g.right_descents(quotient) & J) {
    const auto s = g.generator(d.min());
    quotient = g.multiply(quotient, s);
    parabolic = g.multiply(s, parabolic);
  }
  return {J, std::move(quotient), std::move(parabolic), Side::right};
}

inline ParabolicDecomposition<Permutation> parabolic_decompose(const Permutation& w, NodeSet J,
                                                              Side side = Side::right) {
  return parabolic_decompose(SymmetricGroup(w.degree()), w, J, side);
}

/// Whether w = w^J w_J satisfies supp(w^J) ∩ J ⊆ D_L(w_J).
template <CoxeterGroup G>
bool is_bp_decomposition(const G& g, const typename G::element_type& w, NodeSet J) {
  const auto d = parabolic_decompose(g, w, J, Side::right);
  return (support(g, d.quotient_part) & J).is_subset_of(g.left_descents(d.parabolic_part));
}

/// m(u, J): the maximum of [e, u] ∩ W_J. Found by enumeration; throws
/// InvariantViolation if that set has no unique maximum.
template <CoxeterGroup G>
typename G::element_type max_parabolic_below(const G& g, const typename G::element_type& u, NodeSet J) {
  check_subset(g, J);
  const auto I = build_interval(g, u);
  std::vector<int> inside;
  for (int id = 0; id < static_cast<int>(I.size()); ++id) {
    if (support(g, I.element(id)).is_subset_of(J)) inside.push_back(id);
  }
  // Ids are in decreasing rank order, so a maximum must be the first hit.
  const auto& candidate = I.element(inside.front());
  for (int id : inside) {
    if (!g.leq(I.element(id), candidate)) {
      throw InvariantViolation("[e,u] ∩ W_J has no unique maximum for u = " + g.format(u));
    }
  }
  return candidate;
}

}  // namespace bruhat
