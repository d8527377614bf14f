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
/// Level graphs, bipartite isomorphism, the explicit duality map of a
/// polished element, and a general self-duality search on Hasse diagrams.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bruhat/bruhat_poset.hpp"
#include "bruhat/errors.hpp"
#include "bruhat/groups.hpp"
#include "bruhat/polished.hpp"

namespace bruhat {

// --- level graphs ---------------------------------------------------------

/// Bipartite cover graph between two adjacent ranks. `small` is the rank
/// nearer the end of the interval (atoms or coatoms), `big` the next one
/// in. Edges are (small index, big index), sorted.
template <class E>
struct LevelGraph {
  std::vector<E> small;
  std::vector<E> big;
  std::vector<std::pair<int, int>> edges;

  std::vector<std::vector<int>> small_adjacency() const {
    std::vector<std::vector<int>> adj(small.size());
    for (auto [a, b] : edges) adj[static_cast<std::size_t>(a)].push_back(b);
    return adj;
  }
  std::vector<std::vector<int>> big_adjacency() const {
    std::vector<std::vector<int>> adj(big.size());
    for (auto [a, b] : edges) adj[static_cast<std::size_t>(b)].push_back(a);
    return adj;
  }
  std::vector<std::size_t> small_degrees() const {
    std::vector<std::size_t> d(small.size(), 0);
    for (auto [a, b] : edges) ++d[static_cast<std::size_t>(a)];
    return d;
  }

  friend bool operator==(const LevelGraph&, const LevelGraph&) = default;
};

namespace detail {

template <CoxeterGroup G>
LevelGraph<typename G::element_type> level_graph(const BruhatInterval<G>& I, int small_rank, int big_rank) {
  if (I.length() < 2) throw ValidationError("level graphs need length >= 2");
  LevelGraph<typename G::element_type> out;
  const auto small_ids = I.rank_level(small_rank);
  const auto big_ids = I.rank_level(big_rank);
  std::vector<int> pos(I.size(), -1);
  for (std::size_t i = 0; i < small_ids.size(); ++i) {
    pos[static_cast<std::size_t>(small_ids[i])] = static_cast<int>(i);
    out.small.push_back(I.element(small_ids[i]));
  }
  for (std::size_t j = 0; j < big_ids.size(); ++j) {
    const int id = big_ids[j];
    out.big.push_back(I.element(id));
    const auto nbrs = big_rank > small_rank ? I.down_covers(id) : I.up_covers(id);
    for (int x : nbrs) out.edges.emplace_back(pos[static_cast<std::size_t>(x)], static_cast<int>(j));
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace detail

/// Γ_w: atoms against rank-2 elements.
template <CoxeterGroup G>
LevelGraph<typename G::element_type> gamma_lower(const BruhatInterval<G>& I) {
  return detail::level_graph(I, 1, 2);
}

/// Γ^w: coatoms against corank-2 elements.
template <CoxeterGroup G>
LevelGraph<typename G::element_type> gamma_upper(const BruhatInterval<G>& I) {
  return detail::level_graph(I, I.length() - 1, I.length() - 2);
}

/// small[i] -> small[small_map[i]], big[j] -> big[big_map[j]].
struct BipartiteIsomorphism {
  std::vector<int> small_map;
  std::vector<int> big_map;
};

/// A side-respecting isomorphism G -> H, if any. Small sides are matched by
/// backtracking with degree and co-degree pruning; the big side then has to
/// agree as a multiset of neighbourhoods.
template <class E, class F>
std::optional<BipartiteIsomorphism> bipartite_isomorphic(const LevelGraph<E>& G, const LevelGraph<F>& H) {
  const std::size_t k = G.small.size();
  if (k != H.small.size() || G.big.size() != H.big.size() || G.edges.size() != H.edges.size()) return std::nullopt;
  const auto ga = G.small_adjacency();
  const auto ha = H.small_adjacency();
  const auto gb = G.big_adjacency();
  const auto hb = H.big_adjacency();

  // Signature of a small vertex: degree, then sorted degrees of neighbours.
  auto signature = [](const std::vector<std::vector<int>>& adj, const std::vector<std::vector<int>>& other, int v) {
    std::vector<std::size_t> sig{adj[static_cast<std::size_t>(v)].size()};
    std::vector<std::size_t> nd;
    for (int b : adj[static_cast<std::size_t>(v)]) nd.push_back(other[static_cast<std::size_t>(b)].size());
    std::sort(nd.rbegin(), nd.rend());
    sig.insert(sig.end(), nd.begin(), nd.end());
    return sig;
  };
  std::vector<std::vector<std::size_t>> gsig(k), hsig(k);
  for (std::size_t i = 0; i < k; ++i) {
    gsig[i] = signature(ga, gb, static_cast<int>(i));
    hsig[i] = signature(ha, hb, static_cast<int>(i));
  }
  {
    auto a = gsig;
    auto b = hsig;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  auto codegree = [k](const std::vector<std::vector<int>>& big_adj) {
    std::vector<std::vector<int>> c(k, std::vector<int>(k, 0));
    for (const auto& nb : big_adj) {
      for (int x : nb) {
        for (int y : nb) c[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] += 1;
      }
    }
    return c;
  };
  const auto gc = codegree(gb);
  const auto hc = codegree(hb);

  std::vector<int> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return gsig[static_cast<std::size_t>(a)] > gsig[static_cast<std::size_t>(b)];
  });

  std::vector<int> f(k, -1);
  std::vector<bool> used(k, false);
  std::optional<BipartiteIsomorphism> found;

  // With f fixed, big vertices must match neighbourhood for neighbourhood.
  auto finish = [&]() -> std::optional<std::vector<int>> {
    std::map<std::vector<int>, std::vector<int>> pool;
    for (std::size_t j = 0; j < hb.size(); ++j) {
      auto nb = hb[j];
      std::sort(nb.begin(), nb.end());
      pool[nb].push_back(static_cast<int>(j));
    }
    std::vector<int> big_map(gb.size(), -1);
    for (std::size_t j = 0; j < gb.size(); ++j) {
      std::vector<int> image;
      for (int x : gb[j]) image.push_back(f[static_cast<std::size_t>(x)]);
      std::sort(image.begin(), image.end());
      auto it = pool.find(image);
      if (it == pool.end() || it->second.empty()) return std::nullopt;
      big_map[j] = it->second.back();
      it->second.pop_back();
    }
    return big_map;
  };

  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == k) {
      if (auto big_map = finish()) {
        found = BipartiteIsomorphism{f, std::move(*big_map)};
        return true;
      }
      return false;
    }
    const int v = order[depth];
    for (std::size_t x = 0; x < k; ++x) {
      if (used[x] || hsig[x] != gsig[static_cast<std::size_t>(v)]) continue;
      if (gc[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] != hc[x][x]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const int u = order[d];
        ok = gc[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] ==
             hc[x][static_cast<std::size_t>(f[static_cast<std::size_t>(u)])];
      }
      if (!ok) continue;
      f[static_cast<std::size_t>(v)] = static_cast<int>(x);
      used[x] = true;
      if (self(self, depth + 1)) return true;
      used[x] = false;
      f[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

// --- the explicit duality map ---------------------------------------------

/// u ↦ u^∨ for a polished w with a fixed decomposition. Built once per w,
/// then applied to many elements. Each block acts on its own factor of u:
/// with u = u^{J'} u_{J'}, the block map is
///   w_0(J) u^{J'} w_0(J ∩ J') u_{J'} w_0(J').
template <CoxeterGroup G>
class DualityMap {
 public:
  using element_type = typename G::element_type;

  DualityMap(G g, element_type w, PolishedDecomposition d) : g_(std::move(g)), w_(std::move(w)), d_(std::move(d)) {
    if (reconstruct(g_, d_) != w_) {
      throw ValidationError("decomposition does not reconstruct " + g_.format(w_));
    }
    for (const auto& b : d_.blocks) {
      parts_.push_back({b, longest_element(g_, b.J), longest_element(g_, b.J & b.Jp), longest_element(g_, b.Jp)});
    }
  }

  const element_type& top() const { return w_; }
  const PolishedDecomposition& decomposition() const { return d_; }

  /// Throws ValidationError when u is not below w.
  element_type operator()(const element_type& u) const {
    if (!g_.leq(u, w_)) throw ValidationError(g_.format(u) + " is not below " + g_.format(w_));
    auto out = apply_unchecked(u);
    if (!g_.leq(out, w_)) {
      throw InvariantViolation("duality map sent " + g_.format(u) + " outside [e, " + g_.format(w_) + "]");
    }
    return out;
  }

  /// Skips the membership checks; callers that already know u lies in
  /// [e, w] verify the result themselves.
  element_type apply_unchecked(const element_type& u) const {
    auto rest = u;
    auto out = g_.identity();
    for (const auto& p : parts_) {
      auto split = parabolic_decompose(g_, rest, p.block.S, Side::left);
      out = g_.multiply(out, block_map(p, split.parabolic_part));
      rest = std::move(split.quotient_part);
    }
    if (rest != g_.identity()) {
      throw ValidationError(g_.format(u) + " has support outside the blocks of " + g_.format(w_));
    }
    return out;
  }

 private:
  struct Part {
    PolishedBlock block;
    element_type w0J, w0I, w0Jp;
  };

  element_type block_map(const Part& p, const element_type& u) const {
    auto split = parabolic_decompose(g_, u, p.block.Jp, Side::right);
    auto x = g_.multiply(p.w0J, split.quotient_part);
    x = g_.multiply(x, p.w0I);
    x = g_.multiply(x, split.parabolic_part);
    return g_.multiply(x, p.w0Jp);
  }

  G g_;
  element_type w_;
  PolishedDecomposition d_;
  std::vector<Part> parts_;
};

template <CoxeterGroup G>
typename G::element_type duality_map(const G& g, const typename G::element_type& w, const PolishedDecomposition& d,
                                     const typename G::element_type& u) {
  return DualityMap<G>(g, w, d)(u);
}

inline Permutation duality_map(const Permutation& w, const PolishedDecomposition& d, const Permutation& u) {
  return duality_map(SymmetricGroup(w.degree()), w, d, u);
}

// --- certificates ---------------------------------------------------------

enum class CertificateKind { constructive_map, explicit_bijection, refuted };

inline std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::constructive_map: return "constructive-map";
    case CertificateKind::explicit_bijection: return "explicit-bijection";
    case CertificateKind::refuted: return "refuted";
  }
  return "?";
}

/// `pairing[id]` is the id of the image of element `id`.
struct DualityCertificate {
  CertificateKind kind = CertificateKind::refuted;
  std::optional<std::vector<int>> pairing;
  std::optional<std::string> refinement_trace;

  bool self_dual() const { return kind != CertificateKind::refuted; }
};

/// Whether `f` is a bijection on ids with u ⋖ v iff f(v) ⋖ f(u).
template <CoxeterGroup G>
bool is_antiautomorphism(const BruhatInterval<G>& I, const std::vector<int>& f) {
  const std::size_t n = I.size();
  if (f.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (int x : f) {
    if (x < 0 || static_cast<std::size_t>(x) >= n || hit[static_cast<std::size_t>(x)]) return false;
    hit[static_cast<std::size_t>(x)] = true;
  }
  // Covers map injectively into covers, so onto them as well.
  for (auto [lo, hi] : I.covers()) {
    if (!I.covered_by(f[static_cast<std::size_t>(hi)], f[static_cast<std::size_t>(lo)])) return false;
  }
  return true;
}

namespace detail {

/// Colour refinement on the disjoint union of the Hasse diagram (vertices
/// 0..n-1) and its reversal (vertices n..2n-1), with individualization and
/// backtracking. A bijection between the two halves that the final
/// partition makes discrete is an antiautomorphism.
template <CoxeterGroup G>
class DualitySearch {
 public:
  explicit DualitySearch(const BruhatInterval<G>& I) : I_(I), n_(static_cast<int>(I.size())) {
    down_.resize(2 * static_cast<std::size_t>(n_));
    up_.resize(2 * static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      for (int x : I.down_covers(v)) {
        down_[static_cast<std::size_t>(v)].push_back(x);
        up_[static_cast<std::size_t>(v + n_)].push_back(x + n_);
      }
      for (int x : I.up_covers(v)) {
        up_[static_cast<std::size_t>(v)].push_back(x);
        down_[static_cast<std::size_t>(v + n_)].push_back(x + n_);
      }
    }
  }

  DualityCertificate run() {
    std::vector<int> color(2 * static_cast<std::size_t>(n_));
    std::map<std::vector<int>, int> seed;
    std::vector<std::vector<int>> keys(color.size());
    for (int v = 0; v < 2 * n_; ++v) {
      const int r = v < n_ ? I_.rank_of(v) : I_.length() - I_.rank_of(v - n_);
      keys[static_cast<std::size_t>(v)] = {r, static_cast<int>(up_[static_cast<std::size_t>(v)].size()),
                                           static_cast<int>(down_[static_cast<std::size_t>(v)].size())};
      seed.emplace(keys[static_cast<std::size_t>(v)], 0);
    }
    int next = 0;
    for (auto& [key, c] : seed) c = next++;
    for (int v = 0; v < 2 * n_; ++v) color[static_cast<std::size_t>(v)] = seed.at(keys[static_cast<std::size_t>(v)]);

    std::string trace;
    if (!refine(color, &trace)) return {CertificateKind::refuted, std::nullopt, trace};
    std::vector<int> f;
    if (branch(color, f)) return {CertificateKind::explicit_bijection, f, std::nullopt};
    return {CertificateKind::refuted, std::nullopt,
            "refinement balanced (" + trace + "); exhaustive individualization found no antiautomorphism"};
  }

 private:
  /// Refines to a stable partition. Returns false as soon as some colour
  /// class has different sizes in the two halves.
  bool refine(std::vector<int>& color, std::string* trace) const {
    int classes = count_classes(color);
    for (int round = 0;; ++round) {
      if (auto bad = imbalance(color)) {
        if (trace) {
          *trace = "round " + std::to_string(round) + ": a colour class has " + std::to_string(bad->first) +
                   " elements in the interval and " + std::to_string(bad->second) + " in its dual";
        }
        return false;
      }
      std::map<std::vector<int>, int> ids;
      std::vector<std::vector<int>> keys(color.size());
      for (std::size_t v = 0; v < color.size(); ++v) {
        std::vector<int> key{color[v]};
        std::vector<int> dn, upc;
        for (int x : down_[v]) dn.push_back(color[static_cast<std::size_t>(x)]);
        for (int x : up_[v]) upc.push_back(color[static_cast<std::size_t>(x)]);
        std::sort(dn.begin(), dn.end());
        std::sort(upc.begin(), upc.end());
        key.push_back(static_cast<int>(dn.size()));
        key.insert(key.end(), dn.begin(), dn.end());
        key.insert(key.end(), upc.begin(), upc.end());
        ids.emplace(key, 0);
        keys[v] = std::move(key);
      }
      int next = 0;
      for (auto& [key, c] : ids) c = next++;
      for (std::size_t v = 0; v < color.size(); ++v) color[v] = ids.at(keys[v]);
      const int now = static_cast<int>(ids.size());
      if (now == classes) {
        if (trace) *trace = "stable after " + std::to_string(round + 1) + " rounds with " + std::to_string(now) + " classes";
        return true;
      }
      classes = now;
    }
  }

  int count_classes(const std::vector<int>& color) const {
    std::vector<int> c = color;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  std::optional<std::pair<int, int>> imbalance(const std::vector<int>& color) const {
    std::map<int, std::pair<int, int>> count;
    for (int v = 0; v < 2 * n_; ++v) {
      auto& c = count[color[static_cast<std::size_t>(v)]];
      (v < n_ ? c.first : c.second) += 1;
    }
    for (const auto& [col, c] : count) {
      if (c.first != c.second) return c;
    }
    return std::nullopt;
  }

  bool branch(const std::vector<int>& color, std::vector<int>& f) const {
    // Smallest non-singleton class; its first vertex in the left half.
    std::map<int, std::vector<int>> left, right;
    for (int v = 0; v < n_; ++v) left[color[static_cast<std::size_t>(v)]].push_back(v);
    for (int v = n_; v < 2 * n_; ++v) right[color[static_cast<std::size_t>(v)]].push_back(v - n_);
    int pick = -1;
    std::size_t best = 0;
    for (const auto& [c, vs] : left) {
      if (vs.size() > 1 && (pick < 0 || vs.size() < best)) {
        pick = c;
        best = vs.size();
      }
    }
    if (pick < 0) {
      f.assign(static_cast<std::size_t>(n_), -1);
      for (const auto& [c, vs] : left) f[static_cast<std::size_t>(vs.front())] = right.at(c).front();
      return is_antiautomorphism(I_, f);
    }
    const int v = left.at(pick).front();
    const int fresh = *std::max_element(color.begin(), color.end()) + 1;
    for (int x : right.at(pick)) {
      std::vector<int> c = color;
      c[static_cast<std::size_t>(v)] = fresh;
      c[static_cast<std::size_t>(x + n_)] = fresh;
      if (refine(c, nullptr) && branch(c, f)) return true;
    }
    return false;
  }

  const BruhatInterval<G>& I_;
  int n_;
  std::vector<std::vector<int>> down_;
  std::vector<std::vector<int>> up_;
};

}  // namespace detail

/// With a hint, checks that the duality map of the hinted decomposition
/// reverses every cover; if it does not, falls back to the search. Without
/// a hint, searches for an antiautomorphism directly.
template <CoxeterGroup G>
DualityCertificate certify_self_dual(const G& g, const BruhatInterval<G>& I,
                                     const std::optional<PolishedDecomposition>& hint = std::nullopt) {
  if (hint) {
    try {
      const DualityMap<G> dual(g, I.top(), *hint);
      std::vector<int> f(I.size(), -1);
      bool inside = true;
      for (int id = 0; id < static_cast<int>(I.size()) && inside; ++id) {
        auto image = I.id_of(dual.apply_unchecked(I.element(id)));
        if (image) {
          f[static_cast<std::size_t>(id)] = *image;
        } else {
          inside = false;
        }
      }
      if (inside && is_antiautomorphism(I, f)) return {CertificateKind::constructive_map, std::move(f), std::nullopt};
    } catch (const ValidationError&) {
      // Not a decomposition of this element; search instead.
    }
  }
  return detail::DualitySearch<G>(I).run();
}

inline DualityCertificate certify_self_dual(const BruhatInterval<SymmetricGroup>& I,
                                            const std::optional<PolishedDecomposition>& hint = std::nullopt) {
  return certify_self_dual(SymmetricGroup(I.top().degree()), I, hint);
}

}  // namespace bruhat
