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
/// Finite Coxeter groups of types A and B realized as (signed) permutation
/// groups. Everything downstream (intervals, duality, polished elements) is
/// written against the CoxeterGroup concept below.

#pragma once

#include <algorithm>
#include <concepts>
#include <cstdlib>
#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bruhat/dynkin.hpp"
#include "bruhat/errors.hpp"
#include "bruhat/node_set.hpp"
#include "bruhat/permutation.hpp"
#include "bruhat/signed_permutation.hpp"

namespace bruhat {

template <class G>
concept CoxeterGroup = requires(const G& g, const typename G::element_type& x, int i) {
  typename G::element_type;
  { g.rank() } -> std::convertible_to<int>;
  { g.identity() } -> std::same_as<typename G::element_type>;
  { g.generator(i) } -> std::same_as<typename G::element_type>;
  { g.length(x) } -> std::convertible_to<int>;
  { g.multiply(x, x) } -> std::same_as<typename G::element_type>;
  { g.inverse(x) } -> std::same_as<typename G::element_type>;
  { g.right_descents(x) } -> std::same_as<NodeSet>;
  { g.left_descents(x) } -> std::same_as<NodeSet>;
  { g.down_covers(x) } -> std::same_as<std::vector<typename G::element_type>>;
  { g.leq(x, x) } -> std::same_as<bool>;
  { g.diagram() } -> std::convertible_to<const DynkinDiagram&>;
  { g.format(x) } -> std::convertible_to<std::string>;
};

/// Tableau (rank-matrix) criterion: u <= w iff for every prefix 1..i and
/// threshold k, u has at most as many values >= k in the prefix as w does.
inline bool dominance_leq(const Permutation& u, const Permutation& w) {
  if (u.degree() != w.degree()) {
    throw DegreeMismatch("Bruhat comparison of degrees " + std::to_string(u.degree()) + " and " +
                         std::to_string(w.degree()));
  }
  const int n = u.degree();
  std::vector<int> cu(static_cast<std::size_t>(n) + 2, 0);
  std::vector<int> cw(static_cast<std::size_t>(n) + 2, 0);
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= u(i); ++k) ++cu[static_cast<std::size_t>(k)];
    for (int k = 1; k <= w(i); ++k) ++cw[static_cast<std::size_t>(k)];
    for (int k = 1; k <= n; ++k) {
      if (cu[static_cast<std::size_t>(k)] > cw[static_cast<std::size_t>(k)]) return false;
    }
  }
  return true;
}

/// S_n as the Coxeter group of type A_{n-1}; s_i = (i i+1).
class SymmetricGroup {
 public:
  using element_type = Permutation;

  explicit SymmetricGroup(int degree) : n_(degree), diagram_(DynkinDiagram::type_a(std::max(degree - 1, 0))) {
    if (degree < 0) throw ValidationError("negative degree");
  }

  int degree() const { return n_; }
  int rank() const { return std::max(n_ - 1, 0); }
  const DynkinDiagram& diagram() const { return diagram_; }

  Permutation identity() const { return Permutation::identity(n_); }

  Permutation generator(int i) const {
    if (i < 1 || i > rank()) throw ValidationError("generator s_" + std::to_string(i) + " not in S_" + std::to_string(n_));
    return Permutation::simple_reflection(n_, i);
  }

  Permutation longest() const { return Permutation::longest(n_); }

  int length(const Permutation& w) const { return bruhat::length(w); }
  Permutation multiply(const Permutation& a, const Permutation& b) const { return compose(a, b); }
  Permutation inverse(const Permutation& w) const { return bruhat::inverse(w); }
  NodeSet right_descents(const Permutation& w) const { return descents(w, Side::right); }
  NodeSet left_descents(const Permutation& w) const { return descents(w, Side::left); }

  /// All transpositions t_{ij}, i < j, in lexicographic order.
  std::vector<Permutation> reflections() const {
    std::vector<Permutation> out;
    for (int i = 1; i <= n_; ++i) {
      for (int j = i + 1; j <= n_; ++j) out.push_back(Permutation::transposition(n_, i, j));
    }
    return out;
  }

  /// Elements covered by w: w * t_{ij} over the minimal inversions (i, j).
  std::vector<Permutation> down_covers(const Permutation& w) const {
    std::vector<Permutation> out;
    for (auto [i, j] : minimal_inversions(w)) {
      std::vector<int> v = w.one_line();
      std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(j - 1)]);
      out.emplace_back(std::move(v));
    }
    return out;
  }

  bool leq(const Permutation& u, const Permutation& w) const { return dominance_leq(u, w); }

  std::string format(const Permutation& w) const { return w.to_string(); }

  Permutation parse(std::string_view text) const {
    Permutation w = parse_permutation(text);
    if (w.degree() != n_) throw DegreeMismatch("expected an element of S_" + std::to_string(n_));
    return w;
  }

 private:
  int n_;
  DynkinDiagram diagram_;
};

namespace detail {

/// Length in B_n with s_1..s_{n-1} adjacent transpositions and s_n negating
/// the last entry. Relabelling positions i -> n+1-i turns this into the
/// convention where the sign change acts on the first entry, for which the
/// length is inv(v) minus the sum of the negative entries of v.
inline int type_b_length(const SignedPermutation& w) {
  const int n = w.degree();
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int x = w(n + 1 - i);
    v[static_cast<std::size_t>(i - 1)] = x > 0 ? n + 1 - x : -(n + 1 + x);
  }
  int len = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (v[static_cast<std::size_t>(i)] > v[static_cast<std::size_t>(j)]) ++len;
    }
    if (v[static_cast<std::size_t>(i)] < 0) len -= v[static_cast<std::size_t>(i)];
  }
  return len;
}

}  // namespace detail

/// B_n as signed permutations. Generators s_i = (i i+1) for i < n and s_n
/// negating position n, so (s_{n-1} s_n)^4 = e.
class HyperoctahedralGroup {
 public:
  using element_type = SignedPermutation;

  explicit HyperoctahedralGroup(int degree) : n_(degree), diagram_(DynkinDiagram::type_b(degree)) {
    if (degree < 1) throw ValidationError("B_n needs n >= 1");
    if (degree > 8) throw CapacityError("B_n supported for n <= 8");
    reflections_ = std::make_shared<const std::vector<SignedPermutation>>(conjugation_closure());
    if (n_ <= 3) cross_check_length();
  }

  int degree() const { return n_; }
  int rank() const { return n_; }
  const DynkinDiagram& diagram() const { return diagram_; }

  SignedPermutation identity() const { return SignedPermutation::identity(n_); }

  SignedPermutation generator(int i) const {
    if (i < 1 || i > n_) throw ValidationError("generator s_" + std::to_string(i) + " not in B_" + std::to_string(n_));
    std::vector<int> v = identity().window();
    if (i < n_) {
      std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
    } else {
      v[static_cast<std::size_t>(n_ - 1)] = -v[static_cast<std::size_t>(n_ - 1)];
    }
    return SignedPermutation(std::move(v));
  }

  int length(const SignedPermutation& w) const { return detail::type_b_length(w); }
  SignedPermutation multiply(const SignedPermutation& a, const SignedPermutation& b) const { return compose(a, b); }
  SignedPermutation inverse(const SignedPermutation& w) const { return bruhat::inverse(w); }

  NodeSet right_descents(const SignedPermutation& w) const {
    NodeSet out;
    const int len = length(w);
    for (int i = 1; i <= n_; ++i) {
      if (length(compose(w, generator(i))) < len) out.insert(i);
    }
    return out;
  }
  NodeSet left_descents(const SignedPermutation& w) const { return right_descents(inverse(w)); }

  /// The n^2 reflections, i.e. all conjugates of generators.
  const std::vector<SignedPermutation>& reflections() const { return *reflections_; }

  std::vector<SignedPermutation> down_covers(const SignedPermutation& w) const {
    std::vector<SignedPermutation> out;
    const int len = length(w);
    for (const auto& t : *reflections_) {
      SignedPermutation u = compose(w, t);
      if (length(u) == len - 1) out.push_back(std::move(u));
    }
    return out;
  }

  /// Membership of u in the down-closure of w under covers.
  bool leq(const SignedPermutation& u, const SignedPermutation& w) const {
    if (u.degree() != n_ || w.degree() != n_) throw DegreeMismatch("Bruhat comparison across B_n of different n");
    const int lu = length(u);
    const int lw = length(w);
    if (lu > lw) return false;
    if (lu == lw) return u == w;
    std::unordered_set<SignedPermutation> layer{w};
    for (int len = lw; len > lu; --len) {
      std::unordered_set<SignedPermutation> next;
      for (const auto& v : layer) {
        for (auto& x : down_covers(v)) next.insert(std::move(x));
      }
      layer = std::move(next);
    }
    return layer.contains(u);
  }

  std::string format(const SignedPermutation& w) const { return w.to_string(); }

  SignedPermutation parse(std::string_view text) const {
    SignedPermutation w = parse_signed_permutation(text);
    if (w.degree() != n_) throw DegreeMismatch("expected an element of B_" + std::to_string(n_));
    return w;
  }

  /// Every element, in order of discovery by breadth-first search from e.
  std::vector<SignedPermutation> elements() const {
    std::vector<SignedPermutation> out{identity()};
    std::unordered_set<SignedPermutation> seen{identity()};
    for (std::size_t k = 0; k < out.size(); ++k) {
      for (int i = 1; i <= n_; ++i) {
        SignedPermutation y = compose(out[k], generator(i));
        if (seen.insert(y).second) out.push_back(std::move(y));
      }
    }
    return out;
  }

 private:
  std::vector<SignedPermutation> conjugation_closure() const {
    std::vector<SignedPermutation> out;
    std::unordered_set<SignedPermutation> seen;
    for (int i = 1; i <= n_; ++i) {
      if (seen.insert(generator(i)).second) out.push_back(generator(i));
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
      for (int i = 1; i <= n_; ++i) {
        const SignedPermutation s = generator(i);
        SignedPermutation c = compose(compose(s, out[k]), s);
        if (seen.insert(c).second) out.push_back(std::move(c));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void cross_check_length() const {
    // Breadth-first distance in the Cayley graph must match the closed form.
    std::unordered_map<SignedPermutation, int> dist{{identity(), 0}};
    std::vector<SignedPermutation> frontier{identity()};
    while (!frontier.empty()) {
      std::vector<SignedPermutation> next;
      for (const auto& x : frontier) {
        const int d = dist.at(x);
        if (length(x) != d) throw InvariantViolation("type-B length formula disagrees with BFS at " + x.to_string());
        for (int i = 1; i <= n_; ++i) {
          SignedPermutation y = compose(x, generator(i));
          if (dist.emplace(y, d + 1).second) next.push_back(std::move(y));
        }
      }
      frontier = std::move(next);
    }
  }

  int n_;
  DynkinDiagram diagram_;
  std::shared_ptr<const std::vector<SignedPermutation>> reflections_;
};

// --- generic helpers ------------------------------------------------------

/// A reduced word for w, read left to right, built by peeling off the
/// smallest right descent.
template <CoxeterGroup G>
std::vector<int> reduced_word(const G& g, typename G::element_type w) {
  std::vector<int> word;
  for (NodeSet d = g.right_descents(w); !d.empty(); d = g.right_descents(w)) {
    const int s = d.min();
    word.push_back(s);
    w = g.multiply(w, g.generator(s));
  }
  std::reverse(word.begin(), word.end());
  return word;
}

/// Product of generators; indices must be within 1..rank.
template <CoxeterGroup G>
typename G::element_type evaluate(const G& g, const std::vector<int>& word) {
  auto x = g.identity();
  for (int s : word) x = g.multiply(x, g.generator(s));
  return x;
}

/// Simple reflections appearing in any reduced word for w.
template <CoxeterGroup G>
NodeSet support(const G& g, const typename G::element_type& w) {
  NodeSet out;
  for (int s : reduced_word(g, w)) out.insert(s);
  return out;
}

inline NodeSet support(const SymmetricGroup&, const Permutation& w) {
  // s_i is in the support iff w does not stabilize {1..i}.
  NodeSet out;
  int running_max = 0;
  for (int i = 1; i < w.degree(); ++i) {
    running_max = std::max(running_max, w(i));
    if (running_max > i) out.insert(i);
  }
  return out;
}

template <CoxeterGroup G>
void check_subset(const G& g, NodeSet J) {
  if (!J.is_subset_of(g.diagram().nodes())) {
    throw ValidationError("subset " + J.to_string() + " is not a set of simple reflections of a rank-" +
                          std::to_string(g.rank()) + " group");
  }
}

/// w_0(J): the longest element of W_J, found by ascending in right weak
/// order until no generator of J increases length.
template <CoxeterGroup G>
typename G::element_type longest_element(const G& g, NodeSet J) {
  check_subset(g, J);
  auto x = g.identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (int s : J.to_vector()) {
      if (!g.right_descents(x).contains(s)) {
        x = g.multiply(x, g.generator(s));
        grew = true;
      }
    }
  }
  return x;
}

/// Type A shortcut: reverse each run of consecutive nodes a..b on the
/// positions a..b+1.
inline Permutation longest_element(const SymmetricGroup& g, NodeSet J) {
  check_subset(g, J);
  std::vector<int> v = g.identity().one_line();
  for (int s : J.to_vector()) {
    if (J.contains(s - 1)) continue;
    int b = s;
    while (J.contains(b + 1)) ++b;
    std::reverse(v.begin() + (s - 1), v.begin() + (b + 1));
  }
  return Permutation(std::move(v));
}

}  // namespace bruhat
