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
/// Polished elements: products over disjoint connected pieces S_i of
/// w_0(J_i) w_0(J_i ∩ J_i') w_0(J_i') with J_i ∪ J_i' = S_i and J_i ∩ J_i'
/// totally disconnected. For permutations, a constructive decomposition
/// driven by the six forbidden patterns; for any small diagram, a brute
/// force test.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bruhat/bruhat_poset.hpp"
#include "bruhat/dynkin.hpp"
#include "bruhat/errors.hpp"
#include "bruhat/groups.hpp"
#include "bruhat/node_set.hpp"
#include "bruhat/permutation.hpp"

namespace bruhat {

// --- patterns -------------------------------------------------------------

inline const std::array<Permutation, 2>& smooth_patterns() {
  static const std::array<Permutation, 2> p = {parse_permutation("3412"), parse_permutation("4231")};
  return p;
}

inline const std::array<Permutation, 6>& selfdual_patterns() {
  static const std::array<Permutation, 6> p = {
      parse_permutation("3412"),  parse_permutation("4231"),  parse_permutation("34521"),
      parse_permutation("45321"), parse_permutation("54123"), parse_permutation("54312")};
  return p;
}

inline bool avoids_smooth_patterns(const Permutation& w) {
  for (const auto& p : smooth_patterns()) {
    if (contains_pattern(w, p)) return false;
  }
  return true;
}

/// First occurrence among 3412, 4231, 34521, 45321, 54123, 54312, in that
/// order.
inline std::optional<PatternOccurrence> selfdual_witness(const Permutation& w) {
  for (const auto& p : selfdual_patterns()) {
    if (auto occ = contains_pattern(w, p)) return occ;
  }
  return std::nullopt;
}

inline bool avoids_selfdual_patterns(const Permutation& w) { return !selfdual_witness(w).has_value(); }

inline std::string describe(const PatternOccurrence& occ) {
  std::string out = occ.pattern.to_string() + " at indices (";
  for (std::size_t i = 0; i < occ.indices.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(occ.indices[i]);
  }
  return out + ")";
}

/// The input contains a forbidden pattern; `occurrence` is a witness.
class PatternContainment : public ValidationError {
 public:
  PatternContainment(const Permutation& w, PatternOccurrence occ)
      : ValidationError(w.to_string() + " contains " + describe(occ)), occurrence_(std::move(occ)) {}
  const PatternOccurrence& occurrence() const { return occurrence_; }

 private:
  PatternOccurrence occurrence_;
};

// --- types and one reduction step -----------------------------------------

enum class StepType { n, r0, r1, l0, l1 };

inline std::string to_string(StepType t) {
  switch (t) {
    case StepType::n: return "n";
    case StepType::r0: return "r0";
    case StepType::r1: return "r1";
    case StepType::l0: return "l0";
    case StepType::l1: return "l1";
  }
  return "?";
}

inline bool is_left_type(StepType t) { return t == StepType::l0 || t == StepType::l1; }
inline bool is_overlap_type(StepType t) { return t == StepType::r1 || t == StepType::l1; }

struct TypeTag {
  StepType type = StepType::n;
  int t = 0;
  std::vector<int> c_chain;  // positions c_0 < ... < c_t of the region C

  friend bool operator==(const TypeTag&, const TypeTag&) = default;
};

namespace detail {

struct Regions {
  std::vector<int> c;  // positions in C, increasing
  std::vector<int> r;
  std::vector<int> l;
};

inline Regions regions(const Permutation& w) {
  Regions out;
  const int n = w.degree();
  const int p1 = inverse(w)(1);
  const int top = w(1);
  for (int a = 1; a <= n; ++a) {
    const int x = w(a);
    if (a <= p1 && x <= top) {
      if (!out.c.empty() && w(out.c.back()) < x) {
        throw ValidationError(w.to_string() + " has an increasing pair in region C, so it contains 4231");
      }
      out.c.push_back(a);
    } else if (a > 1 && a < p1 && x > top) {
      out.r.push_back(a);
    } else if (a > p1 && x > 1 && x < top) {
      out.l.push_back(a);
    }
  }
  return out;
}

/// r0 or r1 for a permutation whose region R is nonempty.
inline StepType right_subtype(const Permutation& w, const Regions& g) {
  const int t = static_cast<int>(g.c.size()) - 1;
  auto c = [&](int i) { return g.c[static_cast<std::size_t>(i)]; };
  bool r1 = false;
  for (int a : g.r) {
    if (t >= 1 && a > c(t - 1)) continue;
    if (t >= 2 && a > c(t - 2)) {
      r1 = true;
      continue;
    }
    throw ValidationError(w.to_string() + " has a point of R below c_{t-2}, so it contains 45321");
  }
  return r1 ? StepType::r1 : StepType::r0;
}

}  // namespace detail

/// Type of a smooth permutation read off its first row and column. No
/// fixed points are stripped: w(1) = 1 gives type n with t = 0.
inline TypeTag classify_type(const Permutation& w) {
  if (w.degree() == 0) return {StepType::n, 0, {}};
  const auto g = detail::regions(w);
  TypeTag tag{StepType::n, static_cast<int>(g.c.size()) - 1, g.c};
  if (!g.r.empty() && !g.l.empty()) {
    throw ValidationError(w.to_string() + " has both R and L nonempty, so it contains 3412");
  }
  if (!g.r.empty()) {
    tag.type = detail::right_subtype(w, g);
  } else if (!g.l.empty()) {
    const Permutation v = inverse(w);
    tag.type = detail::right_subtype(v, detail::regions(v)) == StepType::r1 ? StepType::l1 : StepType::l0;
  }
  return tag;
}

struct ReductionStep {
  Permutation next;
  NodeSet K;    // {s_{m+1}, ..., s_{m+t}} for m leading fixed points
  TypeTag tag;  // c_chain in positions of the unstripped permutation
};

/// One step of the reduction towards the identity. Leading fixed points
/// are stripped first; the step then multiplies by w_0(J), J = {s_1..s_t},
/// on the side (and with the extra s_t) dictated by the type.
inline ReductionStep decompose_step(const Permutation& w) {
  const int n = w.degree();
  int m = 0;
  while (m < n && w(m + 1) == m + 1) ++m;
  if (m == n) throw ValidationError("the identity has no reduction step");

  std::vector<int> vals;
  for (int i = m + 1; i <= n; ++i) vals.push_back(w(i) - m);
  const Permutation v(std::move(vals));
  const int N = v.degree();
  TypeTag tag = classify_type(v);
  const int t = tag.t;

  const Permutation w0J = longest_element(SymmetricGroup(N), NodeSet::range(1, t));
  const Permutation st = t >= 1 ? Permutation::simple_reflection(N, t) : Permutation::identity(N);
  Permutation next;
  int fixed = 0;
  switch (tag.type) {
    case StepType::n:
      next = compose(w0J, v);
      fixed = t + 1;
      break;
    case StepType::r0:
      next = compose(w0J, v);
      fixed = t;
      break;
    case StepType::r1:
      next = compose(st, compose(w0J, v));
      fixed = t - 1;
      break;
    case StepType::l0:
      next = compose(v, w0J);
      fixed = t;
      break;
    case StepType::l1:
      next = compose(compose(v, w0J), st);
      fixed = t - 1;
      break;
  }
  for (int i = 1; i <= fixed; ++i) {
    if (next(i) != i) {
      throw ValidationError("reduction of " + w.to_string() + " (type " + to_string(tag.type) +
                            ") leaves the expected parabolic subgroup; the input contains a forbidden pattern");
    }
  }
  for (int& c : tag.c_chain) c += m;
  return {direct_sum(Permutation::identity(m), next), NodeSet::range(1, t).shifted(m), std::move(tag)};
}

// --- decompositions -------------------------------------------------------

struct PolishedBlock {
  NodeSet S;
  NodeSet J;
  NodeSet Jp;

  friend bool operator==(const PolishedBlock&, const PolishedBlock&) = default;
};

/// Blocks in product order: the element is block 1 times block 2 times ...
struct PolishedDecomposition {
  std::vector<PolishedBlock> blocks;

  friend bool operator==(const PolishedDecomposition&, const PolishedDecomposition&) = default;
};

/// Structural checks against a diagram; throws ValidationError.
inline void validate_decomposition(const PolishedDecomposition& d, const DynkinDiagram& diagram) {
  NodeSet used;
  for (const auto& b : d.blocks) {
    const std::string where = "block " + b.S.to_string();
    if (!b.S.is_subset_of(diagram.nodes())) throw ValidationError(where + " is not inside the diagram");
    if (!diagram.is_connected(b.S)) throw ValidationError(where + " is not connected");
    if ((b.J | b.Jp) != b.S) throw ValidationError(where + ": J ∪ J' must equal S");
    if (!diagram.is_totally_disconnected(b.J & b.Jp)) throw ValidationError(where + ": J ∩ J' is not totally disconnected");
    if (used.intersects(b.S)) throw ValidationError(where + " overlaps an earlier block");
    used = used | b.S;
  }
}

/// w_0(J) w_0(J ∩ J') w_0(J').
template <CoxeterGroup G>
typename G::element_type block_element(const G& g, const PolishedBlock& b) {
  return g.multiply(g.multiply(longest_element(g, b.J), longest_element(g, b.J & b.Jp)), longest_element(g, b.Jp));
}

template <CoxeterGroup G>
typename G::element_type reconstruct(const G& g, const PolishedDecomposition& d) {
  validate_decomposition(d, g.diagram());
  auto x = g.identity();
  for (const auto& b : d.blocks) x = g.multiply(x, block_element(g, b));
  return x;
}

/// Type A only: the diagram must be the path A_r, and the result lies in
/// S_{r+1}.
inline Permutation reconstruct(const PolishedDecomposition& d, const DynkinDiagram& diagram) {
  if (diagram != DynkinDiagram::type_a(diagram.rank())) {
    throw ValidationError("permutation reconstruction needs a type A diagram");
  }
  return reconstruct(SymmetricGroup(diagram.rank() + 1), d);
}

struct RecordedStep {
  NodeSet K;
  StepType type;
  Permutation after;
};

/// Every nonempty step from w down to the identity.
inline std::vector<RecordedStep> reduction_steps(const Permutation& w) {
  std::vector<RecordedStep> out;
  Permutation x = w;
  while (!x.is_identity()) {
    auto step = decompose_step(x);
    out.push_back({step.K, step.tag.type, step.next});
    x = std::move(step.next);
  }
  return out;
}

/// The decomposition of a permutation avoiding the six patterns. The steps
/// are cut into chains K_1..K_f where K_1..K_{f-1} have overlap types and
/// K_f does not; each chain becomes one block with J the odd-numbered K's
/// and J' the even-numbered ones (swapped when K_1 is a left type). The
/// block sits left of the remainder unless K_f has type l0.
inline PolishedDecomposition polished_decompose(const Permutation& w) {
  if (auto occ = selfdual_witness(w)) throw PatternContainment(w, minimal_occurrence(w, *occ));
  const auto steps = reduction_steps(w);

  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    const int b = steps[i].K.max();
    const int a = steps[i + 1].K.min();
    bool ok = false;
    switch (steps[i].type) {
      case StepType::n: ok = b < a - 1; break;
      case StepType::r0:
      case StepType::l0: ok = b == a - 1; break;
      case StepType::r1:
      case StepType::l1: ok = b == a; break;
    }
    if (!ok) {
      throw InvariantViolation("step sets " + steps[i].K.to_string() + " and " + steps[i + 1].K.to_string() +
                               " of " + w.to_string() + " break the adjacency rule for type " +
                               to_string(steps[i].type));
    }
  }

  struct Chain {
    PolishedBlock block;
    bool left_of_rest;
  };
  std::vector<Chain> chains;
  for (std::size_t i = 0; i < steps.size();) {
    std::size_t j = i;
    while (j < steps.size() && is_overlap_type(steps[j].type)) ++j;
    if (j == steps.size()) throw InvariantViolation("reduction of " + w.to_string() + " ended on an overlap step");
    NodeSet odd, even;
    for (std::size_t k = i; k <= j; ++k) {
      if ((k - i) % 2 == 0) {
        odd = odd | steps[k].K;
      } else {
        even = even | steps[k].K;
      }
    }
    PolishedBlock b{odd | even, odd, even};
    if (j > i && is_left_type(steps[i].type)) std::swap(b.J, b.Jp);
    chains.push_back({b, steps[j].type != StepType::l0});
    i = j + 1;
  }

  PolishedDecomposition d;
  for (auto it = chains.rbegin(); it != chains.rend(); ++it) {
    if (it->left_of_rest) {
      d.blocks.insert(d.blocks.begin(), it->block);
    } else {
      d.blocks.push_back(it->block);
    }
  }
  if (reconstruct(SymmetricGroup(w.degree()), d) != w) {
    throw InvariantViolation("polished decomposition of " + w.to_string() + " does not reconstruct it");
  }
  return d;
}

// --- brute force ----------------------------------------------------------

/// Exhaustive search for block data. Pieces are peeled from the
/// left: once the first piece S is chosen, its factor is forced to be the
/// W_S part of the left parabolic decomposition, so the search only
/// branches on the choice of S.
template <CoxeterGroup G>
bool is_polished_bruteforce(const G& g, const typename G::element_type& w) {
  using E = typename G::element_type;
  if (g.rank() > 8) throw CapacityError("brute-force polished test supports rank <= 8");
  const DynkinDiagram& diagram = g.diagram();

  std::unordered_map<std::uint64_t, std::unordered_set<E>> block_cache;
  auto blocks_on = [&](NodeSet S) -> const std::unordered_set<E>& {
    auto [it, fresh] = block_cache.try_emplace(S.bits());
    if (fresh) {
      const auto nodes = S.to_vector();
      std::size_t combos = 1;
      for (std::size_t i = 0; i < nodes.size(); ++i) combos *= 3;
      for (std::size_t code = 0; code < combos; ++code) {
        // Each node goes to J only, J' only, or both.
        NodeSet J, Jp;
        std::size_t c = code;
        for (int s : nodes) {
          if (c % 3 != 1) J.insert(s);
          if (c % 3 != 0) Jp.insert(s);
          c /= 3;
        }
        if (!diagram.is_totally_disconnected(J & Jp)) continue;
        it->second.insert(block_element(g, PolishedBlock{S, J, Jp}));
      }
    }
    return it->second;
  };

  std::unordered_set<E> failed;
  auto search = [&](auto&& self, const E& y) -> bool {
    const NodeSet supp = support(g, y);
    if (supp.empty()) return true;
    if (failed.contains(y)) return false;
    const std::uint64_t full = supp.bits();
    for (std::uint64_t sub = full; sub != 0; sub = (sub - 1) & full) {
      const NodeSet S = NodeSet::from_bits(sub);
      if (!diagram.is_connected(S)) continue;
      auto d = parabolic_decompose(g, y, S, Side::left);
      if (support(g, d.quotient_part) != supp - S) continue;
      if (!blocks_on(S).contains(d.parabolic_part)) continue;
      if (self(self, d.quotient_part)) return true;
    }
    failed.insert(y);
    return false;
  };
  return search(search, w);
}

inline bool is_polished_bruteforce(const Permutation& w) { return is_polished_bruteforce(SymmetricGroup(w.degree()), w); }

}  // namespace bruhat
