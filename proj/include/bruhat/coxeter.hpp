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
/// Coxeter presentations of types A and B, and word evaluation into signed
/// permutations.

#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "bruhat/dynkin.hpp"
#include "bruhat/errors.hpp"
#include "bruhat/groups.hpp"
#include "bruhat/node_set.hpp"
#include "bruhat/signed_permutation.hpp"

namespace bruhat {

enum class CoxeterFamily { A, B };

/// A Coxeter matrix together with its diagram. Only the path-shaped
/// matrices of types A and B are accepted.
class CoxeterPresentation {
 public:
  static CoxeterPresentation type_a(int rank) { return CoxeterPresentation(DynkinDiagram::type_a(rank), CoxeterFamily::A); }
  static CoxeterPresentation type_b(int rank) {
    if (rank < 1) throw ValidationError("B_n needs rank >= 1");
    return CoxeterPresentation(DynkinDiagram::type_b(rank), CoxeterFamily::B);
  }

  /// Recognizes the matrix as type A or B; anything else is rejected. A
  /// rank-1 matrix is read as A_1.
  static CoxeterPresentation from_matrix(const std::vector<std::vector<int>>& m) {
    const int r = static_cast<int>(m.size());
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(m[static_cast<std::size_t>(i)].size()) != r) throw ValidationError("Coxeter matrix is not square");
      for (int j = 0; j < r; ++j) {
        const int x = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (x != m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) throw ValidationError("Coxeter matrix is not symmetric");
        if ((i == j) != (x == 1) || x < 1) throw ValidationError("Coxeter matrix needs m(s,s) = 1 and m(s,t) >= 2");
      }
    }
    DynkinDiagram d(r);
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) {
        const int x = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (x >= 3) d.add_edge(i + 1, j + 1, x);
      }
    }
    if (d == DynkinDiagram::type_a(r)) return CoxeterPresentation(d, CoxeterFamily::A);
    if (r >= 2 && d == DynkinDiagram::type_b(r)) return CoxeterPresentation(d, CoxeterFamily::B);
    throw ValidationError("unsupported Coxeter matrix: only types A and B are implemented");
  }

  int rank() const { return diagram_.rank(); }
  CoxeterFamily family() const { return family_; }
  const DynkinDiagram& diagram() const { return diagram_; }

  std::vector<std::vector<int>> coxeter_matrix() const {
    std::vector<std::vector<int>> m(static_cast<std::size_t>(rank()), std::vector<int>(static_cast<std::size_t>(rank())));
    for (int i = 1; i <= rank(); ++i) {
      for (int j = 1; j <= rank(); ++j) m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = diagram_.label(i, j);
    }
    return m;
  }

  /// Degree of the permutation realization: rank + 1 for A, rank for B.
  int degree() const { return family_ == CoxeterFamily::A ? rank() + 1 : rank(); }

  std::string name() const { return (family_ == CoxeterFamily::A ? "A" : "B") + std::to_string(rank()); }

 private:
  CoxeterPresentation(DynkinDiagram d, CoxeterFamily f) : diagram_(std::move(d)), family_(f) {}

  DynkinDiagram diagram_;
  CoxeterFamily family_;
};

struct WordValue {
  SignedPermutation element;
  int length = 0;
  bool reduced = true;
};

/// Product s_{i_1} ... s_{i_k} as a signed permutation (all signs positive in
/// type A), with its length and whether the word was reduced.
inline WordValue evaluate_word(const std::vector<int>& word, const CoxeterPresentation& p) {
  for (int s : word) {
    if (s < 1 || s > p.rank()) {
      throw ValidationError("unknown generator s_" + std::to_string(s) + " in " + p.name());
    }
  }
  if (p.family() == CoxeterFamily::A) {
    const SymmetricGroup g(p.degree());
    const Permutation x = evaluate(g, word);
    const int len = g.length(x);
    return {SignedPermutation(x), len, len == static_cast<int>(word.size())};
  }
  const HyperoctahedralGroup g(p.degree());
  SignedPermutation x = evaluate(g, word);
  const int len = g.length(x);
  return {std::move(x), len, len == static_cast<int>(word.size())};
}

/// "3 2 3 1 2 3 1 2" or "3,2,3,1"; an empty string is the empty word.
inline std::vector<int> parse_word(std::string_view text) {
  std::vector<int> out;
  if (detail::trim(text).empty()) return out;
  for (std::string_view tok : detail::split_tokens(text)) out.push_back(detail::parse_int_token(tok, "generator"));
  return out;
}

/// Every conjugate of a generator, deduplicated and sorted.
inline std::vector<SignedPermutation> all_reflections(const CoxeterPresentation& p) {
  if (p.rank() > 8) throw CapacityError("reflection enumeration supported for rank <= 8");
  if (p.family() == CoxeterFamily::A) {
    std::vector<SignedPermutation> out;
    for (const auto& t : SymmetricGroup(p.degree()).reflections()) out.emplace_back(t);
    std::sort(out.begin(), out.end());
    return out;
  }
  return HyperoctahedralGroup(p.degree()).reflections();
}

inline SignedPermutation longest_element(const CoxeterPresentation& p, NodeSet J) {
  if (p.family() == CoxeterFamily::A) {
    return SignedPermutation(longest_element(SymmetricGroup(p.degree()), J));
  }
  return longest_element(HyperoctahedralGroup(p.degree()), J);
}

}  // namespace bruhat
