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

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "bruhat/bruhat.hpp"
#include "oracles.hpp"

namespace bruhat {
namespace {

Permutation P(const char* s) { return parse_permutation(s); }

TEST(BruhatLeq, Examples) {
  EXPECT_TRUE(bruhat_leq(Permutation::identity(5), P("34521")));
  EXPECT_TRUE(bruhat_leq(P("34521"), P("34521")));
  EXPECT_TRUE(bruhat_leq(P("21435"), P("34521")));
  EXPECT_FALSE(bruhat_leq(P("34521"), P("21435")));
  EXPECT_THROW(bruhat_leq(P("21"), P("321")), DegreeMismatch);
}

TEST(BruhatLeq, AgreesWithSubwordOracleInS5) {
  const SymmetricGroup g(5);
  const auto all = oracle::all_permutations(5);
  int pairs = 0;
  for (const auto& w : all) {
    const auto down = oracle::subword_down_set(g, w);
    for (const auto& u : all) {
      ASSERT_EQ(bruhat_leq(u, w), down.contains(u)) << u.to_string() << " vs " << w.to_string();
      ++pairs;
    }
  }
  EXPECT_EQ(pairs, 14400);
}

TEST(BuildInterval, Examples) {
  const auto top = build_interval(P("4321"));
  EXPECT_EQ(top.size(), 24u);
  EXPECT_EQ(rank_profile(top), (std::vector<std::size_t>{1, 3, 5, 6, 5, 3, 1}));

  const auto fig = build_interval(P("34521"));
  const auto prof = rank_profile(fig);
  ASSERT_EQ(prof.size(), 8u);
  EXPECT_EQ(prof[1], 4u);
  EXPECT_EQ(prof[2], 9u);
  EXPECT_EQ(prof[5], 9u);
  EXPECT_EQ(prof[6], 4u);

  const auto chain = build_interval(P("213"));
  EXPECT_EQ(chain.size(), 2u);
  EXPECT_EQ(chain.cover_count(), 1u);
  EXPECT_EQ(rank_profile(build_interval(Permutation::identity(4))), std::vector<std::size_t>{1});
}

TEST(BuildInterval, IdsAndRanks) {
  const auto I = build_interval(P("34521"));
  EXPECT_EQ(I.top(), P("34521"));
  EXPECT_EQ(I.element(static_cast<int>(I.size()) - 1), Permutation::identity(5));
  for (int id = 1; id < static_cast<int>(I.size()); ++id) EXPECT_LE(I.rank_of(id), I.rank_of(id - 1));
  for (int k = 0; k <= I.length(); ++k) {
    for (int id : I.rank_level(k)) EXPECT_EQ(I.rank_of(id), k);
  }
  EXPECT_TRUE(I.rank_level(-1).empty());
  EXPECT_TRUE(I.rank_level(8).empty());
  EXPECT_FALSE(I.id_of(P("54321")).has_value());
}

TEST(BuildInterval, CoatomsAreMinimalInversionsAndAtomsCountSupport) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : oracle::all_permutations(n)) {
      const auto I = build_interval(w);
      if (I.length() >= 1) {
        ASSERT_EQ(I.rank_size(I.length() - 1), minimal_inversions(w).size()) << w.to_string();
        ASSERT_EQ(block_count(w), n - static_cast<int>(I.rank_size(1))) << w.to_string();
      } else {
        ASSERT_EQ(block_count(w), n);
      }
    }
  }
  // 4231 has more coatoms than atoms.
  const auto I = build_interval(P("4231"));
  EXPECT_EQ(I.rank_size(1), 3u);
  EXPECT_EQ(I.rank_size(I.length() - 1), 4u);
}

TEST(BuildInterval, CoversAreReflectionStepsAndIntervalIsDownSet) {
  for (int n = 1; n <= 5; ++n) {
    const SymmetricGroup g(n);
    const auto all = oracle::all_permutations(n);
    for (const auto& w : all) {
      const auto I = build_interval(w);
      std::size_t below = 0;
      for (const auto& u : all) below += bruhat_leq(u, w) ? 1 : 0;
      ASSERT_EQ(I.size(), below);
      for (int hi = 0; hi < static_cast<int>(I.size()); ++hi) {
        for (int lo = 0; lo < static_cast<int>(I.size()); ++lo) {
          const auto& v = I.element(hi);
          const auto& u = I.element(lo);
          bool reflection_step = false;
          if (I.rank_of(hi) == I.rank_of(lo) + 1) {
            for (const auto& t : g.reflections()) reflection_step = reflection_step || compose(v, t) == u;
          }
          ASSERT_EQ(I.covered_by(lo, hi), reflection_step) << u.to_string() << " < " << v.to_string();
        }
      }
    }
  }
}

TEST(BuildInterval, RankTwoSubintervalsAreDiamonds) {
  for (const auto& w : oracle::all_permutations(5)) {
    const auto I = build_interval(w);
    for (int hi = 0; hi < static_cast<int>(I.size()); ++hi) {
      std::map<int, int> middles;
      for (int m : I.down_covers(hi)) {
        for (int lo : I.down_covers(m)) ++middles[lo];
      }
      for (auto [lo, count] : middles) ASSERT_EQ(count, 2) << w.to_string();
    }
  }
}

TEST(DegreeExtremes, Examples) {
  EXPECT_EQ(degree_extremes(build_interval(P("34521"))), (DegreeExtremes{5, 6}));
  const auto d = degree_extremes(build_interval(P("4321")));
  EXPECT_EQ(d.max_atom_up_degree, d.max_coatom_down_degree);
  EXPECT_EQ(degree_extremes(build_interval(P("321"))), (DegreeExtremes{2, 2}));
  EXPECT_THROW(degree_extremes(build_interval(P("21"))), ValidationError);
}

TEST(TopHeavy, RanksAndCoatomExcess) {
  const Permutation p4231 = P("4231");
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : oracle::all_permutations(n)) {
      const auto I = build_interval(w);
      const auto prof = rank_profile(I);
      const int len = I.length();
      for (int k = 0; 2 * k <= len; ++k) {
        ASSERT_LE(prof[static_cast<std::size_t>(k)], prof[static_cast<std::size_t>(len - k)]) << w.to_string();
      }
      if (len >= 1) {
        ASSERT_GE(prof[static_cast<std::size_t>(len - 1)], prof[1]);
        if (contains_pattern(w, p4231)) {
          ASSERT_GT(prof[static_cast<std::size_t>(len - 1)], prof[1]) << w.to_string();
        }
      }
    }
  }
}

TEST(TopHeavy, RankSymmetryIffSmooth) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& w : oracle::all_permutations(n)) {
      const auto prof = rank_profile(build_interval(w));
      const bool symmetric = std::equal(prof.begin(), prof.end(), prof.rbegin());
      ASSERT_EQ(symmetric, avoids_smooth_patterns(w)) << w.to_string();
    }
  }
}

TEST(Diamonds, AdjacentMinimalInversions) {
  // For minimal inversions (p,q) and (q,r) of a 4231-avoiding w, both
  // w t_pq t_qr and w t_qr t_pq are covered by both coatoms.
  const Permutation p4231 = P("4231");
  int checked = 0;
  for (int n = 3; n <= 6; ++n) {
    for (const auto& w : oracle::all_permutations(n)) {
      if (contains_pattern(w, p4231)) continue;
      const auto inv = minimal_inversions(w);
      const std::set<std::pair<int, int>> s(inv.begin(), inv.end());
      const auto I = build_interval(w);
      for (auto [p, q] : inv) {
        for (auto [q2, r] : inv) {
          if (q2 != q) continue;
          const auto tpq = Permutation::transposition(n, p, q);
          const auto tqr = Permutation::transposition(n, q, r);
          const int c1 = *I.id_of(compose(w, tpq));
          const int c2 = *I.id_of(compose(w, tqr));
          for (const auto& x : {compose(compose(w, tpq), tqr), compose(compose(w, tqr), tpq)}) {
            const auto id = I.id_of(x);
            ASSERT_TRUE(id.has_value()) << w.to_string();
            ASSERT_TRUE(I.covered_by(*id, c1)) << w.to_string();
            ASSERT_TRUE(I.covered_by(*id, c2)) << w.to_string();
          }
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(ParabolicDecompose, Examples) {
  const auto d = parabolic_decompose(P("321"), NodeSet{2});
  EXPECT_EQ(d.quotient_part, P("312"));
  EXPECT_EQ(d.parabolic_part, P("132"));
  const auto e = parabolic_decompose(P("34521"), NodeSet{});
  EXPECT_EQ(e.quotient_part, P("34521"));
  EXPECT_EQ(e.parabolic_part, Permutation::identity(5));
  const SymmetricGroup g(5);
  const NodeSet J{2, 3};
  const auto f = parabolic_decompose(longest_element(g, J), J);
  EXPECT_EQ(f.quotient_part, Permutation::identity(5));
  EXPECT_EQ(f.parabolic_part, longest_element(g, J));
  EXPECT_THROW(parabolic_decompose(P("321"), NodeSet{3}), ValidationError);
}

TEST(ParabolicDecompose, LengthAdditiveBothSides) {
  for (int n = 1; n <= 5; ++n) {
    const SymmetricGroup g(n);
    for (const auto& w : oracle::all_permutations(n)) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.rank()); ++bits) {
        const NodeSet J = NodeSet::from_bits(bits << 1);
        const auto r = parabolic_decompose(w, J, Side::right);
        ASSERT_EQ(compose(r.quotient_part, r.parabolic_part), w);
        ASSERT_EQ(length(w), length(r.quotient_part) + length(r.parabolic_part));
        ASSERT_FALSE(descents(r.quotient_part).intersects(J));
        ASSERT_TRUE(support(g, r.parabolic_part).is_subset_of(J));

        const auto l = parabolic_decompose(w, J, Side::left);
        ASSERT_EQ(compose(l.parabolic_part, l.quotient_part), w);
        ASSERT_EQ(length(w), length(l.quotient_part) + length(l.parabolic_part));
        ASSERT_FALSE(descents(l.quotient_part, Side::left).intersects(J));
        // Mirror symmetry through the inverse.
        const auto m = parabolic_decompose(inverse(w), J, Side::right);
        ASSERT_EQ(inverse(m.quotient_part), l.quotient_part);
      }
    }
  }
}

TEST(ParabolicDecompose, ProjectionPreservesOrder) {
  const int n = 5;
  const SymmetricGroup g(n);
  const auto all = oracle::all_permutations(n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.rank()); ++bits) {
    const NodeSet J = NodeSet::from_bits(bits << 1);
    std::vector<Permutation> q;
    for (const auto& w : all) q.push_back(parabolic_decompose(w, J).quotient_part);
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (bruhat_leq(all[i], all[j])) {
          ASSERT_TRUE(bruhat_leq(q[i], q[j]));
        }
      }
    }
  }
}

TEST(BpDecomposition, Examples) {
  const SymmetricGroup g4(4);
  EXPECT_TRUE(is_bp_decomposition(g4, P("3412"), NodeSet{}));
  // Direct check for 3412 and J = {1}.
  const NodeSet J{1};
  const auto d = parabolic_decompose(P("3412"), J);
  const bool direct = (support(g4, d.quotient_part) & J).is_subset_of(descents(d.parabolic_part, Side::left));
  EXPECT_EQ(d.parabolic_part, Permutation::identity(4));
  EXPECT_EQ(support(g4, d.quotient_part), (NodeSet{1, 2, 3}));
  EXPECT_FALSE(direct);
  EXPECT_FALSE(is_bp_decomposition(g4, P("3412"), J));
  EXPECT_TRUE(is_bp_decomposition(g4, P("4321"), NodeSet{1, 2}));
}

TEST(MaxParabolicBelow, ExamplesAndBpCase) {
  const SymmetricGroup g3(3);
  EXPECT_EQ(max_parabolic_below(g3, P("321"), NodeSet{1}), P("213"));
  EXPECT_EQ(max_parabolic_below(g3, P("321"), NodeSet{}), Permutation::identity(3));
  for (int n = 2; n <= 5; ++n) {
    const SymmetricGroup g(n);
    for (const auto& w : oracle::all_permutations(n)) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.rank()); ++bits) {
        const NodeSet J = NodeSet::from_bits(bits << 1);
        const auto m = max_parabolic_below(g, w, J);
        ASSERT_TRUE(bruhat_leq(m, w));
        if (is_bp_decomposition(g, w, J)) {
          ASSERT_EQ(m, parabolic_decompose(w, J).parabolic_part) << w.to_string();
        }
      }
    }
  }
}

TEST(ProductFactorization, DisjointSupportsGiveProductPosets) {
  // For u, v with disjoint commuting-free supports, [e, uv] is the product
  // of [e, u] and [e, v]: u'v' <= uv iff u' <= u and v' <= v, and the rank
  // profile is the convolution.
  const int n = 6;
  const SymmetricGroup g(n);
  const auto all = oracle::all_permutations(n);
  int pairs = 0;
  for (const auto& u : all) {
    const NodeSet su = support(g, u);
    if (su.empty() || su.max() > 3) continue;
    for (const auto& v : all) {
      const NodeSet sv = support(g, v);
      if (sv.empty() || sv.intersects(su)) continue;
      const auto Iu = build_interval(u);
      const auto Iv = build_interval(v);
      const auto Iw = build_interval(compose(u, v));
      ASSERT_EQ(Iw.size(), Iu.size() * Iv.size());
      std::set<std::pair<int, int>> product_covers;
      for (auto [lo, hi] : Iu.covers()) {
        for (const auto& y : Iv.elements()) {
          product_covers.emplace(*Iw.id_of(compose(Iu.element(lo), y)), *Iw.id_of(compose(Iu.element(hi), y)));
        }
      }
      for (auto [lo, hi] : Iv.covers()) {
        for (const auto& x : Iu.elements()) {
          product_covers.emplace(*Iw.id_of(compose(x, Iv.element(lo))), *Iw.id_of(compose(x, Iv.element(hi))));
        }
      }
      const auto c = Iw.covers();
      const std::set<std::pair<int, int>> got(c.begin(), c.end());
      ASSERT_EQ(got, product_covers);
      if (++pairs > 400) return;
    }
  }
}

TEST(FromParts, RejectsMalformedInput) {
  using I = BruhatInterval<SymmetricGroup>;
  EXPECT_THROW(I::from_parts({}, {}, {}), ValidationError);
  EXPECT_THROW(I::from_parts({P("21"), P("12")}, {1, 0}, {{0, 1}}), ValidationError);
  EXPECT_THROW(I::from_parts({P("21"), P("21")}, {1, 1}, {}), ValidationError);
  const auto ok = I::from_parts({P("21"), P("12")}, {1, 0}, {{1, 0}});
  EXPECT_EQ(ok, build_interval(P("21")));
}

}  // namespace
}  // namespace bruhat
